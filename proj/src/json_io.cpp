#include "cflab/json_io.hpp"

#include "cflab/errors.hpp"

namespace cflab {

namespace {

double require_number(const json& j, const char* field, const char* ctx) {
  if (!j.contains(field) || !j.at(field).is_number()) {
    throw validation_error(std::string(ctx) + ": missing or non-numeric field '" +
                           field + "'");
  }
  return j.at(field).get<double>();
}

}  // namespace

json to_json(const IntervalSet& s) {
  json arr = json::array();
  for (const auto& iv : s.intervals()) arr.push_back({iv.lo, iv.hi});
  return json{{"intervals", std::move(arr)}};
}

IntervalSet interval_set_from_json(const json& j) {
  if (!j.contains("intervals") || !j.at("intervals").is_array()) {
    throw validation_error("interval set: missing array field 'intervals'");
  }
  std::vector<IntervalSet::Interval> ivs;
  for (const auto& e : j.at("intervals")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw validation_error("interval set: each interval must be [lo, hi]");
    }
    ivs.push_back({e[0].get<double>(), e[1].get<double>()});
  }
  return IntervalSet(std::move(ivs));
}

json to_json(const DensitySpec& d) {
  struct Visitor {
    json operator()(const TriangularParams& p) const {
      return {{"kind", "triangular"}, {"a", p.a}};
    }
    json operator()(const GaussianParams& p) const {
      return {{"kind", "gaussian"}, {"mean", p.mean}, {"sd", p.sd}};
    }
    json operator()(const RaisedCosineParams& p) const {
      return {{"kind", "raised_cosine"}, {"alpha", p.alpha}, {"sigma", p.sigma}};
    }
    json operator()(const HalfSineParams& p) const {
      return {{"kind", "half_sine"}, {"alpha", p.alpha}, {"sigma", p.sigma}};
    }
    json operator()(const PiecewiseLinearParams& p) const {
      json knots = json::array();
      for (const auto& [x, y] : p.knots) knots.push_back({x, y});
      return {{"kind", "piecewise_linear"}, {"knots", std::move(knots)}};
    }
  };
  return std::visit(Visitor{}, d.params);
}

DensitySpec density_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw validation_error("density: missing string field 'kind'");
  }
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "triangular") {
    return triangular_density(require_number(j, "a", "density"));
  }
  if (kind == "gaussian") {
    return gaussian_density(require_number(j, "mean", "density"),
                            require_number(j, "sd", "density"));
  }
  if (kind == "raised_cosine") {
    return raised_cosine_density(require_number(j, "alpha", "density"),
                                 require_number(j, "sigma", "density"));
  }
  if (kind == "half_sine") {
    return half_sine_density(require_number(j, "alpha", "density"),
                             require_number(j, "sigma", "density"));
  }
  if (kind == "piecewise_linear") {
    if (!j.contains("knots") || !j.at("knots").is_array()) {
      throw validation_error("density: missing array field 'knots'");
    }
    std::vector<std::pair<double, double>> knots;
    for (const auto& e : j.at("knots")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw validation_error("density: each knot must be [x, y]");
      }
      knots.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return piecewise_linear_density(std::move(knots));
  }
  throw validation_error("density: unknown kind '" + kind + "'");
}

json to_json(const SubstitutionPair& p) {
  return {{"phi", to_json(p.phi)},
          {"sigma", p.sigma},
          {"bump", {{"a", p.bump.a}, {"sigma", p.bump.sigma}, {"tau", p.bump.tau}}},
          {"rho", p.rho}};
}

SubstitutionPair pair_from_json(const json& j) {
  if (!j.is_object() || !j.contains("phi")) {
    throw validation_error("pair: missing field 'phi'");
  }
  if (!j.contains("bump") || !j.at("bump").is_object()) {
    throw validation_error("pair: missing object field 'bump'");
  }
  const auto& jb = j.at("bump");
  return SubstitutionPair{
      density_from_json(j.at("phi")), require_number(j, "sigma", "pair"),
      ExtremalBump(require_number(jb, "a", "pair.bump"),
                   require_number(jb, "sigma", "pair.bump"),
                   require_number(jb, "tau", "pair.bump")),
      require_number(j, "rho", "pair")};
}

json to_json(const UniquenessCertificate& c) {
  return {{"a", c.a},
          {"E", to_json(c.E)},
          {"E_measure", c.E_measure},
          {"projected_support", to_json(c.projected_support)},
          {"sigma", c.sigma}};
}

namespace {

json to_json(const CheckResult& c) {
  return {{"pass", c.pass}, {"value", c.value}, {"threshold", c.threshold}};
}

}  // namespace

json to_json(const VerificationReport& r) {
  return {{"checks",
           {{"outside_agreement", to_json(r.outside_agreement)},
            {"inside_difference", to_json(r.inside_difference)},
            {"nonnegativity", to_json(r.nonnegativity)},
            {"mass", to_json(r.mass)},
            {"psd", to_json(r.psd)}}},
          {"psd_detail",
           {{"is_psd", r.psd_detail.is_psd},
            {"min_eig", r.psd_detail.min_eig},
            {"n", r.psd_detail.n},
            {"tol", r.psd_detail.tol}}},
          {"psi_min_x", r.psi_min_x},
          {"all_pass", r.all_pass()}};
}

}  // namespace cflab
