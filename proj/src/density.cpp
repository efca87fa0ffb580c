#include "cflab/density.hpp"

#include <algorithm>
#include <cmath>

#include "cflab/errors.hpp"

namespace cflab {

namespace {

constexpr double pi = 3.14159265358979323846;

double sinc(double z) {
  if (std::abs(z) < 1e-8) return 1.0 - z * z / 6.0;
  return std::sin(z) / z;
}

struct Eval {
  double x;
  double operator()(const TriangularParams& p) const {
    const double half = 0.5 * p.a;
    if (std::abs(x) >= half) return 0.0;
    return 2.0 * (p.a - 2.0 * std::abs(x)) / (p.a * p.a);
  }
  double operator()(const GaussianParams& p) const {
    const double z = (x - p.mean) / p.sd;
    return std::exp(-0.5 * z * z) / (p.sd * std::sqrt(2.0 * pi));
  }
  double operator()(const RaisedCosineParams& p) const {
    const double len = 2.0 * pi / p.sigma;
    const double u = x - p.alpha;
    if (u <= 0.0 || u >= len) return 0.0;
    return (p.sigma / (2.0 * pi)) * (1.0 - std::cos(p.sigma * u));
  }
  double operator()(const HalfSineParams& p) const {
    const double len = 2.0 * pi / p.sigma;
    const double u = x - p.alpha;
    if (u <= 0.0 || u >= len) return 0.0;
    return 0.25 * p.sigma * std::sin(0.5 * p.sigma * u);
  }
  double operator()(const PiecewiseLinearParams& p) const {
    const auto& k = p.knots;
    if (k.empty() || x <= k.front().first || x >= k.back().first) return 0.0;
    auto it = std::upper_bound(
        k.begin(), k.end(), x,
        [](double v, const auto& knot) { return v < knot.first; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double w = (x - lo.first) / (hi.first - lo.first);
    return lo.second + w * (hi.second - lo.second);
  }
};

}  // namespace

double DensitySpec::eval(double x) const {
  return std::visit(Eval{x}, params);
}

double eval_density(const DensitySpec& d, double x) { return d.eval(x); }

bool DensitySpec::has_closed_form_cf() const {
  return std::holds_alternative<TriangularParams>(params) ||
         std::holds_alternative<GaussianParams>(params);
}

std::complex<double> DensitySpec::closed_form_cf(double t) const {
  if (const auto* tri = std::get_if<TriangularParams>(&params)) {
    const double s = sinc(0.25 * tri->a * t);
    return {s * s, 0.0};
  }
  if (const auto* g = std::get_if<GaussianParams>(&params)) {
    const double mag = std::exp(-0.5 * g->sd * g->sd * t * t);
    return std::polar(mag, -t * g->mean);
  }
  throw validation_error("no closed-form characteristic function for this kind");
}

std::vector<double> DensitySpec::breakpoints() const {
  std::vector<double> pts;
  if (const auto* tri = std::get_if<TriangularParams>(&params)) {
    pts = {-0.5 * tri->a, 0.0, 0.5 * tri->a};
  } else if (const auto* pl = std::get_if<PiecewiseLinearParams>(&params)) {
    pts.reserve(pl->knots.size());
    for (const auto& k : pl->knots) pts.push_back(k.first);
  } else {
    for (const auto& iv : support.intervals()) {
      pts.push_back(iv.lo);
      pts.push_back(iv.hi);
    }
  }
  return pts;
}

const char* DensitySpec::kind_name() const {
  struct Name {
    const char* operator()(const TriangularParams&) const { return "triangular"; }
    const char* operator()(const GaussianParams&) const { return "gaussian"; }
    const char* operator()(const RaisedCosineParams&) const { return "raised_cosine"; }
    const char* operator()(const HalfSineParams&) const { return "half_sine"; }
    const char* operator()(const PiecewiseLinearParams&) const { return "piecewise_linear"; }
  };
  return std::visit(Name{}, params);
}

DensitySpec triangular_density(double a) {
  if (!(a > 0.0)) throw validation_error("triangular: width must be positive");
  DensitySpec d;
  d.params = TriangularParams{a};
  d.support = IntervalSet({{-0.5 * a, 0.5 * a}});
  d.smoothness = Smoothness::c0;
  d.endpoint_derivatives = {{4.0 / (a * a), -4.0 / (a * a)}};
  return d;
}

DensitySpec gaussian_density(double mean, double sd) {
  if (!(sd > 0.0)) throw validation_error("gaussian: sd must be positive");
  DensitySpec d;
  d.params = GaussianParams{mean, sd};
  // Numeric window: density below 1e-16 outside it, so the omitted tail mass
  // is under double-precision noise for any quadrature we run.
  const double peak = 1.0 / (sd * std::sqrt(2.0 * pi));
  const double r = sd * std::sqrt(2.0 * std::log(peak / 1e-16));
  d.support = IntervalSet({{mean - r, mean + r}});
  d.unbounded_tails = true;
  d.smoothness = Smoothness::smooth;
  return d;
}

DensitySpec raised_cosine_density(double alpha, double sigma) {
  if (!(sigma > 0.0)) throw validation_error("raised_cosine: sigma must be positive");
  DensitySpec d;
  d.params = RaisedCosineParams{alpha, sigma};
  d.support = IntervalSet({{alpha, alpha + 2.0 * pi / sigma}});
  d.smoothness = Smoothness::c1;
  d.endpoint_derivatives = {{0.0, 0.0}};
  return d;
}

DensitySpec half_sine_density(double alpha, double sigma) {
  if (!(sigma > 0.0)) throw validation_error("half_sine: sigma must be positive");
  DensitySpec d;
  d.params = HalfSineParams{alpha, sigma};
  d.support = IntervalSet({{alpha, alpha + 2.0 * pi / sigma}});
  d.smoothness = Smoothness::c1;
  const double slope = sigma * sigma / 8.0;
  d.endpoint_derivatives = {{slope, -slope}};
  return d;
}

DensitySpec piecewise_linear_density(std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 3) {
    throw validation_error("piecewise_linear: need at least 3 knots");
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i - 1].first < knots[i].first)) {
      throw validation_error("piecewise_linear: knot abscissas must be strictly increasing");
    }
  }
  if (knots.front().second != 0.0 || knots.back().second != 0.0) {
    throw validation_error("piecewise_linear: first and last ordinates must be zero");
  }
  double mass = 0.0;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    const auto& [x0, y0] = knots[i - 1];
    const auto& [x1, y1] = knots[i];
    if (y0 < 0.0 || y1 < 0.0) {
      throw validation_error("piecewise_linear: ordinates must be nonnegative");
    }
    mass += 0.5 * (y0 + y1) * (x1 - x0);
  }
  if (!(mass > 0.0)) throw validation_error("piecewise_linear: zero total mass");
  for (auto& k : knots) k.second /= mass;

  // Support components: maximal runs between zero-ordinate knots that
  // contain a positive knot (the interpolant vanishes only at such knots).
  std::vector<IntervalSet::Interval> comps;
  std::optional<double> run_start;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const bool seg_positive = knots[i].second > 0.0 || knots[i + 1].second > 0.0;
    if (seg_positive && !run_start) run_start = knots[i].first;
    if (!seg_positive && run_start) {
      comps.push_back({*run_start, knots[i].first});
      run_start.reset();
    }
  }
  if (run_start) comps.push_back({*run_start, knots.back().first});

  DensitySpec d;
  d.params = PiecewiseLinearParams{std::move(knots)};
  d.support = IntervalSet(std::move(comps));
  d.smoothness = Smoothness::c0;
  return d;
}

}  // namespace cflab
