#include "cflab/substitution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cflab/errors.hpp"
#include "cflab/parallel.hpp"
#include "cflab/quadrature.hpp"

namespace cflab {

namespace {

constexpr double pi = 3.14159265358979323846;

double integral_of_density(const DensitySpec& d) {
  const auto breaks = d.breakpoints();
  double total = 0.0;
  for (const auto& iv : d.support.intervals()) {
    total += integrate_adaptive([&](double x) { return d.eval(x); }, iv.lo,
                                iv.hi, 1e-11, breaks)
                 .value;
  }
  return total;
}

}  // namespace

double SubstitutionPair::psi(double x) const {
  return phi.eval(x) - rho * eval_bump(bump, x);
}

SubstitutionPair construct_pair(const DensitySpec& phi, double sigma,
                                double alpha, double beta) {
  if (!(sigma > 0.0)) throw validation_error("construct_pair: sigma must be positive");
  if (!(alpha < beta)) throw validation_error("construct_pair: requires alpha < beta");
  const double critical = 2.0 * pi / sigma;
  if (!(beta - alpha > critical)) {
    std::ostringstream msg;
    msg << "construct_pair: window length beta - alpha = " << (beta - alpha)
        << " must exceed the critical length 2*pi/sigma = " << critical;
    throw hypothesis_error(msg.str());
  }
  if (!phi.unbounded_tails &&
      !phi.support.contains_interval(alpha, beta, 1e-9)) {
    throw hypothesis_error(
        "construct_pair: (alpha, beta) is not contained in the essential "
        "support of phi");
  }

  const double eps = 0.5 * (beta - alpha) - pi / sigma;
  const double window_lo = alpha + eps;
  const double window_hi = beta - eps;
  const auto [min_x, min_phi] =
      min_on_interval([&](double x) { return phi.eval(x); }, window_lo,
                      window_hi, 20'000);
  (void)min_x;
  if (!(min_phi > 0.0)) {
    std::ostringstream msg;
    msg << "construct_pair: phi attains " << min_phi
        << " on the bump window [" << window_lo << ", " << window_hi
        << "]; phi must be strictly positive there";
    throw hypothesis_error(msg.str());
  }

  // tau at its admissible maximum makes max F = 1, so rho F <= rho <= phi on
  // the window while F <= 0 elsewhere.
  const double tau = pi / (2.0 * sigma);
  return SubstitutionPair{phi, sigma, ExtremalBump(window_lo, sigma, tau),
                          min_phi};
}

SubstitutionPair construct_pair_boundary(const DensitySpec& phi, double sigma,
                                         double alpha) {
  if (!(sigma > 0.0)) {
    throw validation_error("construct_pair_boundary: sigma must be positive");
  }
  const double b = 2.0 * pi / sigma;
  const auto& sup = phi.support;
  if (phi.unbounded_tails || sup.size() != 1 ||
      std::abs(sup.lo() - alpha) > 1e-9 * std::max(1.0, std::abs(alpha)) ||
      std::abs(sup.hi() - (alpha + b)) > 1e-9 * std::max(1.0, std::abs(alpha + b))) {
    throw hypothesis_error(
        "construct_pair_boundary: the support of phi must be exactly "
        "(alpha, alpha + 2*pi/sigma)");
  }
  if (phi.smoothness == Smoothness::c0 || !phi.endpoint_derivatives) {
    throw hypothesis_error(
        "construct_pair_boundary: phi must be C1 on its support with "
        "endpoint derivative metadata");
  }
  const auto [dl, dr] = *phi.endpoint_derivatives;
  if (std::abs(dl) <= 1e-9 || std::abs(dr) <= 1e-9) {
    throw hypothesis_error(
        "construct_pair_boundary: an endpoint derivative of phi vanishes, so "
        "the only admissible correction is identically zero; no substitution "
        "pair exists on the critical window");
  }

  // Slope guards: near each endpoint F grows like tau sigma^2/4 times the
  // distance, phi like |phi'| times the distance.
  const double tau_cap = pi / (2.0 * sigma);
  const double slope_cap = 4.0 * std::min(dl, -dr) / (sigma * sigma);
  double hi = std::min(tau_cap, slope_cap);
  if (!(hi > 0.0)) {
    throw hypothesis_error(
        "construct_pair_boundary: endpoint slopes of phi have the wrong "
        "signs for a density supported on the window");
  }

  const std::size_t grid_n = 10'000;
  auto feasible = [&](double tau) {
    const ExtremalBump trial(alpha, sigma, tau);
    const auto [x, v] = grid_min(
        [&](double x_) { return phi.eval(x_) - eval_bump(trial, x_); }, alpha,
        alpha + b, grid_n);
    (void)x;
    return v >= 0.0;
  };

  double lo = 0.0;
  if (feasible(hi)) {
    lo = hi;
  } else {
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      if (feasible(mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }
  if (!(lo > 0.0)) {
    throw numerical_error(
        "construct_pair_boundary: no positive amplitude passed the "
        "dense-grid domination check",
        lo);
  }

  // Back the grid optimum off until the continuum minimum clears zero; the
  // 10^4-point grid can overshoot between nodes by O(h^2).
  double tau = lo;
  for (int attempt = 0; attempt < 40; ++attempt) {
    tau *= 1.0 - 1e-6;
    const ExtremalBump trial(alpha, sigma, tau);
    const auto [gx, gv] = grid_min(
        [&](double x_) { return phi.eval(x_) - eval_bump(trial, x_); }, alpha,
        alpha + b, grid_n);
    const auto [rx, rv] = min_on_interval(
        [&](double x_) { return phi.eval(x_) - eval_bump(trial, x_); },
        std::max(alpha, gx - b / grid_n), std::min(alpha + b, gx + b / grid_n),
        2'000);
    (void)rx;
    if (gv >= 0.0 && rv >= -1e-13) {
      return SubstitutionPair{phi, sigma, trial, 1.0};
    }
  }
  throw numerical_error(
      "construct_pair_boundary: amplitude refinement failed to clear the "
      "nonnegativity floor",
      tau);
}

bool VerificationReport::all_pass() const {
  return outside_agreement.pass && inside_difference.pass &&
         nonnegativity.pass && mass.pass && psd.pass;
}

VerificationReport verify_pair(const SubstitutionPair& p,
                               std::span<const double> t_outside,
                               std::span<const double> t_inside,
                               const VerifyOptions& opts) {
  if (t_outside.empty() || t_inside.empty()) {
    throw validation_error("verify_pair: grids must be nonempty");
  }
  for (double t : t_outside) {
    if (!(std::abs(t) > p.sigma)) {
      throw validation_error("verify_pair: outside grid must satisfy |t| > sigma");
    }
  }
  for (double t : t_inside) {
    if (!(std::abs(t) < p.sigma)) {
      throw validation_error("verify_pair: inside grid must satisfy |t| < sigma");
    }
  }

  VerificationReport rep;

  // phi^ - psi^ = rho F^ by linearity of the transform, so the band checks
  // reduce to the quadrature transform of the bump.
  double outside_max = 0.0;
  for (double t : t_outside) {
    outside_max = std::max(outside_max, p.rho * std::abs(bump_transform(p.bump, t)));
  }
  rep.outside_agreement = {outside_max <= opts.outside_tol, outside_max,
                           opts.outside_tol};

  double inside_max = 0.0;
  for (double t : t_inside) {
    inside_max = std::max(inside_max, p.rho * std::abs(bump_transform(p.bump, t)));
  }
  const double inside_req = opts.inside_rel * p.rho * p.bump.max_value();
  rep.inside_difference = {inside_max >= inside_req, inside_max, inside_req};

  // Nonnegativity of psi on a wide grid.  The scan keeps the four smallest
  // local minima (the construction touches zero at up to four abscissas) and
  // refines each bracket before reporting the worst value.
  const double b = p.bump.period();
  double lo = p.bump.a - 10.0 * b;
  double hi = p.bump.window_right() + 10.0 * b;
  if (!p.phi.support.empty()) {
    lo = std::min(lo, p.phi.support.lo());
    hi = std::max(hi, p.phi.support.hi());
  }
  auto psi = [&](double x) { return p.psi(x); };
  const std::size_t n = opts.nonneg_grid;
  const double h = (hi - lo) / static_cast<double>(n);
  std::vector<std::pair<double, double>> dips;  // (value, x) local minima
  double prev2 = psi(lo), prev = psi(lo + h);
  double min_v = std::min(prev2, prev);
  double min_x = prev2 <= prev ? lo : lo + h;
  for (std::size_t i = 2; i <= n; ++i) {
    const double x = (i == n) ? hi : lo + static_cast<double>(i) * h;
    const double v = psi(x);
    if (v < min_v) {
      min_v = v;
      min_x = x;
    }
    if (prev <= prev2 && prev <= v) dips.emplace_back(prev, x - h);
    prev2 = prev;
    prev = v;
  }
  std::sort(dips.begin(), dips.end());
  if (dips.size() > 4) dips.resize(4);
  dips.emplace_back(min_v, min_x);
  for (const auto& [v0, x0] : dips) {
    const auto [rx, rv] =
        min_on_interval(psi, std::max(lo, x0 - h), std::min(hi, x0 + h), 2'000);
    if (rv < min_v) {
      min_v = rv;
      min_x = rx;
    }
  }
  rep.nonnegativity = {min_v >= opts.nonneg_floor, min_v, opts.nonneg_floor};
  rep.psi_min_x = min_x;

  const double mass = integral_of_density(p.phi) - p.rho * integral_bump(p.bump);
  const double mass_err = std::abs(mass - 1.0);
  rep.mass = {mass_err <= opts.mass_tol, mass_err, opts.mass_tol};

  const auto nodes = chebyshev_nodes(opts.psd_nodes, -4.0 * p.sigma, 4.0 * p.sigma);
  rep.psd_detail = psd_test(
      [&](double t) {
        return char_fn(p.phi, t) - p.rho * bump_transform(p.bump, t);
      },
      nodes, opts.psd_tol);
  rep.psd = {rep.psd_detail.is_psd, rep.psd_detail.min_eig,
             -opts.psd_tol * static_cast<double>(opts.psd_nodes)};
  rep.psd.pass = rep.psd_detail.is_psd;
  return rep;
}

std::vector<double> outside_grid(double sigma, double t_max, std::size_t n,
                                 double margin) {
  const double lo = sigma * (1.0 + margin);
  if (!(t_max > lo)) throw validation_error("outside_grid: t_max too small");
  std::vector<double> out;
  out.reserve(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t =
        lo + (t_max - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    out.push_back(t);
    out.push_back(-t);
  }
  return out;
}

std::vector<double> inside_grid(double sigma, std::size_t n) {
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(-sigma +
                  (2.0 * sigma) * (static_cast<double>(k) + 0.5) /
                      static_cast<double>(n));
  }
  return out;
}

}  // namespace cflab
