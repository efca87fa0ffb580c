#include "cflab/fourier.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <ostream>

#include "cflab/errors.hpp"
#include "cflab/quadrature.hpp"

namespace cflab {

namespace {

constexpr double pi = 3.14159265358979323846;
using cdouble = std::complex<double>;

cdouble unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

// One-sided oscillatory tail  S(k) = integral over [r, inf) of e^{-iku} q(u) du
// by repeated integration by parts, where q has exact derivatives
//   q^(m)(u) = (-1)^m (m!/b) [ (u-d0)^{-(m+1)} - (u-d1)^{-(m+1)} ]
// for a partial-fraction pair with poles at d0, d1 (d0 > d1).  Returns the
// truncated series and a rigorous remainder bound.
struct TailSum {
  cdouble value;
  double rem_bound;
};

TailSum ibp_tail(double k, double r, double b, double pole_near, double pole_far) {
  constexpr int terms = 12;
  const cdouble ik(0.0, k);
  cdouble inv_pow = 1.0 / ik;  // (ik)^{-1}, updated to (ik)^{-(m+1)}
  cdouble sum = 0.0;
  double factorial = 1.0;
  double near_pow = 1.0 / (r - pole_near);  // (r-pole)^{-(m+1)}
  double far_pow = 1.0 / (r - pole_far);
  double sign = 1.0;
  for (int m = 0; m < terms; ++m) {
    const double qm = sign * (factorial / b) * (near_pow - far_pow);
    sum += qm * inv_pow;
    factorial *= static_cast<double>(m + 1);
    near_pow /= (r - pole_near);
    far_pow /= (r - pole_far);
    sign = -sign;
    inv_pow /= ik;
  }
  // |remainder| <= (terms-1)! / (b (|k| (r - pole_near))^terms)
  double fct = 1.0;
  for (int m = 1; m < terms; ++m) fct *= static_cast<double>(m);
  const double z = std::abs(k) * (r - pole_near);
  const double rem = fct / (b * std::pow(z, terms));
  return {unit_phase(-k * r) * sum, rem};
}

}  // namespace

std::complex<double> char_fn(const DensitySpec& d, double t) {
  if (d.has_closed_form_cf()) return d.closed_form_cf(t);
  return char_fn_quadrature(d, t);
}

std::complex<double> char_fn_quadrature(const DensitySpec& d, double t) {
  const auto breaks = d.breakpoints();
  cdouble total = 0.0;
  double err = 0.0;
  for (const auto& iv : d.support.intervals()) {
    const auto r = integrate_oscillatory([&](double x) { return d.eval(x); },
                                         iv.lo, iv.hi, t, 1e-11, breaks);
    total += r.value;
    err += r.abs_err;
  }
  if (err > 1e-9) {
    throw numerical_error("char_fn: quadrature did not converge", err);
  }
  return total;
}

// Split (1 - cos(sigma u)) e^{-itu} into the three exponentials e^{-iku},
// k in {t, t-sigma, t+sigma} with weights {1, -1/2, -1/2}; each tail of
// F = -(tau b/2)(1 - cos(sigma u)) / (u (u - b)) then reduces to ibp_tail
// (or to a logarithm when k = 0, i.e. when |t| hits the band edge exactly).
std::complex<double> bump_transform(const ExtremalBump& f, double t) {
  if (t == 0.0) return {integral_bump(f), 0.0};

  const double sigma = f.sigma;
  const double tau = f.tau;
  const double b = f.period();

  // Smallest nonzero |k| among the three exponentials drives how far out the
  // cut must sit before the 12-term tail series reaches |k|(R - b) >= 34.
  constexpr double series_reach = 34.0;
  const double k_zero_tol = 1e-11 * std::max(1.0, sigma);
  const double t_abs = std::abs(t);
  double k_min = t_abs + sigma;
  if (t_abs > k_zero_tol) k_min = std::min(k_min, t_abs);
  if (std::abs(t_abs - sigma) > k_zero_tol) {
    k_min = std::min(k_min, std::abs(t_abs - sigma));
  }
  double r = std::max(3.0 * b, b + series_reach / k_min);
  const double r_cap = 2e6 / sigma + 4.0 * b;
  r = std::min(r, r_cap);

  // Central window in x-space.
  const double osc = std::abs(t) + sigma;
  std::vector<double> marks{f.a, f.a + b};
  {
    const double w = pi / osc;
    const double lo = f.a - r;
    const double hi = f.a + r + b;
    const auto n = static_cast<std::size_t>((hi - lo) / w);
    marks.reserve(n + 2);
    for (std::size_t j = 1; j <= n; ++j) {
      const double x = lo + static_cast<double>(j) * w;
      if (x < hi) marks.push_back(x);
    }
  }
  const auto central =
      integrate_oscillatory([&](double x) { return eval_bump(f, x); }, f.a - r,
                            f.a + b + r, t, 2e-9, marks);

  // Tails in window coordinates u = x - a; right cut at b + r, left at -r.
  const double cut_r = b + r;
  const double cut_l = r;
  const double weight[3] = {1.0, -0.5, -0.5};
  const double ks_right[3] = {t, t - sigma, t + sigma};
  const double ks_left[3] = {-t, -t - sigma, -t + sigma};

  cdouble tail = 0.0;
  double rem = 0.0;
  for (int j = 0; j < 3; ++j) {
    // right tail: q(u) = 1/(u (u-b)), poles at b (near) and 0
    if (std::abs(ks_right[j]) <= k_zero_tol) {
      tail += weight[j] * std::log((cut_r) / (cut_r - b)) / b;
    } else {
      const auto s = ibp_tail(ks_right[j], cut_r, b, b, 0.0);
      tail += weight[j] * s.value;
      rem += s.rem_bound;
    }
    // left tail: q~(v) = 1/(v (v+b)), poles at 0 (near) and -b
    if (std::abs(ks_left[j]) <= k_zero_tol) {
      tail += weight[j] * std::log((cut_l + b) / cut_l) / b;
    } else {
      const auto s = ibp_tail(ks_left[j], cut_l, b, 0.0, -b);
      tail += weight[j] * s.value;
      rem += s.rem_bound;
    }
  }
  const cdouble tails_u = -(0.5 * tau * b) * tail;
  const double tail_err = 0.5 * tau * b * rem;
  if (central.abs_err + tail_err > 2e-7) {
    throw numerical_error("bump_transform: tolerance not reached",
                          central.abs_err + tail_err);
  }
  return central.value + unit_phase(-t * f.a) * tails_u;
}

CharFnEval evaluate_char_fn(const DensitySpec& d, std::span<const double> t_grid,
                            bool force_quadrature) {
  CharFnEval out;
  out.t_grid.assign(t_grid.begin(), t_grid.end());
  out.values.reserve(t_grid.size());
  out.achieved_tol = force_quadrature || !d.has_closed_form_cf() ? 1e-9 : 1e-15;
  for (double t : t_grid) {
    out.values.push_back(force_quadrature ? char_fn_quadrature(d, t)
                                          : char_fn(d, t));
  }
  return out;
}

PsdResult psd_test(const std::function<std::complex<double>(double)>& values_fn,
                   std::span<const double> nodes, double tol) {
  const auto n = nodes.size();
  if (n == 0) throw validation_error("psd_test: empty node set");
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      if (nodes[j] == nodes[k]) {
        throw validation_error("psd_test: nodes must be distinct");
      }
    }
  }
  Eigen::MatrixXcd gram(n, n);
  const cdouble f0 = values_fn(0.0);
  for (std::size_t j = 0; j < n; ++j) gram(j, j) = f0.real();
  if (std::abs(f0.imag()) > tol) {
    throw validation_error("psd_test: values are not Hermitian (f(0) not real)");
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const double dt = nodes[j] - nodes[k];
      const cdouble fwd = values_fn(dt);
      const cdouble bwd = values_fn(-dt);
      if (std::abs(bwd - std::conj(fwd)) > tol) {
        throw validation_error("psd_test: values are not Hermitian within tol");
      }
      const cdouble v = 0.5 * (fwd + std::conj(bwd));
      gram(j, k) = v;
      gram(k, j) = std::conj(v);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram,
                                                         Eigen::EigenvaluesOnly);
  PsdResult out;
  out.n = n;
  out.tol = tol;
  out.min_eig = solver.eigenvalues().minCoeff();
  out.is_psd = out.min_eig >= -tol * static_cast<double>(n);
  return out;
}

std::vector<double> chebyshev_nodes(std::size_t n, double lo, double hi) {
  std::vector<double> out(n);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = mid + half * std::cos(pi * (2.0 * static_cast<double>(k) + 1.0) /
                                   (2.0 * static_cast<double>(n)));
  }
  return out;
}

void write_cf_table(std::ostream& out, const CharFnEval& eval) {
  out << "t,re,im,abs\n";
  char buf[160];
  for (std::size_t i = 0; i < eval.t_grid.size(); ++i) {
    const auto v = eval.values[i];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", eval.t_grid[i],
                  v.real(), v.imag(), std::abs(v));
    out << buf;
  }
}

}  // namespace cflab
