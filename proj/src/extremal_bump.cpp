#include "cflab/extremal_bump.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <vector>

#include "cflab/errors.hpp"
#include "cflab/quadrature.hpp"

namespace cflab {

namespace {

constexpr double pi = 3.14159265358979323846;

double sinc(double z) {
  if (std::abs(z) < 1e-8) return 1.0 - z * z / 6.0;
  return std::sin(z) / z;
}

// d/dz [sin z / z]; series below 0.125 avoids the cancellation in
// (z cos z - sin z)/z^2.
double sinc_deriv(double z) {
  if (std::abs(z) < 0.125) {
    const double z2 = z * z;
    return z * (-1.0 / 3.0 +
                z2 * (1.0 / 30.0 +
                      z2 * (-1.0 / 840.0 + z2 * (1.0 / 45360.0))));
  }
  return (z * std::cos(z) - std::sin(z)) / (z * z);
}

}  // namespace

ExtremalBump::ExtremalBump(double a_, double sigma_, double tau_)
    : a(a_), sigma(sigma_), tau(tau_) {
  if (!(sigma > 0.0)) throw validation_error("bump: sigma must be positive");
  if (!(tau > 0.0) || tau > pi / (2.0 * sigma) * (1.0 + 1e-12)) {
    throw validation_error("bump: tau must lie in (0, pi/(2 sigma)]");
  }
}

double ExtremalBump::period() const noexcept { return 2.0 * pi / sigma; }
double ExtremalBump::window_right() const noexcept { return a + period(); }
double ExtremalBump::max_value() const noexcept { return 2.0 * sigma * tau / pi; }

// Evaluation uses the pole-free rewrite
//   F(a+u) = (pi tau sigma^2 / 2) * u * sinc^2(sigma u / 2) / (2pi - sigma u)
// together with the symmetry F(a+u) = F(a + 2pi/sigma - u), which maps every
// argument to u <= pi/sigma where the denominator stays >= pi.
double eval_bump(const ExtremalBump& f, double x) {
  double u = x - f.a;
  const double b = f.period();
  if (u > 0.5 * b) u = b - u;
  const double s = sinc(0.5 * f.sigma * u);
  const double c = 0.5 * pi * f.tau * f.sigma * f.sigma;
  return c * u * s * s / (2.0 * pi - f.sigma * u);
}

double eval_bump_derivative(const ExtremalBump& f, double x) {
  double u = x - f.a;
  const double b = f.period();
  double sign = 1.0;
  if (u > 0.5 * b) {
    u = b - u;
    sign = -1.0;
  }
  const double z = 0.5 * f.sigma * u;
  const double s = sinc(z);
  const double sp = sinc_deriv(z);
  const double den = 2.0 * pi - f.sigma * u;
  const double c = 0.5 * pi * f.tau * f.sigma * f.sigma;
  const double g = c * (s * s / den + u * s * sp * f.sigma / den +
                        u * s * s * f.sigma / (den * den));
  return sign * g;
}

// Tail identity: with P(z) = (1 - cos z)/z,
//   integral of F over [a+R, inf)   = -(tau/2) * integral of P over [sigma R - 2pi, sigma R]
//   integral of F over (-inf, a+L]  = -(tau/2) * integral of P over [sigma|L|, sigma|L| + 2pi]
// for any R >= 2pi/sigma and L <= 0, so the cut positions introduce no
// truncation error at all.
double integral_bump(const ExtremalBump& f) {
  const double b = f.period();
  const double cut_left = -2.0 * b;
  const double cut_right = 3.0 * b;

  std::vector<double> marks;
  for (int k = -8; k <= 12; ++k) marks.push_back(f.a + 0.25 * b * k);
  const auto central =
      integrate_adaptive([&](double x) { return eval_bump(f, x); },
                         f.a + cut_left, f.a + cut_right, 1e-11, marks);

  auto one_minus_cos_over = [](double z) {
    const double s = sinc(0.5 * z);
    return 0.5 * z * s * s;
  };
  const double zl = f.sigma * (-cut_left);
  const double zr = f.sigma * cut_right - 2.0 * pi;
  const auto tail_left =
      integrate_adaptive(one_minus_cos_over, zl, zl + 2.0 * pi, 1e-12);
  const auto tail_right =
      integrate_adaptive(one_minus_cos_over, zr, zr + 2.0 * pi, 1e-12);

  const double err =
      central.abs_err + 0.5 * f.tau * (tail_left.abs_err + tail_right.abs_err);
  if (err > 1e-9) {
    throw numerical_error("integral_bump: quadrature did not converge", err);
  }
  return central.value - 0.5 * f.tau * (tail_left.value + tail_right.value);
}

LatticeSum lattice_sum(const ExtremalBump& f, double x, double step, long n_max) {
  if (!(step > 0.0)) throw validation_error("lattice_sum: step must be positive");
  if (n_max < 1) throw validation_error("lattice_sum: n_max must be >= 1");
  // Outermost terms first so the small tail contributions are not lost
  // against the O(1) central terms.
  detail::Kahan<double> acc;
  for (long n = n_max; n >= 1; --n) {
    acc.add(eval_bump(f, x + static_cast<double>(n) * step));
    acc.add(eval_bump(f, x - static_cast<double>(n) * step));
  }
  acc.add(eval_bump(f, x));

  // |F(u)| <= tau b / (|u| |u - b|) off the window gives, for |n| > n_max,
  // a per-side integral bound once n step clears c = |x - a| + b.
  const double b = f.period();
  const double c = std::abs(x - f.a) + b;
  double bound = std::numeric_limits<double>::infinity();
  const double reach = static_cast<double>(n_max) * step;
  if (reach > c) bound = 2.0 * f.tau * b / (step * (reach - c));
  return {acc.sum, bound};
}

double sampling_reconstruct(const ExtremalBump& f, double x, int n_terms) {
  if (n_terms < 1) throw validation_error("sampling_reconstruct: n_terms must be >= 1");
  const double b = f.period();
  const double s = 0.5 * f.sigma * (x - f.a);
  detail::Kahan<double> acc;
  for (int n = -n_terms; n <= n_terms; ++n) {
    const double node = f.a + static_cast<double>(n) * b;
    const double value = eval_bump(f, node);
    const double slope = eval_bump_derivative(f, node);
    const double k = sinc(s - pi * static_cast<double>(n));
    acc.add((value + slope * (x - node)) * k * k);
  }
  return acc.sum;
}

SummationIdentity quadrature_summation_identity(const ExtremalBump& f, long n_max,
                                                double offset) {
  if (n_max < 1) throw validation_error("summation identity: n_max must be >= 1");
  const double b = f.period();
  const double misfit = std::remainder(offset, b);
  if (std::abs(misfit) > 1e-9 * b) {
    throw validation_error(
        "summation identity: sample grid must be the window lattice "
        "(offset must be a multiple of 2pi/sigma)");
  }
  SummationIdentity out;
  out.lhs = f.sigma * integral_bump(f);
  detail::Kahan<double> acc;
  for (long n = -n_max; n <= n_max; ++n) {
    acc.add(eval_bump(f, f.a + offset + static_cast<double>(n) * b));
  }
  out.rhs = acc.sum;
  return out;
}

void write_bump_table(std::ostream& out, const ExtremalBump& f, double lo,
                      double hi, std::size_t n) {
  out << "x,F,Fprime\n";
  char buf[128];
  for (std::size_t i = 0; i <= n; ++i) {
    const double x =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n == 0 ? 1 : n);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", x, eval_bump(f, x),
                  eval_bump_derivative(f, x));
    out << buf;
  }
}

}  // namespace cflab
