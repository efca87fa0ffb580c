#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "cflab/errors.hpp"

namespace cflab {

struct QuadResult {
  double value = 0.0;
  double abs_err = 0.0;
  std::size_t evals = 0;
};

struct ComplexQuadResult {
  std::complex<double> value{0.0, 0.0};
  double abs_err = 0.0;
  std::size_t evals = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 pair on [-1, 1].
inline constexpr double gk_nodes[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397,
    0.586087235467691, 0.741531185599394, 0.864864423359769,
    0.949107912342759, 0.991455371120813};
inline constexpr double k15_w[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785,
    0.169004726639267, 0.140653259715525, 0.104790010322250,
    0.063092092629979, 0.022935322010529};
// Gauss-7 weights sit on nodes 0, 2, 4, 6.
inline constexpr double g7_w[8] = {
    0.417959183673469, 0.0, 0.381830050505119, 0.0,
    0.279705391489277, 0.0, 0.129484966168870, 0.0};

template <class T>
struct Kahan {
  T sum{};
  T carry{};
  void add(T x) {
    const T y = x - carry;
    const T t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

template <class F, class T>
void gk15_panel(F&& f, double lo, double hi, T& value, double& err) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const T fm = f(mid);
  T k15 = fm * k15_w[0];
  T g7 = fm * g7_w[0];
  for (int i = 1; i < 8; ++i) {
    const T y = f(mid + half * gk_nodes[i]) + f(mid - half * gk_nodes[i]);
    k15 += y * k15_w[i];
    if (g7_w[i] != 0.0) g7 += y * g7_w[i];
  }
  k15 *= half;
  g7 *= half;
  value = k15;
  const double diff = std::abs(k15 - g7);
  const double scaled = std::pow(200.0 * diff, 1.5);
  err = std::min(diff, scaled);
}

template <class F, class T>
void refine(F&& f, double lo, double hi, double tol, int depth, Kahan<T>& acc,
            double& err_total, std::size_t& evals) {
  T v;
  double e;
  gk15_panel(f, lo, hi, v, e);
  evals += 15;
  if (e <= tol || depth >= 48) {
    if (depth >= 48 && e > tol) {
      throw numerical_error("quadrature: panel did not converge", e);
    }
    acc.add(v);
    err_total += e;
    return;
  }
  const double mid = 0.5 * (lo + hi);
  refine(f, lo, mid, 0.5 * tol, depth + 1, acc, err_total, evals);
  refine(f, mid, hi, 0.5 * tol, depth + 1, acc, err_total, evals);
}

inline std::vector<double> build_marks(double lo, double hi,
                                       std::span<const double> breakpoints,
                                       double panel_width) {
  std::vector<double> marks;
  marks.push_back(lo);
  for (double b : breakpoints) {
    if (b > lo && b < hi) marks.push_back(b);
  }
  if (panel_width > 0.0 && std::isfinite(panel_width)) {
    const double span = hi - lo;
    const auto n = static_cast<std::size_t>(span / panel_width);
    if (n >= 1 && n < 50'000'000) {
      for (std::size_t k = 1; k <= n; ++k) {
        const double x = lo + static_cast<double>(k) * panel_width;
        if (x < hi) marks.push_back(x);
      }
    }
  }
  marks.push_back(hi);
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
  return marks;
}

template <class Fc, class T>
void run_segments(Fc&& f, const std::vector<double>& marks, double abs_tol,
                  Kahan<T>& acc, double& err_total, std::size_t& evals) {
  const double total_width = marks.back() - marks.front();
  for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
    const double w = marks[i + 1] - marks[i];
    const double tol = std::max(abs_tol * (w / total_width), 1e-300);
    refine(f, marks[i], marks[i + 1], tol, 0, acc, err_total, evals);
  }
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of a real integrand over [lo, hi].
// Interior breakpoints (kinks, support edges) seed the initial partition so
// no panel straddles them.
template <class F>
QuadResult integrate_adaptive(F&& f, double lo, double hi, double abs_tol,
                              std::span<const double> breakpoints = {}) {
  if (!(lo < hi)) return {};
  const auto marks = detail::build_marks(lo, hi, breakpoints, 0.0);
  detail::Kahan<double> acc;
  QuadResult r;
  detail::run_segments(f, marks, abs_tol, acc, r.abs_err, r.evals);
  r.value = acc.sum;
  return r;
}

// Integral of f(x) e^{-i t x} over [lo, hi] for real-valued f.  Panels are
// one half-period of the kernel wide (plain adaptive partition for |t| < 1,
// where the kernel is not oscillatory at the scale of our windows).
template <class F>
ComplexQuadResult integrate_oscillatory(F&& f, double lo, double hi, double t,
                                        double abs_tol,
                                        std::span<const double> breakpoints = {}) {
  if (!(lo < hi)) return {};
  const double pi = 3.14159265358979323846;
  const double panel = std::abs(t) >= 1.0 ? pi / std::abs(t) : 0.0;
  const auto marks = detail::build_marks(lo, hi, breakpoints, panel);
  auto integrand = [&](double x) -> std::complex<double> {
    const double phase = -t * x;
    return f(x) * std::complex<double>(std::cos(phase), std::sin(phase));
  };
  detail::Kahan<std::complex<double>> acc;
  ComplexQuadResult r;
  detail::run_segments(integrand, marks, abs_tol, acc, r.abs_err, r.evals);
  r.value = acc.sum;
  return r;
}

// Grid minimum of f over [lo, hi] (n+1 equispaced samples including both
// endpoints) refined by golden-section around the best sample.
template <class F>
std::pair<double, double> min_on_interval(F&& f, double lo, double hi,
                                          std::size_t n = 10'000) {
  double best_x = lo;
  double best_v = f(lo);
  const double h = (hi - lo) / static_cast<double>(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const double x = (i == n) ? hi : lo + static_cast<double>(i) * h;
    const double v = f(x);
    if (v < best_v) {
      best_v = v;
      best_x = x;
    }
  }
  double a = std::max(lo, best_x - h);
  double b = std::min(hi, best_x + h);
  const double gr = 0.6180339887498949;
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 80 && (b - a) > 1e-15 * (1.0 + std::abs(best_x)); ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  const double vm = f(xm);
  if (vm < best_v) {
    best_v = vm;
    best_x = xm;
  }
  return {best_x, best_v};
}

}  // namespace cflab
