#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "cflab/interval_set.hpp"

namespace cflab {

enum class Smoothness { c0, c1, smooth };

struct TriangularParams {
  double a;  // support is (-a/2, a/2)
};
struct GaussianParams {
  double mean;
  double sd;
};
struct RaisedCosineParams {
  double alpha;
  double sigma;  // support is (alpha, alpha + 2*pi/sigma)
};
struct HalfSineParams {
  double alpha;
  double sigma;  // support is (alpha, alpha + 2*pi/sigma)
};
struct PiecewiseLinearParams {
  std::vector<std::pair<double, double>> knots;  // (x, y), normalized mass 1
};

using DensityParams =
    std::variant<TriangularParams, GaussianParams, RaisedCosineParams,
                 HalfSineParams, PiecewiseLinearParams>;

// A probability density with its essential support and smoothness metadata.
// Built through the factory functions below; fields are plain data so the
// whole spec is a value.
struct DensitySpec {
  DensityParams params;
  IntervalSet support;          // numeric window when unbounded_tails is set
  bool unbounded_tails = false;
  Smoothness smoothness = Smoothness::c0;
  // One-sided derivatives of the density at the support's outer endpoints,
  // when the support is a single interval and they are defined.
  std::optional<std::pair<double, double>> endpoint_derivatives;

  double eval(double x) const;

  // Closed-form characteristic function, where the catalog has one.
  bool has_closed_form_cf() const;
  std::complex<double> closed_form_cf(double t) const;

  // Abscissas where the density is not smooth; quadrature panels must not
  // straddle them.
  std::vector<double> breakpoints() const;

  const char* kind_name() const;
};

double eval_density(const DensitySpec& d, double x);

DensitySpec triangular_density(double a);
DensitySpec gaussian_density(double mean, double sd);

// C1 density on (alpha, alpha + 2*pi/sigma) with zero density-derivative at
// both support endpoints:  phi(x) = (sigma/2pi) * (1 - cos(sigma (x-alpha))).
DensitySpec raised_cosine_density(double alpha, double sigma);

// C1-on-support density on (alpha, alpha + 2*pi/sigma) with nonzero one-sided
// endpoint derivatives +-sigma^2/8:  phi(x) = (sigma/4) * sin(sigma (x-alpha)/2).
DensitySpec half_sine_density(double alpha, double sigma);

// Continuous piecewise-linear density.  Knots must start and end at zero
// ordinate with nonnegative ordinates throughout; mass is normalized to 1.
DensitySpec piecewise_linear_density(std::vector<std::pair<double, double>> knots);

}  // namespace cflab
