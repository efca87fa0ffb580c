#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "cflab/density.hpp"
#include "cflab/extremal_bump.hpp"

namespace cflab {

// f(t) = integral of e^{-itx} phi(x) dx.  Uses the catalog's closed form
// when the density has one, oscillatory-aware quadrature otherwise.
std::complex<double> char_fn(const DensitySpec& d, double t);

// Always the quadrature route (closed forms are cross-checked against it).
std::complex<double> char_fn_quadrature(const DensitySpec& d, double t);

// Quadrature transform of the extremal bump: half-period Gauss panels over a
// central window plus integration-by-parts asymptotics for the 1/x^2 tails.
// Vanishes outside [-sigma, sigma] up to the achieved tolerance; the value at
// t = 0 is the integral of F.
std::complex<double> bump_transform(const ExtremalBump& f, double t);

// Characteristic-function samples over a grid.  achieved_tol is the error
// bound of the route taken (closed form vs quadrature contract).
struct CharFnEval {
  std::vector<double> t_grid;
  std::vector<std::complex<double>> values;
  double achieved_tol = 0.0;
};

CharFnEval evaluate_char_fn(const DensitySpec& d, std::span<const double> t_grid,
                            bool force_quadrature = false);

struct PsdResult {
  bool is_psd = false;
  double min_eig = 0.0;
  std::size_t n = 0;
  double tol = 0.0;
};

// Finite Bochner screen: minimum eigenvalue of the Hermitian Gram matrix
// [f(t_j - t_k)].  Sample values must be Hermitian within tol.
PsdResult psd_test(const std::function<std::complex<double>(double)>& values_fn,
                   std::span<const double> nodes, double tol = 1e-8);

std::vector<double> chebyshev_nodes(std::size_t n, double lo, double hi);

// CSV rows "t,re,im,abs".
void write_cf_table(std::ostream& out, const CharFnEval& eval);

}  // namespace cflab
