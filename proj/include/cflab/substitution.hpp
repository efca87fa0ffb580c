#pragma once

#include <span>
#include <vector>

#include "cflab/density.hpp"
#include "cflab/extremal_bump.hpp"
#include "cflab/fourier.hpp"

namespace cflab {

// A pair of distinct densities whose characteristic functions agree outside
// [-sigma, sigma]:  psi = phi - rho F with F the extremal bump.
struct SubstitutionPair {
  DensitySpec phi;
  double sigma;
  ExtremalBump bump;
  double rho;

  double psi(double x) const;
};

// Window construction: given (alpha, beta) inside the support of a continuous
// phi with beta - alpha > 2pi/sigma, center a critical-length bump window in
// (alpha, beta), take rho = min of phi on it and tau = pi/(2 sigma) so that
// rho F <= phi everywhere.  Throws hypothesis_error when the window is too
// short or (alpha, beta) leaves the support.
SubstitutionPair construct_pair(const DensitySpec& phi, double sigma,
                                double alpha, double beta);

// Boundary construction for S_phi = (alpha, alpha + 2pi/sigma) itself: the
// bump window equals the support closure, rho = 1, and tau is the largest
// feasible amplitude found by bisection under the endpoint slope guards
// tau sigma^2/4 <= |phi'| and a dense-grid domination check.  Rejects
// densities with a vanishing endpoint derivative (no nonzero bandlimited
// correction fits under phi there).
SubstitutionPair construct_pair_boundary(const DensitySpec& phi, double sigma,
                                         double alpha);

struct CheckResult {
  bool pass = false;
  double value = 0.0;
  double threshold = 0.0;
};

struct VerificationReport {
  CheckResult outside_agreement;   // max |phi^ - psi^| over |t| > sigma, <=
  CheckResult inside_difference;   // max |phi^ - psi^| over |t| < sigma, >=
  CheckResult nonnegativity;       // grid min of psi, >=
  CheckResult mass;                // |integral of psi - 1|, <=
  CheckResult psd;                 // min Gram eigenvalue of psi^, >=
  PsdResult psd_detail;
  double psi_min_x = 0.0;
  bool all_pass() const;
};

struct VerifyOptions {
  double outside_tol = 1e-6;
  double inside_rel = 1e-4;    // threshold = inside_rel * rho * max F
  double nonneg_floor = -1e-12;
  double mass_tol = 1e-8;
  double psd_tol = 1e-8;
  std::size_t nonneg_grid = 100'000;
  std::size_t psd_nodes = 64;
};

// Full verification of a pair.  Math outcomes are reported, never thrown;
// grids must be nonempty and sit strictly outside/inside the band.
VerificationReport verify_pair(const SubstitutionPair& p,
                               std::span<const double> t_outside,
                               std::span<const double> t_inside,
                               const VerifyOptions& opts = {});

// Default verification grids: n points per sign outside the band (between
// sigma (1 + margin) and t_max), and n points strictly inside.
std::vector<double> outside_grid(double sigma, double t_max, std::size_t n,
                                 double margin = 1e-3);
std::vector<double> inside_grid(double sigma, std::size_t n);

}  // namespace cflab
