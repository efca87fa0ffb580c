#pragma once

#include <iosfwd>

namespace cflab {

// The zero-integral bandlimited bump
//
//   F(x) = tau * [ 1/(x-a) + sigma/(2pi - sigma (x-a)) ] * sin^2(sigma (x-a) / 2),
//
// the extremal element of B^1_sigma bounded above by the indicator of the
// window [a, a + 2pi/sigma].  Both apparent poles are removable; F is entire,
// nonpositive off the window, and symmetric about the window midpoint.
struct ExtremalBump {
  double a;      // left endpoint of the window
  double sigma;  // bandlimit; window length is 2pi/sigma
  double tau;    // amplitude in (0, pi/(2 sigma)]; max F = 2 sigma tau / pi

  ExtremalBump(double a, double sigma, double tau);

  double period() const noexcept;       // 2pi/sigma
  double window_right() const noexcept; // a + 2pi/sigma
  double max_value() const noexcept;    // 2 sigma tau / pi, attained at a + pi/sigma
};

double eval_bump(const ExtremalBump& f, double x);

// Analytic derivative; at the window endpoints evaluates to the limit
// values +tau sigma^2/4 and -tau sigma^2/4.
double eval_bump_derivative(const ExtremalBump& f, double x);

// Integral of F over the real line: quadrature on a central window plus
// exact single-period tail corrections.  Zero up to quadrature tolerance.
double integral_bump(const ExtremalBump& f);

struct LatticeSum {
  double value;       // sum over |n| <= n_max of F(x + n step)
  double tail_bound;  // rigorous bound on the omitted |n| > n_max mass
};

// Truncated lattice sum.  For step <= 2pi/sigma the full sum vanishes, so
// |value| is itself bounded by tail_bound.
LatticeSum lattice_sum(const ExtremalBump& f, double x, double step, long n_max);

// Truncated derivative-sampling series on the nodes a + 2pi n/sigma,
// n in [-n_terms, n_terms].  Exact (two nonzero terms) for n_terms >= 1.
double sampling_reconstruct(const ExtremalBump& f, double x, int n_terms);

struct SummationIdentity {
  double lhs;  // sigma * integral of F
  double rhs;  // truncated sample sum over the lattice a + 2pi n/sigma
};

// Both sides of the B^1_sigma summation formula relating the integral to
// lattice samples.  The sample grid must be the window lattice itself:
// a nonzero off-lattice offset is rejected.
SummationIdentity quadrature_summation_identity(const ExtremalBump& f, long n_max,
                                                double offset = 0.0);

// CSV rows "x,F,Fprime" over an inclusive equispaced grid.
void write_bump_table(std::ostream& out, const ExtremalBump& f, double lo,
                      double hi, std::size_t n);

}  // namespace cflab
