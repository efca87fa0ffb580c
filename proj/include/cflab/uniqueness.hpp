#pragma once

#include <optional>
#include <string>

#include "cflab/density.hpp"
#include "cflab/interval_set.hpp"

namespace cflab {

// Witness that the characteristic-function extension from |t| > sigma is
// unique: a period a <= 2pi/sigma and a positive-measure set E in [0, a)
// whose lattice translates avoid the essential support of phi.
struct UniquenessCertificate {
  double a = 0.0;
  IntervalSet E;
  double E_measure = 0.0;
  IntervalSet projected_support;
  double sigma = 0.0;
};

struct CertifyOutcome {
  std::optional<UniquenessCertificate> certificate;
  // For the no-certificate case: why this procedure found none.  A missing
  // certificate is not a proof of non-uniqueness.
  std::string reason;
};

// Certificate attempt at a fixed period: E = [0, a) minus the projection of
// the support modulo a.  Throws hypothesis_error when a > 2pi/sigma.
std::optional<UniquenessCertificate> certify_at(const DensitySpec& phi,
                                                double sigma, double a);

// With a period given, a single certify_at; otherwise scans a dyadic grid of
// periods in (0, 2pi/sigma] plus candidates derived from the gap structure of
// the support, keeping the largest |E| (smallest a on ties).
CertifyOutcome certify(const DensitySpec& phi, double sigma,
                       std::optional<double> a = {});

// Critical-window endpoint test for densities with support exactly
// (alpha, alpha + 2pi/sigma): uniqueness holds iff at least one one-sided
// endpoint derivative of phi vanishes.
bool endpoint_uniqueness_test(const DensitySpec& phi, double sigma, double alpha);

}  // namespace cflab
