#pragma once

#include <stdexcept>
#include <string>

namespace cflab {

// Inputs violate a hypothesis of a construction or certification
// (window too short, support condition unmet, out-of-range period).
// The CLI maps this to exit code 2.
class hypothesis_error : public std::runtime_error {
public:
  explicit hypothesis_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally invalid inputs: malformed interval bounds, non-Hermitian
// sample values, off-lattice sample grids.
class validation_error : public std::invalid_argument {
public:
  explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A numerical procedure failed to reach its target tolerance.  Carries
// the best achieved estimate so callers can report it.
class numerical_error : public std::runtime_error {
public:
  numerical_error(const std::string& msg, double achieved)
      : std::runtime_error(msg), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

private:
  double achieved_;
};

}  // namespace cflab
