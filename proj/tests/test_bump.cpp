#include <doctest.h>

#include <cmath>
#include <random>

#include "cflab/errors.hpp"
#include "cflab/extremal_bump.hpp"
#include "oracles.hpp"

using namespace cflab;

namespace {
constexpr double pi = oracles::pi;

std::vector<ExtremalBump> triples() {
  std::vector<ExtremalBump> out;
  for (double sigma : {1.0, pi, 10.0}) {
    for (double a : {-3.0, 0.0, 7.5}) {
      out.emplace_back(a, sigma, pi / (2.0 * sigma));
    }
  }
  return out;
}
}  // namespace

TEST_SUITE("extremal_bump") {

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ExtremalBump(0.0, -1.0, 0.1), validation_error);
  CHECK_THROWS_AS(ExtremalBump(0.0, 1.0, 0.0), validation_error);
  CHECK_THROWS_AS(ExtremalBump(0.0, 1.0, pi / 2.0 + 1e-6), validation_error);
  CHECK_NOTHROW(ExtremalBump(0.0, 1.0, pi / 2.0));
}

TEST_CASE("pointwise values: removable zeros, midpoint max, unit value") {
  for (const auto& f : triples()) {
    CAPTURE(f.sigma);
    CAPTURE(f.a);
    CHECK(eval_bump(f, f.a) == 0.0);
    CHECK(std::abs(eval_bump(f, f.window_right())) < 1e-12);
    CHECK(eval_bump(f, f.a + pi / f.sigma) ==
          doctest::Approx(f.max_value()).epsilon(1e-14));
  }
  const ExtremalBump g(0.0, pi, 0.5);
  CHECK(eval_bump(g, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("derivative endpoint values and interior critical point") {
  for (const auto& f : triples()) {
    CAPTURE(f.sigma);
    const double slope = f.tau * f.sigma * f.sigma / 4.0;
    CHECK(eval_bump_derivative(f, f.a) == doctest::Approx(slope).epsilon(1e-13));
    CHECK(eval_bump_derivative(f, f.window_right()) ==
          doctest::Approx(-slope).epsilon(1e-13));
    CHECK(std::abs(eval_bump_derivative(f, f.a + pi / f.sigma)) <
          1e-13 * slope + 1e-15);
  }
}

TEST_CASE("first-order behavior at the left window edge") {
  const ExtremalBump f(0.0, pi, 0.5);
  const double slope = f.tau * f.sigma * f.sigma / 4.0;
  double prev_ratio = 1.0;
  for (double h : {1e-3, 1e-5, 1e-7}) {
    const double ratio = std::abs(eval_bump(f, f.a + h) - h * slope) / h;
    CHECK(ratio < prev_ratio + 1e-12);
    prev_ratio = ratio;
  }
  CHECK(prev_ratio < 1e-6);
}

TEST_CASE("derivative matches central differences at random points") {
  auto gen = oracles::rng(424242);
  for (const auto& f : triples()) {
    const double b = f.period();
    std::uniform_real_distribution<double> u(f.a - 3.0 * b, f.a + 4.0 * b);
    const double h = 1e-6 * b;
    int checked = 0;
    for (int i = 0; checked < 1000 && i < 5000; ++i) {
      const double x = u(gen);
      // Stay away from the lattice where F and the quotient are both ~0.
      if (std::abs(std::remainder(x - f.a, b)) < 1e-3 * b) continue;
      ++checked;
      const double fd = (eval_bump(f, x + h) - eval_bump(f, x - h)) / (2.0 * h);
      const double an = eval_bump_derivative(f, x);
      CHECK(fd == doctest::Approx(an).epsilon(1e-5).scale(f.tau * f.sigma));
    }
    CHECK(checked == 1000);
  }
}

TEST_CASE("upper bound: below 1 on the window, nonpositive off it") {
  for (const auto& f : triples()) {
    CAPTURE(f.sigma);
    const double b = f.period();
    const double lo = f.a - 10.0 * b;
    const double hi = f.a + 11.0 * b;
    double worst_window = -1.0;
    double worst_outside = -1.0;
    for (int i = 0; i <= 100'000; ++i) {
      const double x = lo + (hi - lo) * i / 100'000;
      const double v = eval_bump(f, x);
      if (x >= f.a && x <= f.a + b) {
        worst_window = std::max(worst_window, v - 1.0);
      } else {
        worst_outside = std::max(worst_outside, v);
      }
    }
    CHECK(worst_window <= 1e-12);
    CHECK(worst_outside <= 1e-12);
  }
}

TEST_CASE("lattice zeros and derivative zeros") {
  for (const auto& f : triples()) {
    CAPTURE(f.sigma);
    const double b = f.period();
    for (int n = -50; n <= 50; ++n) {
      const double x = f.a + n * b;
      CHECK(std::abs(eval_bump(f, x)) <= 1e-12);
      if (n != 0 && n != 1) {
        CHECK(std::abs(eval_bump_derivative(f, x)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("integral vanishes; blockwise Richardson oracle agrees") {
  SUBCASE("all nine parameter triples") {
    for (const auto& f : triples()) {
      CAPTURE(f.sigma);
      CAPTURE(f.a);
      CHECK(std::abs(integral_bump(f)) <= 1e-8);
    }
  }
  SUBCASE("doubling tau keeps the integral at zero") {
    const ExtremalBump f(1.0, 2.0, pi / 8.0);
    const ExtremalBump g(1.0, 2.0, pi / 4.0);
    CHECK(std::abs(integral_bump(f)) <= 1e-8);
    CHECK(std::abs(integral_bump(g)) <= 1e-8);
  }
  SUBCASE("direct-quadrature oracle") {
    const ExtremalBump f(-0.5, 2.0 * pi, 0.25);
    const double direct = oracles::bump_integral_blockwise(f);
    CHECK(std::abs(direct) <= 1e-7);
    CHECK(std::abs(integral_bump(f) - direct) <= 1e-7);
  }
}

TEST_CASE("lattice sums stay within the reported tail bound") {
  const ExtremalBump f(0.0, pi, 0.5);
  const double b = f.period();
  SUBCASE("on the lattice every summand vanishes") {
    const auto r1 = lattice_sum(f, f.a, b, 1);
    CHECK(std::abs(r1.value) <= 1e-12);
    const auto r2 = lattice_sum(f, f.a, b, 100);
    CHECK(std::abs(r2.value) <= 1e-12);
  }
  SUBCASE("midpoint start, large truncation") {
    const auto r = lattice_sum(f, f.a + pi / f.sigma, b, 10'000);
    CHECK(std::abs(r.value) <= r.tail_bound);
    CHECK(r.tail_bound <= 1e-3);
  }
  SUBCASE("random starts at both admissible steps") {
    auto gen = oracles::rng(99);
    std::uniform_real_distribution<double> u(f.a - b, f.a + 2.0 * b);
    for (double step : {b, 0.5 * b}) {
      for (int i = 0; i < 20; ++i) {
        const auto r = lattice_sum(f, u(gen), step, 2000);
        CHECK(std::abs(r.value) <= r.tail_bound);
      }
    }
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(lattice_sum(f, 0.0, b, 0), validation_error);
    CHECK_THROWS_AS(lattice_sum(f, 0.0, -1.0, 10), validation_error);
  }
}

TEST_CASE("sampling series collapses to the two endpoint-derivative terms") {
  auto gen = oracles::rng(31337);
  for (const auto& f : triples()) {
    CAPTURE(f.sigma);
    std::uniform_real_distribution<double> u(f.a - 10.0, f.a + 10.0);
    for (int i = 0; i < 200; ++i) {
      const double x = u(gen);
      const double direct = eval_bump(f, x);
      CHECK(std::abs(sampling_reconstruct(f, x, 2) - direct) <= 1e-12);
      CHECK(std::abs(sampling_reconstruct(f, x, 8) - direct) <= 1e-12);
      CHECK(std::abs(oracles::bump_two_term_form(f, x) - direct) <= 1e-12);
    }
  }
}

TEST_CASE("sampling series at lattice points and at the window midpoint") {
  const ExtremalBump f(2.0, 3.0, pi / 6.0);
  const double b = f.period();
  for (int m : {-3, 0, 1, 4}) {
    CHECK(std::abs(sampling_reconstruct(f, f.a + m * b, 4)) <= 1e-12);
  }
  CHECK(sampling_reconstruct(f, f.a + pi / f.sigma, 4) ==
        doctest::Approx(f.max_value()).epsilon(1e-12));
}

TEST_CASE("summation identity: both sides vanish; off-lattice grids refused") {
  const ExtremalBump f(0.0, pi, 0.5);
  const auto id = quadrature_summation_identity(f, 200);
  CHECK(std::abs(id.lhs - id.rhs) <= 1e-6);
  CHECK(std::abs(id.lhs) <= 1e-7);
  CHECK(std::abs(id.rhs) <= 1e-7);

  const ExtremalBump g(0.0, pi, 0.25);  // scaled amplitude
  const auto id2 = quadrature_summation_identity(g, 200);
  CHECK(std::abs(id2.lhs - id2.rhs) <= 1e-6);

  CHECK_NOTHROW(quadrature_summation_identity(f, 10, 3.0 * f.period()));
  CHECK_THROWS_AS(quadrature_summation_identity(f, 10, pi / f.sigma),
                  validation_error);
}

}  // TEST_SUITE
