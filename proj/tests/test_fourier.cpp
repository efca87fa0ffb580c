#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "cflab/density.hpp"
#include "cflab/errors.hpp"
#include "cflab/fourier.hpp"
#include "oracles.hpp"

using namespace cflab;
using cdouble = std::complex<double>;

namespace {
constexpr double pi = oracles::pi;
}

TEST_SUITE("fourier") {

TEST_CASE("normalization: f(0) = 1 along both routes") {
  for (const auto& d :
       {triangular_density(1.0), gaussian_density(0.0, 1.0),
        half_sine_density(0.0, pi), raised_cosine_density(-1.0, 2.0)}) {
    CHECK(std::abs(char_fn(d, 0.0) - 1.0) < 1e-10);
    CHECK(std::abs(char_fn_quadrature(d, 0.0) - 1.0) < 1e-10);
  }
}

TEST_CASE("triangular closed form against quadrature") {
  const auto d = triangular_density(1.0);
  for (int i = 0; i < 100; ++i) {
    const double t = -20.0 + 40.0 * i / 99.0;
    const double s = std::abs(t) < 1e-12 ? 1.0 : std::sin(0.25 * t) / (0.25 * t);
    const cdouble closed(s * s, 0.0);
    CHECK(std::abs(char_fn(d, t) - closed) < 1e-14);
    CHECK(std::abs(char_fn_quadrature(d, t) - closed) < 1e-9);
  }
}

TEST_CASE("gaussian closed form against quadrature, plus the t = 1 value") {
  const auto d = gaussian_density(0.0, 1.0);
  CHECK(std::abs(char_fn(d, 1.0) - std::exp(-0.5)) < 1e-12);
  CHECK(std::abs(char_fn(d, 1.0) - 0.60653066) < 1e-8);
  for (int i = 0; i < 100; ++i) {
    const double t = -20.0 + 40.0 * i / 99.0;
    CHECK(std::abs(char_fn_quadrature(d, t) - char_fn(d, t)) < 1e-9);
  }
  // A shifted gaussian picks up the mean phase.
  const auto g = gaussian_density(2.0, 0.5);
  for (double t : {-3.0, 0.7, 11.0}) {
    const cdouble closed =
        std::polar(std::exp(-0.5 * 0.25 * t * t), -2.0 * t);
    CHECK(std::abs(char_fn(g, t) - closed) < 1e-13);
    CHECK(std::abs(char_fn_quadrature(g, t) - closed) < 1e-9);
  }
}

TEST_CASE("Hermitian symmetry and modulus bound at random t") {
  auto gen = oracles::rng(808);
  std::uniform_real_distribution<double> u(-30.0, 30.0);
  for (const auto& d :
       {triangular_density(2.2), gaussian_density(0.3, 1.1),
        half_sine_density(0.0, pi), raised_cosine_density(0.0, pi),
        piecewise_linear_density({{0, 0}, {1, 1}, {2, 0}, {3, 0}, {4, 2}, {5, 0}})}) {
    CAPTURE(d.kind_name());
    for (int i = 0; i < 200; ++i) {
      const double t = u(gen);
      const cdouble f = char_fn(d, t);
      const cdouble fm = char_fn(d, -t);
      CHECK(std::abs(fm - std::conj(f)) < 1e-9);
      CHECK(std::abs(f) <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("decay envelope of the triangular closed form") {
  const auto d = triangular_density(1.0);
  double prev = 1.0;
  for (double t : {2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) {
    const double bound = std::pow(4.0 / t, 2);  // |sinc(t/4)|^2 <= (4/t)^2
    CHECK(std::abs(char_fn(d, t)) <= bound + 1e-15);
    prev = std::min(prev, bound);
  }
  CHECK(prev < 1e-2);
}

TEST_CASE("bump transform: quadrature route against the closed form") {
  for (double sigma : {1.0, pi, 10.0}) {
    for (double a : {-3.0, 0.0, 7.5}) {
      const ExtremalBump f(a, sigma, pi / (2.0 * sigma));
      CAPTURE(sigma);
      CAPTURE(a);
      // inside the band (skipping the immediate vicinity of 0 and the edge)
      for (int i = 1; i <= 12; ++i) {
        const double t = -sigma + 2.0 * sigma * i / 13.0;
        if (std::abs(t) < 0.02 * sigma) continue;
        const auto numeric = bump_transform(f, t);
        const auto closed = oracles::bump_transform_closed_form(f, t);
        CHECK(std::abs(numeric - closed) < 1e-7);
      }
      // outside the band the transform must be numerically zero
      for (double scale : {1.001, 1.5, 2.0, 4.0}) {
        CHECK(std::abs(bump_transform(f, scale * sigma)) < 1e-6);
        CHECK(std::abs(bump_transform(f, -scale * sigma)) < 1e-6);
      }
      CHECK(std::abs(bump_transform(f, 0.0)) < 1e-8);
    }
  }
}

TEST_CASE("bump transform magnitude at the half-band point") {
  const ExtremalBump f(0.0, pi, 0.5);  // tau = pi/(2 sigma)
  const auto v = bump_transform(f, 0.5 * pi);
  CHECK(std::abs(v) > 1e-4);
  CHECK(std::abs(v) == doctest::Approx(pi * f.tau).epsilon(1e-7));
}

TEST_CASE("band-edge evaluation hits the exact-logarithm tail branch") {
  const ExtremalBump f(0.5, 2.0, pi / 4.0);
  CHECK(std::abs(bump_transform(f, f.sigma)) < 1e-6);
  CHECK(std::abs(bump_transform(f, -f.sigma)) < 1e-6);
}

TEST_CASE("psd screen accepts genuine characteristic functions") {
  auto gen = oracles::rng(1234);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::vector<double> nodes(32);
  for (auto& x : nodes) x = u(gen);
  const auto d = triangular_density(1.0);
  const auto r = psd_test([&](double t) { return char_fn(d, t); }, nodes);
  CHECK(r.is_psd);
  CHECK(r.min_eig >= -1e-8 * 32);
}

TEST_CASE("psd screen rejects a pointwise-corrupted function") {
  const auto nodes = chebyshev_nodes(16, -4.0, 4.0);
  const auto d = triangular_density(1.0);
  const double spike = nodes[3] - nodes[11];
  const auto r = psd_test(
      [&](double t) -> cdouble {
        if (std::abs(std::abs(t) - std::abs(spike)) < 1e-12) return {2.0, 0.0};
        return char_fn(d, t);
      },
      nodes);
  CHECK_FALSE(r.is_psd);
}

TEST_CASE("psd screen validates Hermitian input and node distinctness") {
  const auto nodes = chebyshev_nodes(8, -1.0, 1.0);
  // An even, nonzero imaginary part breaks f(-t) = conj(f(t)).
  CHECK_THROWS_AS(
      psd_test([](double t) -> cdouble { return {1.0, t * t}; }, nodes),
      validation_error);
  std::vector<double> dup{0.0, 1.0, 1.0};
  CHECK_THROWS_AS(
      psd_test([](double) -> cdouble { return {1.0, 0.0}; }, dup),
      validation_error);
}

TEST_CASE("chebyshev nodes are distinct and inside the interval") {
  const auto nodes = chebyshev_nodes(64, -4.0, 4.0);
  REQUIRE(nodes.size() == 64);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    CHECK(nodes[i] > -4.0);
    CHECK(nodes[i] < 4.0);
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      CHECK(nodes[i] != nodes[j]);
    }
  }
}

}  // TEST_SUITE
