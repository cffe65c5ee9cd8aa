#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bargmann/coherent.hpp"
#include "bargmann/specfun.hpp"

using namespace bargmann;

TEST_CASE("normalization factor") {
  const CPoint z{Complex(0.6, -0.8)};
  for (int m = 0; m <= 4; ++m) {
    CHECK(normalization_factor(SpaceParams(1, m), z) == doctest::Approx(std::exp(1.0) / std::numbers::pi));
  }
  const CPoint o{Complex(0, 0), Complex(0, 0)};
  CHECK(normalization_factor(SpaceParams(2, 3), o) ==
        doctest::Approx(4.0 / (std::numbers::pi * std::numbers::pi)));
  const CPoint w{Complex(0.1, 0.2), Complex(-0.3, 0.7)};
  CHECK(normalization_factor(SpaceParams(2, 2), w) ==
        doctest::Approx(reproducing_kernel(SpaceParams(2, 2), w, w).real()).epsilon(1e-14));
}

TEST_CASE("overlaps") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 100; ++k) {
    const SpaceParams p(1 + k % 3, k % 4);
    std::vector<Complex> a(p.n()), b(p.n());
    for (auto& v : a) v = {u(rng), u(rng)};
    for (auto& v : b) v = {u(rng), u(rng)};
    const CPoint z(a), w(b);
    CHECK(std::abs(overlap(p, z, z) - 1.0) < 1e-14);
    CHECK(std::abs(overlap(p, z, w)) <= 1.0 + 1e-12);
    CHECK(std::abs(overlap(p, z, w) - std::conj(overlap(p, w, z))) < 1e-14);
  }
  // L_1^{(0)} vanishes at |z - w|^2 = 1
  const CPoint z{Complex(0.2, 0.3)};
  const CPoint w{Complex(0.2 + 0.6, 0.3 + 0.8)};
  CHECK(std::abs(overlap(SpaceParams(1, 1), z, w)) < 1e-15);
  // far apart points: no overflow
  const CPoint f1{Complex(30.0, 0.0)};
  const CPoint f2{Complex(31.0, 0.5)};
  CHECK(std::isfinite(std::abs(overlap(SpaceParams(1, 2), f1, f2))));
}

TEST_CASE("resolution of identity") {
  CHECK(resolution_check(0, CPoint{Complex(0, 0)}, 10.0) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(resolution_check(1, CPoint{Complex(0, 0)}, 10.0) - 1.0) < 1e-6);
  CHECK(std::abs(resolution_check(2, CPoint{Complex(0.6, 0.8)}, 11.0) - 1.0) < 1e-6);
  CHECK_THROWS_AS(resolution_check(1, CPoint{Complex(0, 0)}, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(resolution_check(1, CPoint{Complex(0, 0), Complex(0, 0)}, 10.0), std::invalid_argument);
}

TEST_CASE("expectation values") {
  const CPoint z{Complex(0.3, -0.4)};
  for (int m = 0; m <= 4; ++m) {
    CHECK(std::abs(expectation_quadrature(m, [](Complex) { return Complex(1.0); }, z) - 1.0) < 1e-10);
  }
  const auto wave = [](Complex w) { return std::exp(Complex(0.0, 1.2 * w.real() + 1.6 * w.imag())); };
  CHECK(std::abs(expectation_quadrature(1, wave, z)) < 1e-7);
  const Complex e0 = expectation_quadrature(0, wave, z);
  CHECK(std::abs(e0 - std::exp(-1.0) * wave(z[0])) < 1e-10);
  const Complex sq = expectation_quadrature(0, [](Complex w) { return Complex(std::norm(w)); }, z);
  CHECK(std::abs(sq - (z.norm_sq() + 1.0)) < 1e-8);
}
