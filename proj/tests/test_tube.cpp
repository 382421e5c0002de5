#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "pinch/tube.hpp"

using namespace pinch;
using Catch::Approx;

TEST_CASE("tube radius inverts sinh(2R) * angle * length = 1") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> ang(0.1, 7.0);
  std::uniform_real_distribution<double> lexp(-6.0, -1.0);
  for (int i = 0; i < 200; ++i) {
    const double alpha = ang(rng);
    const double L = std::pow(10.0, lexp(rng));
    const double R = tube_radius(alpha, L);
    CHECK(std::sinh(2.0 * R) * alpha * L == Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(tube_radius(0.0, 0.1), std::domain_error);
  CHECK_THROWS_AS(tube_radius(1.0, 0.0), std::domain_error);
}

TEST_CASE("tube boundary area is exactly one half") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> ang(0.05, 7.0);
  std::uniform_real_distribution<double> lexp(-8.0, -0.3);
  for (int i = 0; i < 1000; ++i) {
    const TubeParams tube = make_tube(ang(rng), std::pow(10.0, lexp(rng)));
    CHECK(std::abs(tube.boundary_area - 0.5) < 1e-12);
  }
}

TEST_CASE("tube radius decreases in both angle and length") {
  const double alphas[] = {0.5, 1.0, 2.0, 4.0, 6.28};
  const double lens[] = {1e-5, 1e-4, 1e-3, 1e-2, 1e-1};
  for (double a : alphas)
    for (int i = 0; i + 1 < 5; ++i)
      CHECK(tube_radius(a, lens[i]) > tube_radius(a, lens[i + 1]));
  for (double L : lens)
    for (int i = 0; i + 1 < 5; ++i)
      CHECK(tube_radius(alphas[i], L) > tube_radius(alphas[i + 1], L));
}

TEST_CASE("tube area lower bound at the threshold radius") {
  // At R = asinh(sqrt 2): sinh^2 R = 2 and cosh 2R = 5.
  const double R = std::asinh(std::sqrt(2.0));
  CHECK(hk_area_lower_bound(R) == Approx(1.6978 * 0.4).margin(1e-12));
  CHECK_THROWS_AS(hk_area_lower_bound(0.0), std::domain_error);
}

TEST_CASE("explicit short-length component calibrates the threshold radius") {
  const double threshold = std::asinh(std::sqrt(2.0));
  for (double alpha : {1.0, 2.0, 2.0 * num::pi}) {
    const double ell3 = ell0_explicit_component(alpha);
    // Bisection oracle: the length whose tube radius equals the threshold.
    const double oracle = num::bisect(
        [&](double L) { return tube_radius(alpha, L) - threshold; },
        1e-12, 10.0 / alpha);
    CHECK(ell3 == Approx(oracle).epsilon(1e-10));
    CHECK(tube_radius(alpha, ell3) == Approx(threshold).margin(1e-10));
    // Shorter cores push the radius above the threshold.
    CHECK(tube_radius(alpha, 0.5 * ell3) > threshold);
    CHECK(tube_radius(alpha, 2.0 * ell3) < threshold);
  }
  CHECK(ell0_explicit_component(2.0 * num::pi) ==
        Approx(0.032487).margin(5e-6));
  CHECK_THROWS_AS(ell0_explicit_component(0.0), std::domain_error);
}

TEST_CASE("torus shape of the tube boundary") {
  const double alpha = 2.0 * num::pi;
  const double L = 0.001;
  const double R = tube_radius(alpha, L);
  const TorusShape ts = torus_shape(alpha, L, R);
  CHECK(ts.height == Approx(L * std::cosh(R)).margin(1e-15));
  CHECK(ts.circumference == Approx(alpha * std::sinh(R)).margin(1e-12));
  // 4H^2 = height^2 / (t L sinh R cosh R), and t L sinh R cosh R = 1/2
  // exactly at the tube radius, so 4H^2 = 2 height^2 there.
  CHECK(ts.four_H_sq == Approx(2.0 * ts.height * ts.height).epsilon(1e-12));
  CHECK_THROWS_AS(torus_shape(0.0, L, R), std::domain_error);
}
