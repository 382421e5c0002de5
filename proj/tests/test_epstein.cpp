#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "pinch/epstein.hpp"

using namespace pinch;
using Catch::Approx;

TEST_CASE("shape eigenvalues sum to two exactly") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> phi(0.0, 3.0);
  std::uniform_real_distribution<double> depth(0.0, 5.0);
  for (int i = 0; i < 500; ++i) {
    const Eigenvalues ev = psi_derivative_eigenvalues(phi(rng), depth(rng));
    CHECK(ev.l1 + ev.l2 == 2.0);
    CHECK(ev.l3 == 1.0);
  }
  const Eigenvalues flat = psi_derivative_eigenvalues(0.0, 1.0);
  CHECK(flat.l1 == 1.0);
  CHECK(flat.l2 == 1.0);
}

TEST_CASE("immersion depth marks the degenerate eigenvalue") {
  CHECK(immersion_depth(8.0) == Approx(0.5 * std::log(3.0)).margin(1e-15));
  CHECK(std::isinf(immersion_depth(2.0)));
  CHECK(immersion_depth(2.0) < 0.0);
  CHECK(std::isinf(immersion_depth(0.5)));

  // At the immersion depth the middle eigenvalue vanishes: q = 1 there.
  for (double phi : {2.5, 4.0, 8.0, 20.0}) {
    const double d = immersion_depth(phi);
    const Eigenvalues ev = psi_derivative_eigenvalues(phi, d);
    CHECK(std::abs(ev.l2) < 1e-12);
  }
  CHECK_THROWS_AS(immersion_depth(-1.0), std::domain_error);
}

TEST_CASE("principal curvatures") {
  SECTION("depth zero returns the shape-operator eigenvalues") {
    const double phi = 0.3;
    const Curvatures c = principal_curvatures(phi, 0.0);
    CHECK(c.kappa1 == Approx(-phi / (phi - 1.0)).margin(1e-15));
    CHECK(c.kappa2 == Approx(-phi / (phi + 1.0)).margin(1e-15));
  }

  SECTION("norm one half gives umbilic-like kappa1 = 1 at every depth") {
    for (double d : {0.1, 1.0, 5.0})
      CHECK(principal_curvatures(0.5, d).kappa1 == 1.0);
  }

  SECTION("norm one uses the coth limit and poles at depth zero") {
    CHECK(principal_curvatures(1.0, 0.7).kappa1 ==
          Approx(1.0 / std::tanh(0.7)).margin(1e-14));
    CHECK_THROWS_AS(principal_curvatures(1.0, 0.0), curvature_pole_error);
  }

  SECTION("deep surfaces flatten to curvature one") {
    const Curvatures c = principal_curvatures(0.7, 20.0);
    CHECK(std::abs(c.kappa1 - 1.0) < 1e-8);
    CHECK(std::abs(c.kappa2 - 1.0) < 1e-8);
  }

  SECTION("kappa2 never poles for positive depth") {
    CHECK_NOTHROW(principal_curvatures(1e6, 0.5));
    CHECK_THROWS_AS(principal_curvatures(-0.1, 1.0), std::domain_error);
  }
}

TEST_CASE("embedding depth is the log of the disk factor") {
  CHECK(embedding_depth(0.2, 1.5) ==
        Approx(std::log(2.0 / std::tanh(0.1))).margin(1e-13));
  CHECK(std::exp(embedding_depth(2.0, 0.5)) ==
        Approx(embedded_disk_factor(2.0, 0.5)).epsilon(1e-15));
}

TEST_CASE("convexity threshold matches sampled curvature positivity") {
  for (double phi_sup : {0.0, 0.2, 0.5, 1.0, 2.0}) {
    for (double d : {-0.5, 0.05, 0.2, 0.45, 0.7, 1.2, 3.0}) {
      bool all_positive = d > 0.0;
      if (d > 0.0) {
        for (int i = 0; i <= 50 && all_positive; ++i) {
          const double phi = phi_sup * double(i) / 50.0;
          const Curvatures c = principal_curvatures(phi, d);
          all_positive = c.kappa1 > 0.0 && c.kappa2 > 0.0;
        }
      }
      CHECK(convexity_check(phi_sup, d) == all_positive);
    }
  }
  // Exactly at the threshold depth the minimum curvature is zero, not
  // positive.
  const double phi_sup = 0.8;
  const double d_star = std::atanh(phi_sup / (phi_sup + 1.0));
  CHECK_FALSE(convexity_check(phi_sup, d_star));
  CHECK(convexity_check(phi_sup, d_star + 1e-6));
  CHECK(std::abs(principal_curvatures(phi_sup, d_star).kappa2) < 1e-12);
}
