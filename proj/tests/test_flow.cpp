#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "pinch/flow.hpp"
#include "pinch/hyperbolic.hpp"
#include "pinch/tube.hpp"

using namespace pinch;
using Catch::Approx;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> g;
  for (int i = 0; i + 1 < n; ++i)
    g.push_back(a + (b - a) * (double(i) / double(n - 1)));
  g.push_back(b);
  return g;
}

double envelope_lower(double alpha, double L, double t) {
  return t * L / (alpha + 2.0 * L * (alpha * alpha - t * t));
}

double envelope_upper(double alpha, double L, double t) {
  return t * L / (alpha - 2.0 * L * (alpha * alpha - t * t));
}

}  // namespace

TEST_CASE("cone derivative bounds use the tube radius") {
  const double t = 2.0, L = 0.01;
  const double R = tube_radius(t, L);
  const Bounds b = cone_derivative_bounds(t, L, R);
  const double s = std::sinh(R);
  CHECK(b.lo == Approx((L / t) * (1.0 - 1.0 / (s * s))).epsilon(1e-14));
  CHECK(b.hi == Approx((L / t) * (1.0 + 1.0 / (s * s))).epsilon(1e-14));
  CHECK(b.lo < b.hi);
}

TEST_CASE("cone length envelope closed forms") {
  const double alpha = 2.0 * num::pi;
  const double L = 0.01;

  SECTION("matches the integrated forms and collapses at t = alpha") {
    for (double t : {0.5, 1.0, num::pi, 5.0}) {
      const ConeLengthBand band = cone_length_envelope(alpha, L, t);
      CHECK(band.lo == Approx(envelope_lower(alpha, L, t)).epsilon(1e-14));
      CHECK(band.hi == Approx(envelope_upper(alpha, L, t)).epsilon(1e-14));
      CHECK(band.lo <= band.hi);
      CHECK_FALSE(band.degenerate);
    }
    const ConeLengthBand end = cone_length_envelope(alpha, L, alpha);
    CHECK(end.lo == Approx(L).margin(1e-15));
    CHECK(end.hi == Approx(L).margin(1e-15));
  }

  SECTION("halfway example") {
    const ConeLengthBand mid = cone_length_envelope(alpha, L, num::pi);
    CHECK(mid.lo == Approx(0.0045694).margin(1e-6));
    CHECK(mid.hi == Approx(0.0055203).margin(1e-6));
  }

  SECTION("degenerate upper bound flags and goes infinite") {
    const ConeLengthBand bad = cone_length_envelope(alpha, 1.0, 0.5);
    CHECK(bad.degenerate);
    CHECK(std::isinf(bad.hi));
    CHECK(bad.lo > 0.0);
  }

  SECTION("zero initial length degenerates to zero") {
    const ConeLengthBand z = cone_length_envelope(alpha, 0.0, 1.0);
    CHECK(z.lo == 0.0);
    CHECK(z.hi == 0.0);
  }
}

TEST_CASE("ODE integration reproduces the closed-form envelopes") {
  const double alpha = 2.0 * num::pi;
  const double L = 0.01;
  const std::vector<double> grid = linspace(0.01 * alpha, alpha, 512);
  const FlowEnvelope env = envelope_by_ode(alpha, L, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double lo = envelope_lower(alpha, L, grid[i]);
    const double hi = envelope_upper(alpha, L, grid[i]);
    worst = std::max(worst, std::abs(env.lower[i] - lo) / lo);
    worst = std::max(worst, std::abs(env.upper[i] - hi) / hi);
  }
  CHECK(worst < 1e-6);

  CHECK_THROWS_AS(envelope_by_ode(alpha, L, {1.0, 0.5, alpha}),
                  std::invalid_argument);
  CHECK_THROWS_AS(envelope_by_ode(alpha, L, {1.0, 2.0}),
                  std::invalid_argument);
}

TEST_CASE("geodesic envelope factors") {
  CHECK(geodesic_derivative_bound(0.5, 0.01) == Approx(0.02).margin(1e-15));
  CHECK_THROWS_AS(geodesic_derivative_bound(-1.0, 0.1), std::domain_error);

  // Calibrated so 4 alpha L_C = ln 2: factors are exactly (1/2, 2).
  const double alpha = 2.0;
  const double L_C = std::log(2.0) / (4.0 * alpha);
  const Bounds f = geodesic_length_envelope(1.0, L_C, alpha);
  CHECK(f.lo == Approx(0.5).epsilon(1e-14));
  CHECK(f.hi == Approx(2.0).epsilon(1e-14));
  CHECK(f.lo * f.hi == Approx(1.0).epsilon(1e-14));

  const Bounds spec_f = geodesic_length_envelope(0.5, 0.01, 2.0 * num::pi);
  CHECK(spec_f.lo == Approx(0.77775).margin(1e-4));
  CHECK(spec_f.hi == Approx(1.28576).margin(1e-4));
}

TEST_CASE("twist envelope band") {
  const double theta = num::pi, ell0 = 0.03, L_C = 0.01;
  const Bounds band = twist_envelope(theta, ell0, L_C);
  const double x = 4.0 * ell0 * L_C;
  CHECK(0.5 * (band.lo + band.hi) == Approx(theta).epsilon(1e-14));
  CHECK(band.hi - band.lo == Approx(2.0 * x * theta).epsilon(1e-12));
  CHECK_THROWS_AS(twist_envelope(theta, -0.1, L_C), std::domain_error);
}

TEST_CASE("control constants from the strain mean-value machinery") {
  const double delta = 1.0, K1 = 1.0;
  const double vol = ball_volume(delta);
  const ControlConstants cc = controllengths_constants(0.5, delta, K1, vol);
  // Independent assembly: f(delta) by quadrature, not the closed form.
  const double f_quad = 3.0 * num::integrate(
      [](double r) { return std::sinh(r) * std::sin(std::sqrt(2.0) * r); },
      0.0, delta);
  const double K_oracle = 3.0 * std::sqrt(2.0 * vol) * K1 /
                          (2.0 * num::pi * f_quad);
  CHECK(cc.K == Approx(K_oracle).epsilon(1e-9));
  CHECK(cc.A == Approx(std::sqrt(2.0 / 3.0) * cc.K).epsilon(1e-15));
  CHECK(cc.K == Approx(1.20678).margin(2e-4));

  CHECK_THROWS_AS(controllengths_constants(0.0, delta, K1, vol),
                  std::domain_error);
  CHECK_THROWS_AS(controllengths_constants(0.5, 2.3, K1, vol),
                  std::domain_error);
  CHECK_THROWS_AS(controllengths_constants(0.5, delta, 0.0, vol),
                  std::domain_error);
}

TEST_CASE("pointwise derivative bound and cusp drift") {
  CHECK(pointwise_derivative_bound(3.0, 0.5) ==
        Approx(std::sqrt(2.0 / 3.0) * 1.5).epsilon(1e-14));
  CHECK(cusp_drift_bound(2.0 * num::pi, 0.01) ==
        Approx(0.02 * num::pi).epsilon(1e-14));
  CHECK_THROWS_AS(cusp_drift_bound(-1.0, 0.1), std::domain_error);
}

TEST_CASE("envelope curves collapse at t = alpha") {
  const double alpha = 2.0 * num::pi;
  const std::vector<double> grid = linspace(0.01 * alpha, alpha, 9);

  bool degenerate = true;
  const FlowEnvelope cone = cone_length_curve(alpha, 0.001, grid, &degenerate);
  CHECK_FALSE(degenerate);
  CHECK(cone.lower.back() == Approx(0.001).margin(1e-15));
  CHECK(cone.upper.back() == Approx(0.001).margin(1e-15));
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(cone.lower[i] <= cone.upper[i]);

  const FlowEnvelope geo = geodesic_length_curve(0.5, 0.01, alpha, grid);
  CHECK(geo.lower.back() == Approx(0.5).margin(1e-15));
  CHECK(geo.upper.back() == Approx(0.5).margin(1e-15));
  CHECK(geo.lower.front() ==
        Approx(0.5 * std::exp(-4.0 * (alpha - grid.front()) * 0.01))
            .epsilon(1e-14));

  const FlowEnvelope tw = twist_curve(1.0, 0.03, 0.01, alpha, grid);
  CHECK(tw.lower.back() == Approx(1.0).margin(1e-15));
  CHECK(tw.upper.back() == Approx(1.0).margin(1e-15));

  const FlowEnvelope cusp = cusp_drift_curve(alpha, 0.01, grid);
  CHECK(cusp.upper.back() == 0.0);
  CHECK(cusp.lower.front() == 0.0);
  CHECK(cusp.upper.front() ==
        Approx((alpha - grid.front()) * 0.01).epsilon(1e-14));
}
