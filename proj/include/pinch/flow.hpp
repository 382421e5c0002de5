#pragma once

// Differential inequalities of the drilling deformation and their integrated
// envelopes: cone-singularity length, geodesic length, twist, and cusp-shape
// drift as functions of the cone angle t in (0, alpha].

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "pinch/kernels.hpp"
#include "pinch/numeric.hpp"

namespace pinch {

struct Bounds {
  double lo = 0.0;
  double hi = 0.0;
};

// Per-angle [lower, upper] curves for one monitored quantity; at t = alpha
// both curves equal the initial value.
struct FlowEnvelope {
  std::string quantity;  // cone_length | geodesic_length | twist | cusp_drift
  std::vector<double> grid;
  std::vector<double> lower;
  std::vector<double> upper;
};

// Derivative window (L/t)(1 -/+ 1/sinh^2 R) for the cone-singularity length.
inline Bounds cone_derivative_bounds(double t, double L, double R) {
  if (t <= 0.0 || L <= 0.0 || R <= 0.0)
    throw std::domain_error("cone_derivative_bounds: inputs must be positive");
  const double s = std::sinh(R);
  const double w = 1.0 / (s * s);
  return Bounds{(L / t) * (1.0 - w), (L / t) * (1.0 + w)};
}

// Closed-form envelope t L_alpha / (alpha +/- 2 L_alpha (alpha^2 - t^2)) for
// the cone-singularity length. The upper bound's denominator can vanish for
// long cores; the result is then a flagged infinite bound, not an error.
struct ConeLengthBand {
  double lo = 0.0;
  double hi = 0.0;
  bool degenerate = false;
};

inline ConeLengthBand cone_length_envelope(double alpha, double L_alpha,
                                           double t) {
  if (alpha <= 0.0)
    throw std::domain_error("cone_length_envelope: alpha must be positive");
  if (L_alpha < 0.0)
    throw std::domain_error("cone_length_envelope: L_alpha must be >= 0");
  if (t <= 0.0 || t > alpha)
    throw std::domain_error("cone_length_envelope: t must lie in (0, alpha]");
  const double spread = 2.0 * L_alpha * (alpha * alpha - t * t);
  ConeLengthBand out;
  out.lo = t * L_alpha / (alpha + spread);
  const double den = alpha - spread;
  if (den > 0.0) {
    out.hi = t * L_alpha / den;
  } else {
    out.hi = std::numeric_limits<double>::infinity();
    out.degenerate = true;
  }
  return out;
}

// RK4 integration, backwards from the datum at t = alpha, of the bounding
// ODEs L' = (L/t)(1 +/- 4 t L); the + sign integrates to the lower closed
// form and the - sign to the upper one. The grid must be strictly
// increasing, lie in (0, alpha], and end at alpha.
inline FlowEnvelope envelope_by_ode(double alpha, double L_alpha,
                                    const std::vector<double>& grid) {
  if (alpha <= 0.0)
    throw std::domain_error("envelope_by_ode: alpha must be positive");
  if (L_alpha < 0.0)
    throw std::domain_error("envelope_by_ode: L_alpha must be >= 0");
  if (grid.size() < 2)
    throw std::invalid_argument("envelope_by_ode: grid needs >= 2 points");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= 0.0 || grid[i] > alpha * (1.0 + 1e-12))
      throw std::invalid_argument("envelope_by_ode: grid must lie in (0, alpha]");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw std::invalid_argument("envelope_by_ode: grid must be increasing");
  }
  if (std::abs(grid.back() - alpha) > 1e-12 * alpha)
    throw std::invalid_argument("envelope_by_ode: grid must end at alpha");
  const auto rate_lo = [](double t, double L) {
    return (L / t) * (1.0 + 4.0 * t * L);
  };
  const auto rate_hi = [](double t, double L) {
    return (L / t) * (1.0 - 4.0 * t * L);
  };
  FlowEnvelope env;
  env.quantity = "cone_length";
  env.grid = grid;
  env.lower = num::rk4_backward(rate_lo, grid, L_alpha);
  env.upper = num::rk4_backward(rate_hi, grid, L_alpha);
  return env;
}

// Derivative bound 4 L_gamma L_C on the complex length of a geodesic.
inline double geodesic_derivative_bound(double L_gamma, double L_C) {
  if (L_gamma < 0.0 || L_C < 0.0)
    throw std::domain_error("geodesic_derivative_bound: inputs must be >= 0");
  return 4.0 * L_gamma * L_C;
}

// Multiplicative envelope factors exp(-/+ 4 alpha L_C(alpha)) bounding
// L_gamma(t)/L_gamma(alpha) over the whole angle range.
inline Bounds geodesic_length_envelope(double L_gamma_alpha, double L_C_alpha,
                                       double alpha) {
  if (L_gamma_alpha < 0.0 || L_C_alpha < 0.0 || alpha <= 0.0)
    throw std::domain_error("geodesic_length_envelope: bad inputs");
  const double x = 4.0 * alpha * L_C_alpha;
  return Bounds{std::exp(-x), std::exp(x)};
}

// Multiplicative twist band (1 -/+ 4 ell_0 L_C(alpha)) theta_alpha on the
// continuous lift of the twist; modulo reduction is presentation-level.
inline Bounds twist_envelope(double theta_alpha, double ell0,
                             double L_C_alpha) {
  if (ell0 < 0.0 || L_C_alpha < 0.0)
    throw std::domain_error("twist_envelope: ell0 and L_C must be >= 0");
  const double x = 4.0 * ell0 * L_C_alpha;
  return Bounds{(1.0 - x) * theta_alpha, (1.0 + x) * theta_alpha};
}

// Pointwise derivative bound sqrt(2/3) K L_gamma for long geodesics.
inline double pointwise_derivative_bound(double K, double L_gamma) {
  if (K < 0.0 || L_gamma < 0.0)
    throw std::domain_error("pointwise_derivative_bound: inputs must be >= 0");
  return std::sqrt(2.0 / 3.0) * K * L_gamma;
}

// Constants for the refined length-control bound: K assembled from the
// mean-value machinery at ball radius delta, and A = sqrt(2/3) K. K1 is a
// non-constructive input; L records the length hypothesis and does not enter
// the formula.
struct ControlConstants {
  double K = 0.0;
  double A = 0.0;
};

inline ControlConstants controllengths_constants(double L, double delta,
                                                 double K1,
                                                 double vol_B_delta) {
  if (L <= 0.0)
    throw std::domain_error("controllengths_constants: L must be positive");
  if (delta <= 0.0 || delta >= strain_kernel_radius_limit())
    throw std::domain_error(
        "controllengths_constants: delta must lie in (0, pi/sqrt(2))");
  if (K1 <= 0.0)
    throw std::domain_error("controllengths_constants: K1 must be positive");
  if (vol_B_delta <= 0.0)
    throw std::domain_error("controllengths_constants: vol_B_delta must be positive");
  ControlConstants out;
  out.K = 3.0 * std::sqrt(2.0 * vol_B_delta) * K1 /
          (2.0 * num::pi * strain_weight(delta));
  out.A = std::sqrt(2.0 / 3.0) * out.K;
  return out;
}

// Upper bound alpha L_C(alpha) on the hyperbolic path length swept by the
// cusp-torus Teichmueller parameter over t in [0, alpha].
inline double cusp_drift_bound(double alpha, double L_C_alpha) {
  if (alpha < 0.0 || L_C_alpha < 0.0)
    throw std::domain_error("cusp_drift_bound: inputs must be >= 0");
  return alpha * L_C_alpha;
}

// Closed-form envelope curves over a grid, for reports and row emission.
// Each collapses to its initial value at t = alpha.

inline FlowEnvelope cone_length_curve(double alpha, double L_alpha,
                                      const std::vector<double>& grid,
                                      bool* degenerate = nullptr) {
  FlowEnvelope env;
  env.quantity = "cone_length";
  env.grid = grid;
  bool any_degenerate = false;
  for (double t : grid) {
    const ConeLengthBand band = cone_length_envelope(alpha, L_alpha, t);
    env.lower.push_back(band.lo);
    env.upper.push_back(band.hi);
    any_degenerate = any_degenerate || band.degenerate;
  }
  if (degenerate) *degenerate = any_degenerate;
  return env;
}

// Geodesic-length band L_alpha exp(-/+ 4 (alpha - t) L_C(alpha)): the
// integrated derivative bound accumulated from alpha down to t.
inline FlowEnvelope geodesic_length_curve(double L_gamma_alpha,
                                          double L_C_alpha, double alpha,
                                          const std::vector<double>& grid) {
  if (L_gamma_alpha < 0.0 || L_C_alpha < 0.0 || alpha <= 0.0)
    throw std::domain_error("geodesic_length_curve: bad inputs");
  FlowEnvelope env;
  env.quantity = "geodesic_length";
  env.grid = grid;
  for (double t : grid) {
    const double x = 4.0 * (alpha - t) * L_C_alpha;
    env.lower.push_back(L_gamma_alpha * std::exp(-x));
    env.upper.push_back(L_gamma_alpha * std::exp(x));
  }
  return env;
}

// Twist band with the full width 4 ell_0 L_C(alpha) theta_alpha attained at
// t = 0 and scaled linearly by (alpha - t)/alpha in between.
inline FlowEnvelope twist_curve(double theta_alpha, double ell0,
                                double L_C_alpha, double alpha,
                                const std::vector<double>& grid) {
  if (ell0 < 0.0 || L_C_alpha < 0.0 || alpha <= 0.0)
    throw std::domain_error("twist_curve: bad inputs");
  FlowEnvelope env;
  env.quantity = "twist";
  env.grid = grid;
  for (double t : grid) {
    const double x = 4.0 * ell0 * L_C_alpha * (alpha - t) / alpha;
    const double a = (1.0 - x) * theta_alpha;
    const double b = (1.0 + x) * theta_alpha;
    env.lower.push_back(std::min(a, b));
    env.upper.push_back(std::max(a, b));
  }
  return env;
}

// Cusp-drift band [0, (alpha - t) L_C(alpha)]: no drift at t = alpha,
// growing to the full bound as t decreases to 0.
inline FlowEnvelope cusp_drift_curve(double alpha, double L_C_alpha,
                                     const std::vector<double>& grid) {
  if (alpha <= 0.0 || L_C_alpha < 0.0)
    throw std::domain_error("cusp_drift_curve: bad inputs");
  FlowEnvelope env;
  env.quantity = "cusp_drift";
  env.grid = grid;
  for (double t : grid) {
    env.lower.push_back(0.0);
    env.upper.push_back((alpha - t) * L_C_alpha);
  }
  return env;
}

}  // namespace pinch
