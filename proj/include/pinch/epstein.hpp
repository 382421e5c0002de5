#pragma once

// Equidistant-surface geometry of geometrically finite ends: derivative
// eigenvalues of the envelope map, immersion and embedding depth thresholds,
// principal curvatures, and convexity.

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pinch/quad_diff.hpp"

namespace pinch {

// Thrown where a principal curvature is undefined (denominator of the
// depth-transport formula vanishes).
struct curvature_pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Eigenvalues (1 + q, 1 - q, 1) of the envelope-map derivative at depth d,
// with q = |Phi(z)| / (4 e^d cosh d). l2 is computed as 2 - l1 so the first
// two eigenvalues sum to 2 exactly.
struct Eigenvalues {
  double l1 = 1.0;
  double l2 = 1.0;
  double l3 = 1.0;
};

inline Eigenvalues psi_derivative_eigenvalues(double phi_norm, double d) {
  if (phi_norm < 0.0)
    throw std::domain_error("psi_derivative_eigenvalues: phi_norm must be >= 0");
  const double q = phi_norm / (4.0 * std::exp(d) * std::cosh(d));
  Eigenvalues out;
  out.l1 = 1.0 + q;
  out.l2 = 2.0 - out.l1;
  out.l3 = 1.0;
  return out;
}

// Minimal depth d with 4 e^d cosh d = phi_sup, past which the envelope map
// is an immersion. Since 4 e^d cosh d = 2 e^(2d) + 2 is strictly increasing
// with infimum 2, the solution is d = ln((phi_sup - 2)/2)/2, and every depth
// works when phi_sup <= 2 (returned as -infinity).
inline double immersion_depth(double phi_sup) {
  if (phi_sup < 0.0)
    throw std::domain_error("immersion_depth: phi_sup must be >= 0");
  if (phi_sup <= 2.0) return -std::numeric_limits<double>::infinity();
  return 0.5 * std::log(0.5 * (phi_sup - 2.0));
}

// Principal curvatures of the depth-d equidistant surface:
// kappa_i = (sinh d + k_i cosh d)/(cosh d + k_i sinh d) with
// k_1 = -phi/(phi - 1) and k_2 = -phi/(phi + 1). The phi = 1 pole of k_1 is
// the analytic limit kappa_1 = coth d.
struct Curvatures {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
};

namespace detail {
inline double depth_transported_curvature(double k, double d) {
  const double sh = std::sinh(d);
  const double ch = std::cosh(d);
  const double den = ch + k * sh;
  if (std::abs(den) <= 1e-12 * (ch + std::abs(k * sh)))
    throw curvature_pole_error("principal_curvatures: undefined curvature");
  return (sh + k * ch) / den;
}
}  // namespace detail

inline Curvatures principal_curvatures(double phi_norm, double d) {
  if (phi_norm < 0.0)
    throw std::domain_error("principal_curvatures: phi_norm must be >= 0");
  Curvatures out;
  if (std::abs(phi_norm - 1.0) < 1e-12) {
    const double sh = std::sinh(d);
    if (sh == 0.0)
      throw curvature_pole_error("principal_curvatures: undefined curvature");
    out.kappa1 = std::cosh(d) / sh;
  } else {
    out.kappa1 = detail::depth_transported_curvature(
        -phi_norm / (phi_norm - 1.0), d);
  }
  out.kappa2 = detail::depth_transported_curvature(
      -phi_norm / (phi_norm + 1.0), d);
  return out;
}

// Depth threshold ln(coth(kappa/2) sqrt(1 + 2 sigma_norm)) past which the
// equidistant surfaces of distinct ends are disjoint; e^d equals
// embedded_disk_factor(kappa, sigma_norm) exactly.
inline double embedding_depth(double kappa, double sigma_norm) {
  return std::log(embedded_disk_factor(kappa, sigma_norm));
}

// Whether the depth-d surface is strictly convex for every pointwise norm in
// [0, phi_sup]. Both curvatures increase with the shape-operator eigenvalue
// k and k_2 decreases with phi, so the minimum over the range is kappa_2 at
// phi_sup; it is positive iff d > 0 and tanh d > phi_sup/(phi_sup + 1),
// and kappa_1 stays positive whenever d > 0.
inline bool convexity_check(double phi_sup, double d) {
  if (phi_sup < 0.0)
    throw std::domain_error("convexity_check: phi_sup must be >= 0");
  if (d <= 0.0) return false;
  return std::tanh(d) > phi_sup / (phi_sup + 1.0);
}

}  // namespace pinch
