#pragma once

// Margulis-tube geometry: the radius normalization making the boundary torus
// area 1/2, the area lower bound, the explicit short-length threshold, and
// boundary-torus shape quantities.

#include <cmath>
#include <stdexcept>

#include "pinch/numeric.hpp"

namespace pinch {

// Tube around a cone axis or geodesic. boundary_area equals
// angle * core_length * sinh(radius) * cosh(radius).
struct TubeParams {
  double angle = 0.0;        // cone angle in radians, 2*pi for smooth axes
  double core_length = 0.0;  // length of the core curve
  double radius = 0.0;       // tube radius
  double boundary_area = 0.0;
};

// Radius of the tube whose boundary torus has area 1/2: the unique R with
// sinh(2R) = 1/(angle * core_length).
inline double tube_radius(double angle, double core_length) {
  if (angle <= 0.0 || core_length <= 0.0)
    throw std::domain_error("tube_radius: angle and core_length must be positive");
  return 0.5 * std::asinh(1.0 / (angle * core_length));
}

inline TubeParams make_tube(double angle, double core_length) {
  const double R = tube_radius(angle, core_length);
  const double area =
      angle * core_length * std::sinh(R) * std::cosh(R);
  return TubeParams{angle, core_length, R, area};
}

// Lower bound 1.6978 sinh^2(R)/cosh(2R) on the boundary area of an embedded
// tube of radius R.
inline double hk_area_lower_bound(double R) {
  if (R <= 0.0) throw std::domain_error("hk_area_lower_bound: R must be positive");
  const double s = std::sinh(R);
  return 1.6978 * s * s / std::cosh(2.0 * R);
}

// Explicit component ell_3 = 1/(2 sqrt(6) alpha) of the short-length
// threshold ell_0 = min(ell_1, ell_2, ell_3); ell_1 and ell_2 are
// non-constructive inputs supplied by the caller. Core lengths at most ell_3
// give tube radius at least asinh(sqrt(2)).
inline double ell0_explicit_component(double alpha) {
  if (alpha <= 0.0)
    throw std::domain_error("ell0_explicit_component: alpha must be positive");
  return 1.0 / (2.0 * std::sqrt(6.0) * alpha);
}

// Flat-cylinder shape of the boundary torus of a tube: height L cosh R,
// circumference t sinh R, and the ratio height^2 / area written as 4H^2.
struct TorusShape {
  double height = 0.0;
  double circumference = 0.0;
  double four_H_sq = 0.0;
};

inline TorusShape torus_shape(double t, double L, double R) {
  if (t <= 0.0 || L <= 0.0 || R <= 0.0)
    throw std::domain_error("torus_shape: inputs must be positive");
  TorusShape out;
  out.height = L * std::cosh(R);
  out.circumference = t * std::sinh(R);
  out.four_H_sq =
      out.height * out.height / (t * L * std::sinh(R) * std::cosh(R));
  return out;
}

}  // namespace pinch
