#pragma once

// Elementary hyperbolic-geometry primitives: Mobius maps on the extended
// plane, complex length of an isometry from its trace, hyperbolic ball
// volume, disk densities, and the radial Laplacian.

#include <cmath>
#include <complex>
#include <stdexcept>

#include "pinch/numeric.hpp"

namespace pinch {

using complex = std::complex<double>;

// Thrown when a trace corresponds to a parabolic element, which has no
// geodesic representative.
struct parabolic_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Determinant-normalized Mobius transformation z -> (az+b)/(cz+d).
struct Mobius {
  complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  // Rescales entries so ad - bc = 1; rejects singular matrices.
  static Mobius normalized(complex a, complex b, complex c, complex d) {
    const complex det = a * d - b * c;
    if (std::abs(det) < 1e-14)
      throw std::domain_error("Mobius: singular coefficient matrix");
    const complex s = 1.0 / std::sqrt(det);
    return Mobius{a * s, b * s, c * s, d * s};
  }

  complex det() const { return a * d - b * c; }

  Mobius compose(const Mobius& m) const {  // (*this) after m
    return Mobius{a * m.a + b * m.c, a * m.b + b * m.d, c * m.a + d * m.c,
                  c * m.b + d * m.d};
  }

  // Derivative of the map at z (finite z, away from the pole).
  complex derivative(complex z) const {
    const complex cz = c * z + d;
    return det() / (cz * cz);
  }
};

// The point at infinity on the Riemann sphere, encoded as (+inf, 0).
inline complex complex_infinity() {
  return complex{std::numeric_limits<double>::infinity(), 0.0};
}

inline bool is_complex_infinity(complex z) {
  return std::isinf(z.real()) || std::isinf(z.imag());
}

// Applies a Mobius map projectively; total on the extended plane.
inline complex mobius_apply(const Mobius& m, complex z) {
  if (is_complex_infinity(z)) {
    if (std::abs(m.c) == 0.0) return complex_infinity();
    return m.a / m.c;
  }
  const complex den = m.c * z + m.d;
  if (std::abs(den) == 0.0) return complex_infinity();
  return (m.a * z + m.b) / den;
}

// Length + twist pair of a closed geodesic or cone axis. The twist lives on
// a circle of circumference twist_modulus (the cone angle for a singular
// axis, 2*pi for a smooth geodesic); the stored representative is canonical.
struct ComplexLength {
  double length = 0.0;
  double twist = 0.0;
  double twist_modulus = 2.0 * num::pi;

  static double canonical_twist(double theta, double modulus) {
    double t = std::fmod(theta, modulus);
    if (t < 0.0) t += modulus;
    return t;
  }

  ComplexLength() = default;
  ComplexLength(double length_, double twist_, double modulus = 2.0 * num::pi)
      : length(length_),
        twist(canonical_twist(twist_, modulus)),
        twist_modulus(modulus) {
    if (length < 0.0) throw std::domain_error("ComplexLength: negative length");
    if (modulus <= 0.0)
      throw std::domain_error("ComplexLength: twist modulus must be positive");
  }
};

// Complex translation length of an isometry from its trace: the principal
// branch of 2*arccosh(tr/2) with nonnegative real part. Traces +-2 are
// parabolic and rejected.
inline ComplexLength complex_length_from_trace(complex tr,
                                               double twist_modulus = 2.0 *
                                                                      num::pi) {
  if (std::abs(tr - 2.0) < 1e-12 || std::abs(tr + 2.0) < 1e-12)
    throw parabolic_error("trace +-2: parabolic, no geodesic representative");
  complex ell = 2.0 * std::acosh(tr / 2.0);
  if (ell.real() < 0.0) ell = -ell;
  return ComplexLength(ell.real(), ell.imag(), twist_modulus);
}

// Trace of the isometry with a given complex length (the inverse map above).
inline complex trace_of_complex_length(const ComplexLength& cl) {
  return 2.0 * std::cosh(complex{cl.length, cl.twist} / 2.0);
}

// Volume of the hyperbolic ball of radius R: pi*(sinh(2R) - 2R), the closed
// form of 4*pi*integral_0^R sinh^2.
inline double ball_volume(double R) {
  if (R <= 0.0) throw std::domain_error("ball_volume: R must be positive");
  return num::pi * (std::sinh(2.0 * R) - 2.0 * R);
}

// Round disk (or half-plane) in the plane chart, carrying its curvature -1
// hyperbolic metric.
struct RoundDisk {
  complex center{0.0};
  double radius = 1.0;
  bool half_plane = false;  // upper half-plane when set; center/radius unused

  static RoundDisk unit() { return RoundDisk{}; }
  static RoundDisk upper_half_plane() { return RoundDisk{complex{0.0}, 1.0, true}; }

  RoundDisk() = default;
  RoundDisk(complex center_, double radius_, bool half_plane_ = false)
      : center(center_), radius(radius_), half_plane(half_plane_) {
    if (!half_plane && radius <= 0.0)
      throw std::domain_error("RoundDisk: radius must be positive");
  }

  bool contains(complex z) const {
    if (half_plane) return z.imag() > 0.0;
    return std::abs(z - center) < radius;
  }
};

// Curvature -1 density of a round disk at an interior point. The unit disk
// carries sigma(z) = 2/(1-|z|^2); general disks and the half-plane are the
// Mobius transports of that normalization.
inline double disk_density(const RoundDisk& D, complex z) {
  if (!D.contains(z))
    throw std::domain_error("disk_density: point not inside the disk");
  if (D.half_plane) return 1.0 / z.imag();
  const double rr = std::norm(z - D.center);
  return 2.0 * D.radius / (D.radius * D.radius - rr);
}

// Radial Laplacian in curvature -1 space, geometer's sign:
// returns f''(r) + 2*coth(r)*f'(r), which is -Delta f for radial f.
// Uses 4th-order stencils; the step shrinks near r = 0 so the stencil stays
// inside the domain.
inline double radial_laplacian(const std::function<double(double)>& f, double r,
                               double step = 0.0) {
  if (r <= 0.0) throw std::domain_error("radial_laplacian: r must be positive");
  const double h = step > 0.0 ? step : std::min(5e-4 * std::max(1.0, r), 0.25 * r);
  const double fp = num::d1(f, r, h);
  const double fpp = num::d2(f, r, h);
  return fpp + 2.0 / std::tanh(r) * fp;
}

}  // namespace pinch
