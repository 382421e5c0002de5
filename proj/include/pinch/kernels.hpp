#pragma once

// Fundamental solutions of the shifted radial Laplacians on hyperbolic
// balls, their verification, the Green's-identity check, and the mean-value
// constants they produce.

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pinch/hyperbolic.hpp"
#include "pinch/numeric.hpp"

namespace pinch {

enum class KernelFamily { vector, strain };

// Fundamental solution record: the kernel vanishes at the outer radius and
// its derivative there has the stored closed-form value.
struct MeanValueKernel {
  KernelFamily family = KernelFamily::vector;
  double outer_radius = 1.0;
  double derivative_at_R = 0.0;
};

inline double strain_kernel_radius_limit() {
  return num::pi / std::sqrt(2.0);
}

// Kernel (-cosh(sqrt(3) r) + coth(sqrt(3) R) sinh(sqrt(3) r))/(4 pi sinh r),
// evaluated through the difference form sinh(sqrt(3)(r - R)), which is the
// same function and is exactly zero at r = R. Satisfies
// f'' + 2 coth(r) f' - 2 f = 0 and behaves like -1/(4 pi r) near 0.
inline double vector_kernel(double r, double R) {
  if (R <= 0.0) throw std::domain_error("vector_kernel: R must be positive");
  if (r <= 0.0 || r > R)
    throw std::domain_error("vector_kernel: r must lie in (0, R]");
  const double s3 = std::sqrt(3.0);
  return std::sinh(s3 * (r - R)) /
         (4.0 * num::pi * std::sinh(s3 * R) * std::sinh(r));
}

inline double vector_kernel_derivative_at_R(double R) {
  if (R <= 0.0) throw std::domain_error("vector_kernel: R must be positive");
  const double s3 = std::sqrt(3.0);
  return s3 / (4.0 * num::pi * std::sinh(R) * std::sinh(s3 * R));
}

// Kernel (-cos(sqrt(2) r) + cot(sqrt(2) R) sin(sqrt(2) r))/(4 pi sinh r) for
// R < pi/sqrt(2), evaluated through the difference form sin(sqrt(2)(r - R)).
// Satisfies f'' + 2 coth(r) f' + 3 f = 0 (its sinh-scaled numerator solves
// g'' = -2g) and behaves like -1/(4 pi r) near 0.
inline double strain_kernel(double r, double R) {
  if (R <= 0.0 || R >= strain_kernel_radius_limit())
    throw std::domain_error("strain_kernel: R must lie in (0, pi/sqrt(2))");
  if (r <= 0.0 || r > R)
    throw std::domain_error("strain_kernel: r must lie in (0, R]");
  const double s2 = std::sqrt(2.0);
  return std::sin(s2 * (r - R)) /
         (4.0 * num::pi * std::sin(s2 * R) * std::sinh(r));
}

inline double strain_kernel_derivative_at_R(double R) {
  if (R <= 0.0 || R >= strain_kernel_radius_limit())
    throw std::domain_error("strain_kernel: R must lie in (0, pi/sqrt(2))");
  const double s2 = std::sqrt(2.0);
  return s2 / (4.0 * num::pi * std::sinh(R) * std::sin(s2 * R));
}

inline MeanValueKernel make_vector_kernel(double R) {
  return MeanValueKernel{KernelFamily::vector, R,
                         vector_kernel_derivative_at_R(R)};
}

inline MeanValueKernel make_strain_kernel(double R) {
  return MeanValueKernel{KernelFamily::strain, R,
                         strain_kernel_derivative_at_R(R)};
}

inline double kernel_value(const MeanValueKernel& k, double r) {
  return k.family == KernelFamily::vector ? vector_kernel(r, k.outer_radius)
                                          : strain_kernel(r, k.outer_radius);
}

// Maximum residual of the annihilating operator over interior samples:
// f'' + 2 coth(r) f' - 2 f for the vector family, + 3 f for the strain
// family, with derivatives from the finite-difference radial Laplacian.
// Samples stay away from the 1/r singularity, where finite differences on
// the kernel lose the target accuracy.
inline double verify_kernel(const MeanValueKernel& k, int samples) {
  if (samples < 2) throw std::invalid_argument("verify_kernel: samples >= 2");
  const double R = k.outer_radius;
  double lo = std::max(0.12, 0.2 * R);
  double hi = 0.98 * R;
  if (lo >= hi) lo = 0.5 * R;
  const auto f = [&](double r) { return kernel_value(k, r); };
  const double shift = k.family == KernelFamily::vector ? -2.0 : 3.0;
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double r = lo + (hi - lo) * double(i) / double(samples - 1);
    const double res = radial_laplacian(f, r) + shift * f(r);
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

// Radial bump phi(r) = scale * (1 - (r/R)^2)^power, smooth across 0 as an
// even function and vanishing to second order at R when power >= 2.
struct PolyBump {
  int power = 4;
  double scale = 1.0;
};

// Green's-identity residual |integral_{B_R} v L(phi) dV - phi(0)| for the
// vector kernel, with dV reduced to 4 pi sinh^2(r) dr and the bump's
// derivatives taken in closed form. The integrand is smooth and vanishes at
// both endpoints; composite Simpson on the stated interval count makes the
// residual decrease under refinement.
inline double greens_check(double R, const PolyBump& bump, int intervals = 256) {
  if (R <= 0.0) throw std::domain_error("greens_check: R must be positive");
  if (bump.power < 2 || bump.power > 12)
    throw std::domain_error("greens_check: unsupported bump (power outside [2, 12])");
  if (intervals < 8)
    throw std::invalid_argument("greens_check: intervals must be >= 8");
  const double p = bump.power;
  const auto integrand = [&](double r) -> double {
    if (r <= 0.0 || r >= R) return 0.0;
    const double u = (r / R) * (r / R);
    const double s = 1.0 - u;
    const double phi = bump.scale * std::pow(s, p);
    const double dphi = bump.scale * p * std::pow(s, p - 1) * (-2.0 * r / (R * R));
    const double d2phi =
        bump.scale * (-2.0 * p / (R * R)) * std::pow(s, p - 1) +
        bump.scale * 4.0 * p * (p - 1.0) * r * r / (R * R * R * R) *
            std::pow(s, p - 2);
    const double Lphi = d2phi + 2.0 / std::tanh(r) * dphi - 2.0 * phi;
    const double v = vector_kernel(r, R);
    const double sh = std::sinh(r);
    return v * Lphi * 4.0 * num::pi * sh * sh;
  };
  const double integral = num::simpson(integrand, 0.0, R, intervals);
  return std::abs(integral - bump.scale);
}

// Mean-value bound l2/sqrt(vol(B_R)) + b/2 for a field whose shifted
// Laplacian is bounded by b on the ball.
inline double vector_mean_value_bound(double l2, double R, double b) {
  if (l2 < 0.0 || b < 0.0)
    throw std::domain_error("vector_mean_value_bound: l2 and b must be >= 0");
  return l2 / std::sqrt(ball_volume(R)) + 0.5 * b;
}

// Weight f(R) = cosh(R) sin(sqrt(2) R) - sqrt(2) sinh(R) cos(sqrt(2) R),
// equal to 3 integral_0^R sinh(r) sin(sqrt(2) r) dr; positive on
// (0, pi/sqrt(2)).
inline double strain_weight(double R) {
  const double s2 = std::sqrt(2.0);
  return std::cosh(R) * std::sin(s2 * R) - s2 * std::sinh(R) * std::cos(s2 * R);
}

// Mean-value constant 3 sqrt(2 vol(B_R)) / (4 pi f(R)) for the strain family.
inline double strain_mean_value_constant(double R) {
  if (R <= 0.0 || R >= strain_kernel_radius_limit())
    throw std::domain_error(
        "strain_mean_value_constant: R must lie in (0, pi/sqrt(2))");
  return 3.0 * std::sqrt(2.0 * ball_volume(R)) /
         (4.0 * num::pi * strain_weight(R));
}

}  // namespace pinch
