#pragma once

// Holomorphic quadratic differentials on disks: Schwarzian derivatives,
// pointwise and L2 norms, the round-disk center bound, path length, and
// embedded-disk density factors.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pinch/hyperbolic.hpp"
#include "pinch/numeric.hpp"

namespace pinch {

// Thrown when a map is differentiated at a point where it is not locally
// univalent.
struct critical_point_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Finite Taylor polynomial phi(z) = sum a_n z^n representing the quadratic
// differential Phi = phi dz^2 on the unit disk.
struct QuadDiff {
  std::vector<complex> coeffs;  // a_0 .. a_N

  QuadDiff() = default;
  explicit QuadDiff(std::vector<complex> c) : coeffs(std::move(c)) {
    for (const complex& a : coeffs)
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw std::domain_error("QuadDiff: non-finite coefficient");
  }

  complex eval(complex z) const {
    complex acc{0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      acc = acc * z + *it;
    return acc;
  }

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

// Schwarzian derivative f'''/f' - (3/2)(f''/f')^2 by complex finite
// differences. The default step balances the cubic roundoff amplification of
// the third-derivative stencil against its fourth-order truncation.
inline complex schwarzian_of_map(const std::function<complex(complex)>& f,
                                 complex z, double step = 5e-3) {
  const complex f1 = num::cd1(f, z, step);
  if (std::abs(f1) < 1e-10)
    throw critical_point_error("schwarzian_of_map: critical point of f");
  const complex f2 = num::cd2(f, z, step);
  const complex f3 = num::cd3(f, z, step);
  const complex ratio = f2 / f1;
  return f3 / f1 - 1.5 * ratio * ratio;
}

// Pointwise norm sigma_D(z)^(-2) |phi(z)| of Phi = phi dz^2 in the disk D.
inline double pointwise_norm(const QuadDiff& phi, complex z,
                             const RoundDisk& D = RoundDisk::unit()) {
  const double sigma = disk_density(D, z);
  return std::abs(phi.eval(z)) / (sigma * sigma);
}

// L2 norm of Phi over the unit disk against the hyperbolic area element.
// Monomials are orthogonal, and the radial weight integrates in closed form:
// integral_0^1 (1-r^2)^2 r^(2n+1) dr = 1/((n+1)(n+2)(n+3)).
inline double l2_norm_disk(const QuadDiff& phi) {
  double sum = 0.0;
  for (std::size_t n = 0; n < phi.coeffs.size(); ++n) {
    const double w =
        1.0 / (double(n + 1) * double(n + 2) * double(n + 3));
    sum += std::norm(phi.coeffs[n]) * w;
  }
  return std::sqrt(0.5 * num::pi * sum);
}

// Lower bound for the L2 norm from the value at a single point: returns
// lhs = |Phi|_2 and rhs = 2 sqrt(pi/3) |Phi(z)|, with lhs >= rhs - 1e-9.
// Both sides are invariant under the disk automorphism taking z to the
// origin, so the values equal the recentered evaluation.
struct CenterBound {
  double lhs = 0.0;
  double rhs = 0.0;
};

inline CenterBound center_bound_check(const QuadDiff& phi, complex z) {
  CenterBound out;
  out.lhs = l2_norm_disk(phi);
  out.rhs = 2.0 * std::sqrt(num::pi / 3.0) * pointwise_norm(phi, z);
  return out;
}

// Trapezoid integral of sampled sup norms (t_i, |Phi_t|_inf) along a path.
inline double path_length(const std::vector<std::pair<double, double>>& norms) {
  if (norms.size() < 2)
    throw std::invalid_argument("path_length: need at least 2 samples");
  double acc = 0.0;
  for (std::size_t i = 1; i < norms.size(); ++i) {
    const double dt = norms[i].first - norms[i - 1].first;
    if (dt <= 0.0)
      throw std::invalid_argument("path_length: t must be strictly increasing");
    acc += 0.5 * dt * (norms[i].second + norms[i - 1].second);
  }
  return acc;
}

// Density ratio coth(l/4) between a disk cover and the subdisk determined by
// a geodesic of length l.
inline double subdisk_density_ratio(double ell) {
  if (ell <= 0.0)
    throw std::domain_error("subdisk_density_ratio: ell must be positive");
  return 1.0 / std::tanh(0.25 * ell);
}

// Density inflation factor coth(kappa/2) sqrt(1 + 2 sigma_norm) for embedded
// disks in a surface of injectivity radius kappa/2.
inline double embedded_disk_factor(double kappa, double sigma_norm) {
  if (kappa <= 0.0)
    throw std::domain_error("embedded_disk_factor: kappa must be positive");
  if (sigma_norm < 0.0)
    throw std::domain_error("embedded_disk_factor: sigma_norm must be >= 0");
  return std::sqrt(1.0 + 2.0 * sigma_norm) / std::tanh(0.5 * kappa);
}

}  // namespace pinch
