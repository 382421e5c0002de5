#pragma once

// Model deformation norms on a half space over the disk and the
// Schwarzian-distance pipeline: pointwise and L2 norms of the model form,
// the pointwise lower bound, the sup-norm bound on the boundary Schwarzian,
// and the integrated projective-distance bound.

#include <cmath>
#include <stdexcept>

#include "pinch/quad_diff.hpp"

namespace pinch {

// Pointwise norm 2 e^(-t) sech(t) |Phi(w)| of the model form at height t.
inline double model_pointwise_norm(double phi_norm_at_w, double t) {
  if (phi_norm_at_w < 0.0)
    throw std::domain_error("model_pointwise_norm: phi_norm must be >= 0");
  if (t < 0.0) throw std::domain_error("model_pointwise_norm: t must be >= 0");
  return 2.0 * std::exp(-t) / std::cosh(t) * phi_norm_at_w;
}

// Squared L2 norm of the model form over the half space: the height factor
// integrates to 2, leaving 2 |Phi|_2^2.
inline double model_l2_norm(const QuadDiff& phi) {
  const double l2 = l2_norm_disk(phi);
  return 2.0 * l2 * l2;
}

// Lower bound (8 pi / 3) |Phi(z)|^2 on the half-space L2 norm from a single
// pointwise value.
inline double halfspace_lower_bound(double phi_norm_at_z) {
  if (phi_norm_at_z < 0.0)
    throw std::domain_error("halfspace_lower_bound: phi_norm must be >= 0");
  return 8.0 * num::pi / 3.0 * phi_norm_at_z * phi_norm_at_z;
}

// Rate constant K = 2 sqrt(2 pi / 3) coth^2(kappa/2) of the
// projective-distance differential inequality.
inline double projective_ode_rate(double kappa) {
  if (kappa <= 0.0)
    throw std::domain_error("projective_ode_rate: kappa must be positive");
  const double c = 1.0 / std::tanh(0.5 * kappa);
  return 2.0 * std::sqrt(2.0 * num::pi / 3.0) * c * c;
}

// Sup-norm bound L_C(t) (1 + 2 sigma_norm_t) / (2 sqrt(2 pi/3)
// tanh^2(kappa/2)) on the boundary Schwarzian of the deformation.
inline double schwarzian_sup_bound(double L_C_t, double kappa,
                                   double sigma_norm_t) {
  if (kappa <= 0.0)
    throw std::domain_error("schwarzian_sup_bound: kappa must be positive");
  if (L_C_t < 0.0 || sigma_norm_t < 0.0)
    throw std::domain_error("schwarzian_sup_bound: norms must be >= 0");
  const double th = std::tanh(0.5 * kappa);
  return L_C_t * (1.0 + 2.0 * sigma_norm_t) /
         (2.0 * std::sqrt(2.0 * num::pi / 3.0) * th * th);
}

// Integrated bound on the projective distance swept while the cone angle
// runs from alpha to 0: sigma_bound = (1/2 + sigma_alpha)(e^(alpha K L_C) - 1)
// and its per-unit-core-length constant C = sigma_bound / L_C, with the
// L_C -> 0 limit (1/2 + sigma_alpha) alpha K.
struct ProjectiveBound {
  double K = 0.0;
  double sigma_bound = 0.0;
  double C = 0.0;
};

inline ProjectiveBound projective_distance_bound(double alpha, double kappa,
                                                 double sigma_norm_alpha,
                                                 double L_C_alpha) {
  if (alpha <= 0.0)
    throw std::domain_error("projective_distance_bound: alpha must be positive");
  if (sigma_norm_alpha < 0.0 || L_C_alpha < 0.0)
    throw std::domain_error("projective_distance_bound: norms must be >= 0");
  ProjectiveBound out;
  out.K = projective_ode_rate(kappa);
  const double c = 0.5 + sigma_norm_alpha;
  out.sigma_bound = c * std::expm1(alpha * out.K * L_C_alpha);
  out.C = L_C_alpha > 0.0 ? out.sigma_bound / L_C_alpha : c * alpha * out.K;
  return out;
}

}  // namespace pinch
