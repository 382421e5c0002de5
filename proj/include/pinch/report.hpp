#pragma once

// End-to-end pinching report: runs every bound in the library over one
// scenario configuration and renders a canonical, byte-deterministic text
// document. Every numeric line carries the identifier of the operation that
// produced it; absent non-constructive inputs surface as null plus a flag,
// never as substituted numbers.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pinch/epstein.hpp"
#include "pinch/flow.hpp"
#include "pinch/halfspace.hpp"
#include "pinch/hyperbolic.hpp"
#include "pinch/quad_diff.hpp"
#include "pinch/scenario.hpp"
#include "pinch/tube.hpp"

namespace pinch {

namespace detail {

// Abscissae of the form t_min + span * (i / (n-1)), so regridding with
// 2n-1 points reproduces the original n points bitwise; the last point is
// pinned to t_max exactly.
inline std::vector<double> make_grid(double t_min, double t_max, int n) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n));
  const double span = t_max - t_min;
  for (int i = 0; i + 1 < n; ++i)
    grid.push_back(t_min +
                   span * (static_cast<double>(i) / static_cast<double>(n - 1)));
  grid.push_back(t_max);
  return grid;
}

// Resolution of the short-length threshold: the explicit component is always
// available; the full minimum exists only when both non-constructive inputs
// are present, otherwise the explicit component stands in (it is an upper
// bound for the true threshold, so dependent bands are reported wider, never
// narrower).
struct EllZero {
  double ell3 = 0.0;
  std::optional<double> ell0;
  double effective = 0.0;
  bool explicit_only = true;
};

inline EllZero resolve_ell0(const ScenarioConfig& cfg,
                            std::vector<std::string>* flags) {
  EllZero e;
  e.ell3 = ell0_explicit_component(cfg.alpha);
  const NonConstructiveInputs& nc = cfg.nonconstructive;
  if (nc.ell1 && nc.ell2) {
    e.ell0 = std::min({*nc.ell1, *nc.ell2, e.ell3});
    e.explicit_only = false;
    if (flags) {
      flags->push_back("nonconstructive_used.ell1");
      flags->push_back("nonconstructive_used.ell2");
    }
  } else {
    if (flags) {
      if (!nc.ell1) flags->push_back("nonconstructive_missing.ell1");
      if (!nc.ell2) flags->push_back("nonconstructive_missing.ell2");
      flags->push_back("ell0_explicit_only");
    }
  }
  e.effective = e.ell0 ? *e.ell0 : e.ell3;
  return e;
}

// Length-control constants need both non-constructive inputs and at least
// one geodesic to supply the length hypothesis L (the largest bound_L).
inline std::optional<ControlConstants> resolve_control(
    const ScenarioConfig& cfg, std::vector<std::string>* flags) {
  const NonConstructiveInputs& nc = cfg.nonconstructive;
  if (flags) {
    if (!nc.K1) flags->push_back("nonconstructive_missing.K1");
    if (!nc.delta) flags->push_back("nonconstructive_missing.delta");
  }
  if (!nc.K1 || !nc.delta) return std::nullopt;
  if (cfg.geodesics.empty()) {
    if (flags) flags->push_back("control_unavailable.no_geodesics");
    return std::nullopt;
  }
  double L = 0.0;
  for (const GeodesicInput& g : cfg.geodesics) L = std::max(L, g.bound_L);
  if (flags) {
    flags->push_back("nonconstructive_used.K1");
    flags->push_back("nonconstructive_used.delta");
  }
  return controllengths_constants(L, *nc.delta, *nc.K1,
                                  ball_volume(*nc.delta));
}

inline void merge_flags(std::vector<std::string>* flags) {
  std::sort(flags->begin(), flags->end());
  flags->erase(std::unique(flags->begin(), flags->end()), flags->end());
}

}  // namespace detail

struct ConeSection {
  std::string name;
  double length_alpha = 0.0;
  bool zero_length = false;
  std::optional<double> tube_radius_v;
  std::optional<double> boundary_area_v;
  std::optional<double> hk_area_bound;
  std::optional<double> torus_height;
  std::optional<double> torus_circumference;
  std::optional<double> torus_four_H_sq;
  bool radius_ok = true;
  bool length_ok = true;
  bool degenerate = false;
  double limit_t0_lower = 0.0;
  std::optional<double> limit_t0_upper;
  FlowEnvelope envelope;
};

struct GeodesicSection {
  GeodesicInput input;
  double derivative_bound_alpha = 0.0;
  double factor_lo = 1.0;
  double factor_hi = 1.0;
  double limit_lo = 0.0;
  double limit_hi = 0.0;
  double band_lo = 0.0;
  double band_hi = 0.0;
  double band_lo_canonical = 0.0;
  double band_hi_canonical = 0.0;
  bool wrapped = false;
  std::optional<double> control_factor_lo;
  std::optional<double> control_factor_hi;
  FlowEnvelope length_curve;
  FlowEnvelope twist_band_curve;
};

struct BoundarySection {
  std::string name;
  double kappa = 0.0;
  double sigma_alpha = 0.0;
  bool nehari_defaulted = false;
  double K = 0.0;
  double sigma_bound = 0.0;
  double C = 0.0;
  double phi_sup_alpha = 0.0;
  double sigma_drilled = 0.0;
  double immersion_alpha = 0.0;
  double immersion_drilled = 0.0;
  double embedding_alpha = 0.0;
  double embedding_drilled = 0.0;
  double disk_factor_drilled = 0.0;
  double curvature_min_drilled = 0.0;
  double curvature_max_drilled = 0.0;
  bool convex_drilled = false;
};

struct ApplicationsSection {
  double total_boundary_length = 0.0;
  std::vector<std::pair<std::string, double>> distance_bounds;
  std::optional<double> control_K;
  std::optional<double> control_A;
  std::optional<double> length_factor_lo;
  std::optional<double> length_factor_hi;
  std::optional<double> twist_factor_lo;
  std::optional<double> twist_factor_hi;
  std::optional<double> ell0_prime;
  std::vector<std::string> flags;
};

// Comparison between the original and drilled structures for a given set of
// boundary curve lengths: distance bound C * sum, multiplicative length
// factors exp(-/+ A * sum), twist factors (1 -/+ A * sum), and the tightened
// short-length threshold min(ell0, eps0). Missing non-constructive inputs
// leave the dependent fields null and flagged.
inline ApplicationsSection drilled_comparison(
    const ScenarioConfig& cfg,
    const std::vector<std::pair<std::string, double>>& boundary_lengths) {
  ApplicationsSection app;
  double total = 0.0;
  for (const auto& [name, len] : boundary_lengths) total += len;
  app.total_boundary_length = total;

  std::vector<std::string> flags;
  const detail::EllZero ell = detail::resolve_ell0(cfg, &flags);
  const std::optional<ControlConstants> ctrl =
      detail::resolve_control(cfg, &flags);
  if (ctrl) {
    app.control_K = ctrl->K;
    app.control_A = ctrl->A;
    app.length_factor_lo = std::exp(-ctrl->A * total);
    app.length_factor_hi = std::exp(ctrl->A * total);
    app.twist_factor_lo = 1.0 - ctrl->A * total;
    app.twist_factor_hi = 1.0 + ctrl->A * total;
  }
  for (const BoundaryInput& b : cfg.boundaries) {
    const double sigma = b.sigma_norm_alpha ? *b.sigma_norm_alpha : 1.5;
    if (!b.sigma_norm_alpha) flags.push_back("nehari_default." + b.name);
    const ProjectiveBound pb =
        projective_distance_bound(cfg.alpha, b.kappa, sigma, total);
    app.distance_bounds.emplace_back(b.name, pb.C * total);
  }
  const NonConstructiveInputs& nc = cfg.nonconstructive;
  if (nc.eps0) {
    if (ell.ell0) {
      app.ell0_prime = std::min(*ell.ell0, *nc.eps0);
      flags.push_back("nonconstructive_used.eps0");
    }
  } else {
    flags.push_back("nonconstructive_missing.eps0");
  }
  detail::merge_flags(&flags);
  app.flags = std::move(flags);
  return app;
}

struct Report {
  ScenarioConfig config;
  double total_cone_length = 0.0;
  double tube_radius_threshold = 0.0;
  detail::EllZero ell;
  std::vector<ConeSection> cones;
  std::vector<GeodesicSection> geodesics;
  double cusp_bound = 0.0;
  FlowEnvelope cusp_curve;
  std::vector<BoundarySection> boundaries;
  ApplicationsSection applications;
  std::vector<std::string> flags;

  std::string render() const;
};

inline Report run_report(const ScenarioConfig& cfg) {
  Report rep;
  rep.config = cfg;
  std::vector<std::string> flags;

  const double alpha = cfg.alpha;
  double total = 0.0;
  for (const auto& [name, L] : cfg.cone_lengths) total += L;
  rep.total_cone_length = total;
  rep.tube_radius_threshold = std::asinh(std::sqrt(2.0));
  rep.ell = detail::resolve_ell0(cfg, &flags);

  const std::vector<double> grid =
      detail::make_grid(0.01 * alpha, alpha, cfg.grid_points);

  for (const auto& [name, L] : cfg.cone_lengths) {
    ConeSection cs;
    cs.name = name;
    cs.length_alpha = L;
    if (L > 0.0) {
      const TubeParams tube = make_tube(alpha, L);
      cs.tube_radius_v = tube.radius;
      cs.boundary_area_v = tube.boundary_area;
      cs.radius_ok = tube.radius >= rep.tube_radius_threshold;
      cs.hk_area_bound = hk_area_lower_bound(tube.radius);
      const TorusShape torus = torus_shape(alpha, L, tube.radius);
      cs.torus_height = torus.height;
      cs.torus_circumference = torus.circumference;
      cs.torus_four_H_sq = torus.four_H_sq;
    } else {
      cs.zero_length = true;
      flags.push_back("zero_length_cone." + name);
    }
    cs.length_ok = L <= rep.ell.ell3;
    if (!cs.length_ok) flags.push_back("outside_explicit_regime." + name);
    bool degen = false;
    cs.envelope = cone_length_curve(alpha, L, grid, &degen);
    cs.degenerate = degen;
    // The upper closed form reaches t = 0 with limit 0 only when its
    // denominator alpha - 2 L alpha^2 stays positive down to t = 0.
    if (alpha - 2.0 * L * alpha * alpha > 0.0)
      cs.limit_t0_upper = 0.0;
    else
      cs.degenerate = true;
    if (cs.degenerate) flags.push_back("bound_degenerate.cone_length." + name);
    rep.cones.push_back(std::move(cs));
  }

  const std::optional<ControlConstants> ctrl =
      detail::resolve_control(cfg, &flags);

  for (const GeodesicInput& g : cfg.geodesics) {
    GeodesicSection gs;
    gs.input = g;
    gs.derivative_bound_alpha = geodesic_derivative_bound(g.length_alpha, total);
    const Bounds f = geodesic_length_envelope(g.length_alpha, total, alpha);
    gs.factor_lo = f.lo;
    gs.factor_hi = f.hi;
    gs.limit_lo = g.length_alpha * f.lo;
    gs.limit_hi = g.length_alpha * f.hi;
    const Bounds band = twist_envelope(g.twist_alpha, rep.ell.effective, total);
    gs.band_lo = std::min(band.lo, band.hi);
    gs.band_hi = std::max(band.lo, band.hi);
    const double modulus = 2.0 * num::pi;
    gs.band_lo_canonical = ComplexLength::canonical_twist(gs.band_lo, modulus);
    gs.band_hi_canonical = ComplexLength::canonical_twist(gs.band_hi, modulus);
    gs.wrapped = (gs.band_hi - gs.band_lo >= modulus) ||
                 (gs.band_hi_canonical < gs.band_lo_canonical);
    if (gs.wrapped) flags.push_back("twist_wrapped." + g.name);
    if (ctrl) {
      gs.control_factor_lo = std::exp(-ctrl->A * total);
      gs.control_factor_hi = std::exp(ctrl->A * total);
    }
    gs.length_curve = geodesic_length_curve(g.length_alpha, total, alpha, grid);
    gs.twist_band_curve =
        twist_curve(g.twist_alpha, rep.ell.effective, total, alpha, grid);
    rep.geodesics.push_back(std::move(gs));
  }

  rep.cusp_bound = cusp_drift_bound(alpha, total);
  rep.cusp_curve = cusp_drift_curve(alpha, total, grid);

  for (const BoundaryInput& b : cfg.boundaries) {
    BoundarySection bs;
    bs.name = b.name;
    bs.kappa = b.kappa;
    if (b.sigma_norm_alpha) {
      bs.sigma_alpha = *b.sigma_norm_alpha;
    } else {
      bs.sigma_alpha = 1.5;
      bs.nehari_defaulted = true;
      flags.push_back("nehari_default." + b.name);
    }
    const ProjectiveBound pb =
        projective_distance_bound(alpha, b.kappa, bs.sigma_alpha, total);
    bs.K = pb.K;
    bs.sigma_bound = pb.sigma_bound;
    bs.C = pb.C;
    bs.phi_sup_alpha = schwarzian_sup_bound(total, b.kappa, bs.sigma_alpha);
    bs.sigma_drilled = bs.sigma_alpha + pb.sigma_bound;
    if (!std::isfinite(bs.K) || !std::isfinite(bs.sigma_bound) ||
        !std::isfinite(bs.C) || !std::isfinite(bs.sigma_drilled))
      throw std::domain_error("run_report: projective bound overflow for '" +
                              b.name + "'");
    bs.immersion_alpha = immersion_depth(bs.sigma_alpha);
    bs.immersion_drilled = immersion_depth(bs.sigma_drilled);
    bs.embedding_alpha = embedding_depth(b.kappa, bs.sigma_alpha);
    bs.embedding_drilled = embedding_depth(b.kappa, bs.sigma_drilled);
    bs.disk_factor_drilled = embedded_disk_factor(b.kappa, bs.sigma_drilled);
    // Over the admissible range [0, sigma_drilled] at the embedded depth,
    // the smaller curvature decreases with the norm and the larger one
    // increases, saturating at coth(depth) once the norm reaches 1.
    const double d = bs.embedding_drilled;
    const Curvatures at_sup = principal_curvatures(bs.sigma_drilled, d);
    bs.curvature_min_drilled = at_sup.kappa2;
    bs.curvature_max_drilled = bs.sigma_drilled >= 1.0
                                   ? principal_curvatures(1.0, d).kappa1
                                   : at_sup.kappa1;
    bs.convex_drilled = convexity_check(bs.sigma_drilled, d);
    rep.boundaries.push_back(std::move(bs));
  }

  rep.applications = drilled_comparison(cfg, cfg.cone_lengths);
  for (const auto& [name, bound] : rep.applications.distance_bounds)
    if (!std::isfinite(bound))
      throw std::domain_error("run_report: distance bound overflow for '" +
                              name + "'");
  flags.insert(flags.end(), rep.applications.flags.begin(),
               rep.applications.flags.end());
  detail::merge_flags(&flags);
  rep.flags = std::move(flags);
  return rep;
}

namespace detail {

// Canonical text rendering. Numeric lines end with the producing operation
// in brackets; doubles use 17 significant digits so equal values are equal
// bytes; absent optionals print as null.
struct Renderer {
  std::string out;

  void raw(const std::string& key, const std::string& value,
           const std::string& tag) {
    out += key;
    out += " = ";
    out += value;
    if (!tag.empty()) {
      out += "  [";
      out += tag;
      out += "]";
    }
    out += "\n";
  }
  void num(const std::string& key, double v, const std::string& tag) {
    raw(key, num::format17(v), tag);
  }
  void opt(const std::string& key, const std::optional<double>& v,
           const std::string& tag) {
    raw(key, v ? num::format17(*v) : "null", tag);
  }
  void integer(const std::string& key, long v) {
    raw(key, std::to_string(v), "");
  }
  void boolean(const std::string& key, bool v) {
    raw(key, v ? "true" : "false", "");
  }
  // Depths of -inf mean the constraint is vacuous.
  void depth(const std::string& key, double v, const std::string& tag) {
    raw(key, std::isinf(v) && v < 0.0 ? "unconstrained" : num::format17(v),
        tag);
  }
  void blank() { out += "\n"; }
};

inline std::string pad_index(std::size_t i) {
  std::string s = std::to_string(i);
  return std::string(s.size() >= 6 ? 0 : 6 - s.size(), '0') + s;
}

inline void render_rows(Renderer& r, const std::string& prefix,
                        const FlowEnvelope& env, const std::string& tag) {
  for (std::size_t i = 0; i < env.grid.size(); ++i) {
    r.raw(prefix + ".row." + pad_index(i),
          num::format17(env.grid[i]) + "," + num::format17(env.lower[i]) +
              "," + num::format17(env.upper[i]),
          tag);
  }
}

}  // namespace detail

inline std::string Report::render() const {
  detail::Renderer r;
  r.integer("report.format_version", 1);
  r.blank();

  r.num("config.alpha", config.alpha, "report_cli.run_report");
  r.integer("config.grid_points", config.grid_points);
  r.boolean("config.nehari_sigma_default", config.nehari_sigma_default);
  for (const auto& [name, L] : config.cone_lengths)
    r.num("config.cone_length." + name, L, "report_cli.run_report");
  for (const BoundaryInput& b : config.boundaries) {
    r.num("config.boundary." + b.name + ".kappa", b.kappa,
          "report_cli.run_report");
    r.opt("config.boundary." + b.name + ".sigma_norm_alpha",
          b.sigma_norm_alpha, "report_cli.run_report");
  }
  for (const GeodesicInput& g : config.geodesics) {
    r.num("config.geodesic." + g.name + ".bound_L", g.bound_L,
          "report_cli.run_report");
    r.num("config.geodesic." + g.name + ".length_alpha", g.length_alpha,
          "report_cli.run_report");
    r.num("config.geodesic." + g.name + ".twist_alpha", g.twist_alpha,
          "report_cli.run_report");
  }
  r.opt("config.nonconstructive.K1", config.nonconstructive.K1,
        "report_cli.run_report");
  r.opt("config.nonconstructive.delta", config.nonconstructive.delta,
        "report_cli.run_report");
  r.opt("config.nonconstructive.ell1", config.nonconstructive.ell1,
        "report_cli.run_report");
  r.opt("config.nonconstructive.ell2", config.nonconstructive.ell2,
        "report_cli.run_report");
  r.opt("config.nonconstructive.eps0", config.nonconstructive.eps0,
        "report_cli.run_report");
  r.blank();

  r.num("totals.cone_length_alpha", total_cone_length, "report_cli.run_report");
  r.blank();

  r.num("hypothesis.tube_radius_threshold", tube_radius_threshold,
        "report_cli.run_report");
  r.num("hypothesis.ell3", ell.ell3, "tube_geometry.ell0_explicit_component");
  r.opt("hypothesis.ell0", ell.ell0, "report_cli.run_report");
  r.num("hypothesis.ell0_effective", ell.effective, "report_cli.run_report");
  r.boolean("hypothesis.ell0_explicit_only", ell.explicit_only);
  for (const ConeSection& c : cones) {
    const std::string p = "hypothesis.cone." + c.name;
    r.num(p + ".length_alpha", c.length_alpha, "report_cli.run_report");
    r.opt(p + ".tube_radius", c.tube_radius_v, "tube_geometry.tube_radius");
    r.opt(p + ".boundary_area", c.boundary_area_v, "tube_geometry.make_tube");
    r.boolean(p + ".radius_ok", c.radius_ok);
    r.boolean(p + ".length_ok", c.length_ok);
    r.opt(p + ".hk_area_bound", c.hk_area_bound,
          "tube_geometry.hk_area_lower_bound");
    r.opt(p + ".torus_height", c.torus_height, "tube_geometry.torus_shape");
    r.opt(p + ".torus_circumference", c.torus_circumference,
          "tube_geometry.torus_shape");
    r.opt(p + ".torus_four_H_sq", c.torus_four_H_sq,
          "tube_geometry.torus_shape");
  }
  r.blank();

  for (const ConeSection& c : cones) {
    const std::string p = "envelope.cone_length." + c.name;
    r.boolean(p + ".degenerate", c.degenerate);
    r.num(p + ".limit_t0_lower", c.limit_t0_lower,
          "drilling_flow.cone_length_envelope");
    r.opt(p + ".limit_t0_upper", c.limit_t0_upper,
          "drilling_flow.cone_length_envelope");
    detail::render_rows(r, p, c.envelope, "drilling_flow.cone_length_curve");
  }
  for (const GeodesicSection& g : geodesics) {
    const std::string p = "envelope.geodesic_length." + g.input.name;
    r.num(p + ".derivative_bound_alpha", g.derivative_bound_alpha,
          "drilling_flow.geodesic_derivative_bound");
    r.num(p + ".factor_lo", g.factor_lo,
          "drilling_flow.geodesic_length_envelope");
    r.num(p + ".factor_hi", g.factor_hi,
          "drilling_flow.geodesic_length_envelope");
    r.num(p + ".limit_lo", g.limit_lo,
          "drilling_flow.geodesic_length_envelope");
    r.num(p + ".limit_hi", g.limit_hi,
          "drilling_flow.geodesic_length_envelope");
    r.opt(p + ".control_factor_lo", g.control_factor_lo,
          "report_cli.run_report");
    r.opt(p + ".control_factor_hi", g.control_factor_hi,
          "report_cli.run_report");
    detail::render_rows(r, p, g.length_curve,
                        "drilling_flow.geodesic_length_curve");
  }
  for (const GeodesicSection& g : geodesics) {
    const std::string p = "envelope.twist." + g.input.name;
    r.num(p + ".band_lo", g.band_lo, "drilling_flow.twist_envelope");
    r.num(p + ".band_hi", g.band_hi, "drilling_flow.twist_envelope");
    r.num(p + ".band_lo_canonical", g.band_lo_canonical,
          "report_cli.run_report");
    r.num(p + ".band_hi_canonical", g.band_hi_canonical,
          "report_cli.run_report");
    r.boolean(p + ".wrapped", g.wrapped);
    detail::render_rows(r, p, g.twist_band_curve, "drilling_flow.twist_curve");
  }
  r.num("envelope.cusp_drift.bound", cusp_bound,
        "drilling_flow.cusp_drift_bound");
  detail::render_rows(r, "envelope.cusp_drift", cusp_curve,
                      "drilling_flow.cusp_drift_curve");
  r.blank();

  for (const BoundarySection& b : boundaries) {
    const std::string p = "projective." + b.name;
    r.num(p + ".sigma_norm_alpha", b.sigma_alpha, "report_cli.run_report");
    r.boolean(p + ".nehari_defaulted", b.nehari_defaulted);
    r.num(p + ".K", b.K, "halfspace_hodge.projective_distance_bound");
    r.num(p + ".sigma_bound", b.sigma_bound,
          "halfspace_hodge.projective_distance_bound");
    r.num(p + ".C", b.C, "halfspace_hodge.projective_distance_bound");
    r.num(p + ".phi_sup_alpha", b.phi_sup_alpha,
          "halfspace_hodge.schwarzian_sup_bound");
    r.num(p + ".sigma_drilled", b.sigma_drilled, "report_cli.run_report");
  }
  r.blank();

  for (const BoundarySection& b : boundaries) {
    const std::string p = "epstein." + b.name;
    r.depth(p + ".immersion_depth_alpha", b.immersion_alpha,
            "epstein_ends.immersion_depth");
    r.depth(p + ".immersion_depth_drilled", b.immersion_drilled,
            "epstein_ends.immersion_depth");
    r.num(p + ".embedding_depth_alpha", b.embedding_alpha,
          "epstein_ends.embedding_depth");
    r.num(p + ".embedding_depth_drilled", b.embedding_drilled,
          "epstein_ends.embedding_depth");
    r.num(p + ".disk_factor_drilled", b.disk_factor_drilled,
          "quadratic_differentials.embedded_disk_factor");
    r.num(p + ".curvature_min_drilled", b.curvature_min_drilled,
          "epstein_ends.principal_curvatures");
    r.num(p + ".curvature_max_drilled", b.curvature_max_drilled,
          "epstein_ends.principal_curvatures");
    r.boolean(p + ".convex_drilled", b.convex_drilled);
  }
  r.blank();

  r.num("applications.total_boundary_length",
        applications.total_boundary_length, "report_cli.drilled_comparison");
  r.opt("applications.control_K", applications.control_K,
        "drilling_flow.controllengths_constants");
  r.opt("applications.control_A", applications.control_A,
        "drilling_flow.controllengths_constants");
  for (const auto& [name, bound] : applications.distance_bounds)
    r.num("applications.distance_bound." + name, bound,
          "report_cli.drilled_comparison");
  r.opt("applications.length_factor_lo", applications.length_factor_lo,
        "report_cli.drilled_comparison");
  r.opt("applications.length_factor_hi", applications.length_factor_hi,
        "report_cli.drilled_comparison");
  r.opt("applications.twist_factor_lo", applications.twist_factor_lo,
        "report_cli.drilled_comparison");
  r.opt("applications.twist_factor_hi", applications.twist_factor_hi,
        "report_cli.drilled_comparison");
  r.opt("applications.ell0_prime", applications.ell0_prime,
        "report_cli.drilled_comparison");
  r.blank();

  r.integer("flags.count", static_cast<long>(flags.size()));
  for (const std::string& f : flags) r.boolean("flags." + f, true);
  return r.out;
}

// Curve emission for plotting: CSV rows "t,lower,upper" for one envelope
// quantity. The tag is either a bare family (unique component required) or
// family.name; grid_n overrides the config's grid_points and t_min the
// default window start 0.01 * alpha.
inline std::string emit_curves(const ScenarioConfig& cfg,
                               const std::string& quantity, int grid_n = 0,
                               double t_min = -1.0) {
  std::string family = quantity;
  std::string member;
  const std::size_t dot = quantity.find('.');
  if (dot != std::string::npos) {
    family = quantity.substr(0, dot);
    member = quantity.substr(dot + 1);
  }

  const int n = grid_n > 0 ? grid_n : cfg.grid_points;
  if (n < 2 || n > 100000)
    throw ConfigError({"curves: grid size must lie in [2, 100000]"});
  const double lo = t_min >= 0.0 ? t_min : 0.01 * cfg.alpha;
  if (lo >= cfg.alpha)
    throw ConfigError({"curves: grid start must lie below alpha"});
  const std::vector<double> grid = detail::make_grid(lo, cfg.alpha, n);

  const auto pick_cone = [&]() -> double {
    if (member.empty()) {
      if (cfg.cone_lengths.size() != 1)
        throw ConfigError(
            {"curves: quantity 'cone_length' is ambiguous, qualify with a"
             " component name"});
      return cfg.cone_lengths.front().second;
    }
    for (const auto& [name, L] : cfg.cone_lengths)
      if (name == member) return L;
    throw ConfigError({"curves: unknown cone component '" + member + "'"});
  };
  const auto pick_geodesic = [&]() -> const GeodesicInput& {
    if (member.empty()) {
      if (cfg.geodesics.size() != 1)
        throw ConfigError({"curves: quantity '" + family +
                           "' is ambiguous, qualify with a geodesic name"});
      return cfg.geodesics.front();
    }
    for (const GeodesicInput& g : cfg.geodesics)
      if (g.name == member) return g;
    throw ConfigError({"curves: unknown geodesic '" + member + "'"});
  };

  double total = 0.0;
  for (const auto& [name, L] : cfg.cone_lengths) total += L;

  FlowEnvelope env;
  if (family == "cone_length") {
    env = cone_length_curve(cfg.alpha, pick_cone(), grid);
  } else if (family == "geodesic_length") {
    const GeodesicInput& g = pick_geodesic();
    env = geodesic_length_curve(g.length_alpha, total, cfg.alpha, grid);
  } else if (family == "twist") {
    const GeodesicInput& g = pick_geodesic();
    const detail::EllZero ell = detail::resolve_ell0(cfg, nullptr);
    env = twist_curve(g.twist_alpha, ell.effective, total, cfg.alpha, grid);
  } else if (family == "cusp_drift") {
    if (!member.empty())
      throw ConfigError({"curves: 'cusp_drift' takes no component name"});
    env = cusp_drift_curve(cfg.alpha, total, grid);
  } else {
    throw ConfigError({"curves: unknown quantity '" + quantity + "'"});
  }

  std::string out = "t,lower,upper\n";
  for (std::size_t i = 0; i < env.grid.size(); ++i) {
    out += num::format17(env.grid[i]);
    out += ",";
    out += num::format17(env.lower[i]);
    out += ",";
    out += num::format17(env.upper[i]);
    out += "\n";
  }
  return out;
}

}  // namespace pinch
