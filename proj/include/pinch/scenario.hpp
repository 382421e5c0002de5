#pragma once

// Scenario configuration for pinching reports: a flat "key = value" text
// format with dotted paths, '#' comments, full-file validation, and
// deterministic ordering of named components.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pinch/kernels.hpp"
#include "pinch/numeric.hpp"

namespace pinch {

// Carries every problem found in a configuration, one issue per offending
// key path; what() joins them line by line.
struct ConfigError : std::runtime_error {
  std::vector<std::string> issues;

  explicit ConfigError(std::vector<std::string> list)
      : std::runtime_error(join(list)), issues(std::move(list)) {}

  static std::string join(const std::vector<std::string>& list) {
    std::string out = "invalid configuration:";
    for (const std::string& s : list) {
      out += "\n  ";
      out += s;
    }
    return out;
  }
};

struct BoundaryInput {
  std::string name;
  double kappa = 0.0;
  std::optional<double> sigma_norm_alpha;  // absent: Nehari default if enabled
};

struct GeodesicInput {
  std::string name;
  double length_alpha = 0.0;
  double twist_alpha = 0.0;
  double bound_L = 0.0;
};

// Constants the underlying theory asserts to exist without computing;
// absent values propagate as flagged nulls, never as guessed numbers.
struct NonConstructiveInputs {
  std::optional<double> ell1;
  std::optional<double> ell2;
  std::optional<double> eps0;
  std::optional<double> K1;
  std::optional<double> delta;
};

struct ScenarioConfig {
  double alpha = 0.0;
  int grid_points = 256;
  bool nehari_sigma_default = false;
  std::vector<std::pair<std::string, double>> cone_lengths;  // sorted by name
  std::vector<BoundaryInput> boundaries;                     // sorted by name
  std::vector<GeodesicInput> geodesics;                      // sorted by name
  NonConstructiveInputs nonconstructive;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline bool valid_name(const std::string& s) {
  if (s.empty() || s.size() > 32) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

inline bool parse_double(const std::string& s, double* out) {
  if (s.empty()) return false;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return false;
  *out = v;
  return true;
}

inline bool parse_int(const std::string& s, long* out) {
  if (s.empty()) return false;
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size()) return false;
  *out = v;
  return true;
}

inline std::vector<std::string> split_path(const std::string& key) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : key) {
    if (c == '.') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace detail

// Parses and validates configuration text. Collects every issue before
// throwing so a single run reports all problems; unknown keys are rejected.
inline ScenarioConfig parse_scenario_config(const std::string& text) {
  std::vector<std::string> issues;
  std::map<std::string, std::string> raw;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      issues.push_back("line " + std::to_string(lineno) +
                       ": expected 'key = value'");
      continue;
    }
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      issues.push_back("line " + std::to_string(lineno) +
                       ": empty key or value");
      continue;
    }
    if (!raw.emplace(key, value).second)
      issues.push_back(key + ": duplicate key");
  }

  ScenarioConfig cfg;
  bool have_alpha = false;
  std::map<std::string, double> cones;
  std::map<std::string, BoundaryInput> boundaries;
  struct GeoParts {
    std::optional<double> length_alpha, twist_alpha, bound_L;
  };
  std::map<std::string, GeoParts> geodesics;

  const auto need_number = [&](const std::string& key, const std::string& value,
                               double* out) {
    if (!detail::parse_double(value, out) || !std::isfinite(*out)) {
      issues.push_back(key + ": not a finite number");
      return false;
    }
    return true;
  };

  for (const auto& [key, value] : raw) {
    const std::vector<std::string> path = detail::split_path(key);
    if (path.size() == 1 && path[0] == "alpha") {
      have_alpha = true;
      double v;
      if (need_number(key, value, &v)) {
        if (v <= 0.0)
          issues.push_back("alpha: must be positive");
        else
          cfg.alpha = v;
      }
    } else if (path.size() == 1 && path[0] == "grid_points") {
      long v;
      if (!detail::parse_int(value, &v))
        issues.push_back("grid_points: not an integer");
      else if (v < 2 || v > 100000)
        issues.push_back("grid_points: must lie in [2, 100000]");
      else
        cfg.grid_points = static_cast<int>(v);
    } else if (path.size() == 1 && path[0] == "nehari_sigma_default") {
      if (value == "true")
        cfg.nehari_sigma_default = true;
      else if (value == "false")
        cfg.nehari_sigma_default = false;
      else
        issues.push_back("nehari_sigma_default: expected true or false");
    } else if (path.size() == 2 && path[0] == "cone_length") {
      if (!detail::valid_name(path[1])) {
        issues.push_back(key + ": invalid component name");
        continue;
      }
      double v;
      if (need_number(key, value, &v)) {
        if (v < 0.0)
          issues.push_back(key + ": must be >= 0");
        else
          cones[path[1]] = v;
      }
    } else if (path.size() == 3 && path[0] == "boundary") {
      if (!detail::valid_name(path[1])) {
        issues.push_back(key + ": invalid component name");
        continue;
      }
      BoundaryInput& b = boundaries[path[1]];
      b.name = path[1];
      if (path[2] == "kappa") {
        double v;
        if (need_number(key, value, &v)) {
          if (v <= 0.0)
            issues.push_back(key + ": must be positive");
          else
            b.kappa = v;
        }
      } else if (path[2] == "sigma_norm_alpha") {
        double v;
        if (need_number(key, value, &v)) {
          if (v < 0.0)
            issues.push_back(key + ": must be >= 0");
          else
            b.sigma_norm_alpha = v;
        }
      } else {
        issues.push_back(key + ": unknown key");
      }
    } else if (path.size() == 3 && path[0] == "geodesic") {
      if (!detail::valid_name(path[1])) {
        issues.push_back(key + ": invalid component name");
        continue;
      }
      GeoParts& g = geodesics[path[1]];
      double v;
      if (path[2] == "length_alpha") {
        if (need_number(key, value, &v)) {
          if (v <= 0.0)
            issues.push_back(key + ": must be positive");
          else
            g.length_alpha = v;
        }
      } else if (path[2] == "twist_alpha") {
        if (need_number(key, value, &v)) g.twist_alpha = v;
      } else if (path[2] == "bound_L") {
        if (need_number(key, value, &v)) {
          if (v <= 0.0)
            issues.push_back(key + ": must be positive");
          else
            g.bound_L = v;
        }
      } else {
        issues.push_back(key + ": unknown key");
      }
    } else if (path.size() == 2 && path[0] == "nonconstructive") {
      double v;
      if (path[1] == "ell1" || path[1] == "ell2" || path[1] == "eps0" ||
          path[1] == "K1") {
        if (need_number(key, value, &v)) {
          if (v <= 0.0)
            issues.push_back(key + ": must be positive");
          else if (path[1] == "ell1")
            cfg.nonconstructive.ell1 = v;
          else if (path[1] == "ell2")
            cfg.nonconstructive.ell2 = v;
          else if (path[1] == "eps0")
            cfg.nonconstructive.eps0 = v;
          else
            cfg.nonconstructive.K1 = v;
        }
      } else if (path[1] == "delta") {
        if (need_number(key, value, &v)) {
          if (v <= 0.0 || v >= strain_kernel_radius_limit())
            issues.push_back(key + ": must lie in (0, pi/sqrt(2))");
          else
            cfg.nonconstructive.delta = v;
        }
      } else {
        issues.push_back(key + ": unknown key");
      }
    } else {
      issues.push_back(key + ": unknown key");
    }
  }

  if (!have_alpha) issues.push_back("alpha: missing required key");
  if (cones.empty())
    issues.push_back("cone_length.<name>: at least one component required");
  for (const auto& [name, b] : boundaries) {
    if (b.kappa <= 0.0)
      issues.push_back("boundary." + name + ".kappa: missing required key");
    if (!b.sigma_norm_alpha && !cfg.nehari_sigma_default)
      issues.push_back("boundary." + name +
                       ".sigma_norm_alpha: missing (set nehari_sigma_default"
                       " = true to use 3/2)");
  }
  for (const auto& [name, g] : geodesics) {
    if (!g.length_alpha)
      issues.push_back("geodesic." + name + ".length_alpha: missing required key");
    if (!g.twist_alpha)
      issues.push_back("geodesic." + name + ".twist_alpha: missing required key");
    if (!g.bound_L)
      issues.push_back("geodesic." + name + ".bound_L: missing required key");
  }

  if (!issues.empty()) throw ConfigError(std::move(issues));

  for (const auto& [name, L] : cones) cfg.cone_lengths.emplace_back(name, L);
  for (const auto& [name, b] : boundaries) cfg.boundaries.push_back(b);
  for (const auto& [name, g] : geodesics)
    cfg.geodesics.push_back(
        GeodesicInput{name, *g.length_alpha, *g.twist_alpha, *g.bound_L});
  return cfg;
}

inline ScenarioConfig load_scenario_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ConfigError({"config: cannot read file '" + path + "'"});
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_config(buf.str());
}

}  // namespace pinch
