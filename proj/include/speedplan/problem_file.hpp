// Copyright 2026 The speedplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "speedplan/problem.hpp"
#include "speedplan/spline_path.hpp"

namespace speedplan {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class UnknownPresetError : public std::invalid_argument {
 public:
  explicit UnknownPresetError(const std::string& what) : std::invalid_argument(what) {}
};

struct PiecewiseHermiteParams {
  double l1 = 0, l2 = 0, l3 = 0, l4 = 0;
  double radius = 0;
  friend bool operator==(const PiecewiseHermiteParams&, const PiecewiseHermiteParams&) = default;
};

struct SplineParams {
  std::vector<PlanarPoint> waypoints;
  friend bool operator==(const SplineParams& a, const SplineParams& b) {
    if (a.waypoints.size() != b.waypoints.size()) return false;
    for (size_t i = 0; i < a.waypoints.size(); ++i) {
      if (a.waypoints[i].x != b.waypoints[i].x || a.waypoints[i].y != b.waypoints[i].y)
        return false;
    }
    return true;
  }
};

struct SampledCurvatureParams {
  std::vector<double> values;
  friend bool operator==(const SampledCurvatureParams&, const SampledCurvatureParams&) = default;
};

/// Declarative form of a planning problem, mirroring the on-disk document.
/// All quantities are SI: meters, m/s, m/s^2. Bounds are interior constants;
/// v_start / v_end pin the boundary speeds. s_f may be omitted for spline
/// curvature, in which case the grid spans the path's own arc length.
struct ProblemFile {
  std::optional<double> s_f;
  int n = 4000;
  std::variant<PiecewiseHermiteParams, SplineParams, SampledCurvatureParams> curvature;
  double v_plus = 0.0;
  double v_minus = 0.0;
  double alpha_plus = 0.0;
  double alpha_minus = 0.0;
  double beta = 0.0;
  std::optional<double> v_start;
  std::optional<double> v_end;
  std::optional<double> eps_feas;
  std::optional<double> kappa_eps;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

namespace detail {

using json = nlohmann::ordered_json;

inline const json& require_key(const json& node, const std::string& key,
                               const std::string& where) {
  auto it = node.find(key);
  if (it == node.end()) {
    throw ParseError("problem file: missing required key '" + where + key + "'");
  }
  return *it;
}

inline double require_number(const json& node, const std::string& key, const std::string& where) {
  const json& value = require_key(node, key, where);
  if (!value.is_number()) {
    throw ParseError("problem file: '" + where + key + "' must be a number");
  }
  return value.get<double>();
}

inline std::optional<double> optional_number(const json& node, const std::string& key,
                                             const std::string& where) {
  auto it = node.find(key);
  if (it == node.end()) return std::nullopt;
  if (!it->is_number()) {
    throw ParseError("problem file: '" + where + key + "' must be a number");
  }
  return it->get<double>();
}

}  // namespace detail

inline ProblemFile parse_problem_file(const std::string& text) {
  namespace nl = nlohmann;
  detail::json doc;
  try {
    doc = detail::json::parse(text);
  } catch (const nl::json::parse_error& e) {
    throw ParseError(std::string("problem file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("problem file: top level must be an object");

  ProblemFile file;

  const detail::json& grid = detail::require_key(doc, "grid", "");
  const detail::json& s_f = detail::require_key(grid, "s_f", "grid.");
  if (s_f.is_string()) {
    if (s_f.get<std::string>() != "from_path") {
      throw ParseError("problem file: 'grid.s_f' must be a number or \"from_path\"");
    }
    file.s_f = std::nullopt;
  } else if (s_f.is_number()) {
    file.s_f = s_f.get<double>();
  } else {
    throw ParseError("problem file: 'grid.s_f' must be a number or \"from_path\"");
  }
  const detail::json& n = detail::require_key(grid, "n", "grid.");
  if (!n.is_number_integer()) throw ParseError("problem file: 'grid.n' must be an integer");
  file.n = n.get<int>();

  const detail::json& curvature = detail::require_key(doc, "curvature", "");
  const detail::json& type = detail::require_key(curvature, "type", "curvature.");
  if (!type.is_string()) throw ParseError("problem file: 'curvature.type' must be a string");
  const std::string type_name = type.get<std::string>();
  if (type_name == "piecewise_hermite") {
    PiecewiseHermiteParams p;
    p.l1 = detail::require_number(curvature, "l1", "curvature.");
    p.l2 = detail::require_number(curvature, "l2", "curvature.");
    p.l3 = detail::require_number(curvature, "l3", "curvature.");
    p.l4 = detail::require_number(curvature, "l4", "curvature.");
    p.radius = detail::require_number(curvature, "R", "curvature.");
    file.curvature = p;
  } else if (type_name == "spline") {
    const detail::json& waypoints = detail::require_key(curvature, "waypoints", "curvature.");
    if (!waypoints.is_array() || waypoints.size() < 3) {
      throw ParseError("problem file: 'curvature.waypoints' must be an array of at least 3 [x, y] pairs");
    }
    SplineParams p;
    for (const auto& wp : waypoints) {
      if (!wp.is_array() || wp.size() != 2 || !wp[0].is_number() || !wp[1].is_number()) {
        throw ParseError("problem file: each waypoint must be an [x, y] number pair");
      }
      p.waypoints.push_back({wp[0].get<double>(), wp[1].get<double>()});
    }
    file.curvature = std::move(p);
  } else if (type_name == "sampled") {
    const detail::json& values = detail::require_key(curvature, "values", "curvature.");
    if (!values.is_array()) {
      throw ParseError("problem file: 'curvature.values' must be an array");
    }
    SampledCurvatureParams p;
    for (const auto& v : values) {
      if (!v.is_number()) throw ParseError("problem file: 'curvature.values' must be numbers");
      p.values.push_back(v.get<double>());
    }
    file.curvature = std::move(p);
  } else {
    throw ParseError("problem file: unknown curvature type '" + type_name +
                     "' (expected piecewise_hermite, spline or sampled)");
  }

  const detail::json& bounds = detail::require_key(doc, "bounds", "");
  file.v_plus = detail::require_number(bounds, "v_plus", "bounds.");
  file.v_minus = detail::optional_number(bounds, "v_minus", "bounds.").value_or(0.0);
  file.alpha_plus = detail::require_number(bounds, "alpha_plus", "bounds.");
  file.alpha_minus = detail::require_number(bounds, "alpha_minus", "bounds.");
  file.beta = detail::require_number(bounds, "beta", "bounds.");
  file.v_start = detail::optional_number(bounds, "v_start", "bounds.");
  file.v_end = detail::optional_number(bounds, "v_end", "bounds.");

  if (auto it = doc.find("tolerances"); it != doc.end()) {
    file.eps_feas = detail::optional_number(*it, "eps_feas", "tolerances.");
    file.kappa_eps = detail::optional_number(*it, "kappa_eps", "tolerances.");
  }
  return file;
}

inline ProblemFile load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("problem file: cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_file(buffer.str());
}

inline std::string serialize_problem_file(const ProblemFile& file) {
  detail::json doc;
  doc["grid"]["s_f"] = file.s_f ? detail::json(*file.s_f) : detail::json("from_path");
  doc["grid"]["n"] = file.n;

  detail::json curvature;
  if (const auto* hermite = std::get_if<PiecewiseHermiteParams>(&file.curvature)) {
    curvature["type"] = "piecewise_hermite";
    curvature["l1"] = hermite->l1;
    curvature["l2"] = hermite->l2;
    curvature["l3"] = hermite->l3;
    curvature["l4"] = hermite->l4;
    curvature["R"] = hermite->radius;
  } else if (const auto* spline = std::get_if<SplineParams>(&file.curvature)) {
    curvature["type"] = "spline";
    auto& waypoints = curvature["waypoints"] = detail::json::array();
    for (const PlanarPoint& wp : spline->waypoints) {
      waypoints.push_back({wp.x, wp.y});
    }
  } else {
    curvature["type"] = "sampled";
    curvature["values"] = std::get<SampledCurvatureParams>(file.curvature).values;
  }
  doc["curvature"] = std::move(curvature);

  detail::json& bounds = doc["bounds"];
  bounds["v_plus"] = file.v_plus;
  bounds["v_minus"] = file.v_minus;
  if (file.v_start) bounds["v_start"] = *file.v_start;
  if (file.v_end) bounds["v_end"] = *file.v_end;
  bounds["alpha_plus"] = file.alpha_plus;
  bounds["alpha_minus"] = file.alpha_minus;
  bounds["beta"] = file.beta;

  if (file.eps_feas || file.kappa_eps) {
    detail::json& tolerances = doc["tolerances"];
    if (file.eps_feas) tolerances["eps_feas"] = *file.eps_feas;
    if (file.kappa_eps) tolerances["kappa_eps"] = *file.kappa_eps;
  }
  return doc.dump(2) + "\n";
}

/// Instantiates the declarative problem on its grid. Overrides replace the
/// file's interval count / feasibility tolerance when present.
inline ProblemSpec build_problem(const ProblemFile& file,
                                 std::optional<int> n_override = std::nullopt,
                                 std::optional<double> eps_feas_override = std::nullopt) {
  const int n = n_override.value_or(file.n);

  CurvatureModel model = std::visit(
      [&](const auto& params) -> CurvatureModel {
        using T = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<T, PiecewiseHermiteParams>) {
          if (!file.s_f) {
            throw ParseError("problem file: 'grid.s_f' = \"from_path\" requires spline curvature");
          }
          return PiecewiseHermiteCurvature(params.l1, params.l2, params.l3, params.l4,
                                           params.radius, *file.s_f);
        } else if constexpr (std::is_same_v<T, SplineParams>) {
          return QuinticPath(params.waypoints);
        } else {
          if (!file.s_f) {
            throw ParseError("problem file: 'grid.s_f' = \"from_path\" requires spline curvature");
          }
          return SampledCurvature(params.values);
        }
      },
      file.curvature);

  double s_f = 0.0;
  if (file.s_f) {
    s_f = *file.s_f;
  } else {
    s_f = std::get<QuinticPath>(model).total_length();
  }
  Grid grid(s_f, n);

  BoundSet bounds = constant_bounds(grid, file.v_plus, file.alpha_minus, file.alpha_plus,
                                    file.beta, file.v_start, file.v_end, file.v_minus);
  Tolerances tolerances;
  if (file.eps_feas) tolerances.eps_feas = *file.eps_feas;
  if (file.kappa_eps) tolerances.kappa_eps = *file.kappa_eps;
  if (eps_feas_override) tolerances.eps_feas = *eps_feas_override;

  ProblemSpec spec{std::move(grid), std::move(model), std::move(bounds), tolerances};
  spec.validate();
  return spec;
}

/// Built-in problems. example1 is a 200 m straight/arc/straight run solved to
/// optimality; example2 tightens its final speed until the problem becomes
/// infeasible; example3 is a slow run along a small polynomial path.
inline ProblemFile preset(std::string_view name) {
  ProblemFile file;
  if (name == "example1" || name == "example2") {
    file.s_f = 200.0;
    file.n = 4000;
    file.curvature = PiecewiseHermiteParams{30.0, 40.0, 124.2478, 134.2478, 60.0};
    file.v_plus = 36.1;
    file.v_minus = 0.0;
    file.alpha_plus = 4.0;
    file.alpha_minus = -10.5;
    file.beta = 7.0;
    file.v_start = 0.0;
    file.v_end = (name == "example1") ? 22.0 : 35.0;
  } else if (name == "example3") {
    file.s_f = std::nullopt;  // from the path
    file.n = 4000;
    file.curvature = SplineParams{{{0.0, 0.0}, {2.0, -0.5}, {2.60, 0.0}, {1.75, 2.0}, {3.0, 3.0}}};
    file.v_plus = 1.3;
    file.v_minus = 0.0;
    file.alpha_plus = 0.1;
    file.alpha_minus = -0.1;
    file.beta = 0.05;
    file.v_start = 0.0;
    file.v_end = 0.0;
  } else {
    throw UnknownPresetError("unknown preset '" + std::string(name) +
                             "' (expected example1, example2 or example3)");
  }
  return file;
}

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"example1", "example2", "example3"};
  return names;
}

}  // namespace speedplan
