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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "speedplan/problem.hpp"
#include "speedplan/solver.hpp"

namespace speedplan {

/// Everything a run produces: the sampled curvature, the squared-speed
/// corridor and the planner output, kept together for serialization.
struct ResultBundle {
  Grid grid;
  SampledFunction curvature;
  Envelope envelope;
  PlanResult result;
};

inline ResultBundle solve_problem(const ProblemSpec& spec) {
  spec.validate();
  SampledFunction k = sample_curvature(spec.curvature, spec.grid);
  Envelope envelope = build_envelope(spec, k);
  PlanResult result = plan(spec, envelope, k);
  return ResultBundle{spec.grid, std::move(k), std::move(envelope), std::move(result)};
}

namespace detail {

inline std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

}  // namespace detail

/// One row per grid point, 12 significant digits, fixed column order.
inline void write_profile_csv(const ResultBundle& bundle, std::ostream& out) {
  out << "s,k,mu_minus,mu_plus,F,B,w_star,v_star,t,a_long,a_norm\n";
  const PlanResult& r = bundle.result;
  for (int i = 0; i < bundle.grid.point_count(); ++i) {
    out << detail::format_number(bundle.grid.point(i)) << ','
        << detail::format_number(bundle.curvature[i]) << ','
        << detail::format_number(bundle.envelope.mu_minus[i]) << ','
        << detail::format_number(bundle.envelope.mu_plus[i]) << ','
        << detail::format_number(r.forward_profile[i]) << ','
        << detail::format_number(r.backward_profile[i]) << ','
        << detail::format_number(r.w_star[i]) << ',' << detail::format_number(r.v_star[i]) << ','
        << detail::format_number(r.cumulative_time[i]) << ','
        << detail::format_number(r.a_long[i]) << ',' << detail::format_number(r.a_norm[i])
        << '\n';
  }
}

inline std::string format_profile_csv(const ResultBundle& bundle) {
  std::ostringstream out;
  write_profile_csv(bundle, out);
  return out.str();
}

/// Machine-readable verdict. A non-finite total time is written as the
/// literal token "inf".
inline void write_verdict_json(const ResultBundle& bundle, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["feasible"] = bundle.result.feasible;
  if (std::isfinite(bundle.result.total_time)) {
    doc["total_time"] = bundle.result.total_time;
  } else {
    doc["total_time"] = "inf";
  }
  auto& violations = doc["violations"] = nlohmann::ordered_json::array();
  for (const Violation& v : bundle.result.violations) {
    violations.push_back({{"index", v.index},
                          {"s", bundle.grid.point(v.index)},
                          {"bound", v.bound},
                          {"magnitude", v.magnitude}});
  }
  out << doc.dump(2) << '\n';
}

inline std::string format_verdict_json(const ResultBundle& bundle) {
  std::ostringstream out;
  write_verdict_json(bundle, out);
  return out.str();
}

/// Writes per-figure tables: operators.csv with (s, mu_plus, F, B) and
/// optimal.csv with (s, mu_plus, w_star). Creates the directory on demand.
inline void emit_plot_data(const ResultBundle& bundle, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);

  std::ofstream operators(out_dir / "operators.csv");
  if (!operators) {
    throw std::runtime_error("emit_plot_data: cannot write to '" + out_dir.string() + "'");
  }
  operators << "s,mu_plus,F,B\n";
  for (int i = 0; i < bundle.grid.point_count(); ++i) {
    operators << detail::format_number(bundle.grid.point(i)) << ','
              << detail::format_number(bundle.envelope.mu_plus[i]) << ','
              << detail::format_number(bundle.result.forward_profile[i]) << ','
              << detail::format_number(bundle.result.backward_profile[i]) << '\n';
  }

  std::ofstream optimal(out_dir / "optimal.csv");
  if (!optimal) {
    throw std::runtime_error("emit_plot_data: cannot write to '" + out_dir.string() + "'");
  }
  optimal << "s,mu_plus,w_star\n";
  for (int i = 0; i < bundle.grid.point_count(); ++i) {
    optimal << detail::format_number(bundle.grid.point(i)) << ','
            << detail::format_number(bundle.envelope.mu_plus[i]) << ','
            << detail::format_number(bundle.result.w_star[i]) << '\n';
  }
}

}  // namespace speedplan
