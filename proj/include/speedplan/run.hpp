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
#include <iostream>
#include <optional>
#include <string>

#include "speedplan/problem_file.hpp"
#include "speedplan/result_io.hpp"

namespace speedplan {

struct RunOptions {
  std::optional<std::filesystem::path> problem_path;
  std::optional<std::string> preset_name;
  std::filesystem::path out_dir = ".";
  std::optional<int> n_override;
  std::optional<double> eps_feas_override;
  bool emit_plots = false;
};

/// Loads a problem (file or preset), plans it and writes profile.csv plus
/// verdict.json into out_dir. Returns the process exit status: 0 when the
/// problem is feasible, 2 when it is infeasible, 1 on any input or
/// validation error.
inline int run(const RunOptions& options, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  try {
    if (options.problem_path.has_value() == options.preset_name.has_value()) {
      err << "error: give exactly one of a problem file or --preset\n";
      return 1;
    }
    const ProblemFile file = options.preset_name ? preset(*options.preset_name)
                                                 : load_problem_file(*options.problem_path);
    const ProblemSpec spec = build_problem(file, options.n_override, options.eps_feas_override);
    const ResultBundle bundle = solve_problem(spec);

    std::filesystem::create_directories(options.out_dir);
    {
      std::ofstream profile(options.out_dir / "profile.csv");
      if (!profile) throw std::runtime_error("cannot write to '" + options.out_dir.string() + "'");
      write_profile_csv(bundle, profile);
    }
    {
      std::ofstream verdict(options.out_dir / "verdict.json");
      if (!verdict) throw std::runtime_error("cannot write to '" + options.out_dir.string() + "'");
      write_verdict_json(bundle, verdict);
    }
    if (options.emit_plots) emit_plot_data(bundle, options.out_dir);

    const std::string label =
        options.preset_name ? *options.preset_name : options.problem_path->string();
    if (bundle.result.feasible) {
      out << label << ": feasible, total time ";
      if (std::isfinite(bundle.result.total_time)) {
        out << bundle.result.total_time << " s";
      } else {
        out << "inf";
      }
      out << " (n=" << bundle.grid.intervals() << ") -> " << options.out_dir.string() << "\n";
      return 0;
    }
    out << label << ": infeasible, " << bundle.result.violations.size()
        << " bound violation(s), first at s=" << bundle.grid.point(bundle.result.violations[0].index)
        << " (n=" << bundle.grid.intervals() << ") -> " << options.out_dir.string() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace speedplan
