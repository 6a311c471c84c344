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

#include <optional>
#include <string>

#include <CLI11.hpp>

#include "speedplan/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Minimum-time speed profiles along a fixed path"};
  app.require_subcommand(1);

  CLI::App* plan_cmd = app.add_subcommand(
      "plan", "Solve a problem file (or preset) and write profile.csv + verdict.json");

  std::string file;
  std::string preset_name;
  std::string out_dir = ".";
  int n = 0;
  double eps_feas = 0.0;
  bool emit_plots = false;

  plan_cmd->add_option("file", file, "problem file (JSON; see README for the format)");
  CLI::Option* preset_opt =
      plan_cmd->add_option("--preset", preset_name, "built-in problem: example1, example2 or example3");
  plan_cmd->add_option("--out", out_dir, "output directory (created on demand)")
      ->capture_default_str();
  CLI::Option* n_opt =
      plan_cmd->add_option("--n", n, "override the grid interval count")->check(CLI::PositiveNumber);
  CLI::Option* eps_opt = plan_cmd->add_option("--eps-feas", eps_feas,
                                              "relative feasibility tolerance override")
                             ->check(CLI::NonNegativeNumber);
  plan_cmd->add_flag("--emit-plots", emit_plots,
                     "also write operators.csv and optimal.csv plot tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // input errors map to exit 1; --help stays 0
  }

  speedplan::RunOptions options;
  if (!file.empty()) options.problem_path = file;
  if (preset_opt->count() > 0) options.preset_name = preset_name;
  options.out_dir = out_dir;
  if (n_opt->count() > 0) options.n_override = n;
  if (eps_opt->count() > 0) options.eps_feas_override = eps_feas;
  options.emit_plots = emit_plots;

  return speedplan::run(options);
}
