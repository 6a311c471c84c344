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
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "speedplan/curvature.hpp"
#include "speedplan/grid.hpp"
#include "speedplan/sampled_function.hpp"
#include "speedplan/spline_path.hpp"

namespace speedplan {

/// Thrown when the stated bounds contradict each other (e.g. v_minus above
/// v_plus). Distinct from infeasibility, which is a planner verdict.
class InconsistentBoundsError : public std::runtime_error {
 public:
  explicit InconsistentBoundsError(const std::string& what) : std::runtime_error(what) {}
};

/// Pointwise bounds of the planning problem. v_minus/v_plus bound speed in
/// m/s, alpha_minus/alpha_plus bound the slope of the squared speed in m/s^2
/// (alpha_minus <= 0 <= alpha_plus), beta >= 0 caps normal acceleration.
/// Optional boundary speeds pin the profile at s = 0 and s = s_f.
struct BoundSet {
  SampledFunction v_minus;
  SampledFunction v_plus;
  SampledFunction alpha_minus;
  SampledFunction alpha_plus;
  SampledFunction beta;
  std::optional<double> v_start;
  std::optional<double> v_end;
};

inline BoundSet constant_bounds(const Grid& grid, double v_plus, double alpha_minus,
                                double alpha_plus, double beta,
                                std::optional<double> v_start = std::nullopt,
                                std::optional<double> v_end = std::nullopt,
                                double v_minus = 0.0) {
  return BoundSet{SampledFunction::constant(grid, v_minus),
                  SampledFunction::constant(grid, v_plus),
                  SampledFunction::constant(grid, alpha_minus),
                  SampledFunction::constant(grid, alpha_plus),
                  SampledFunction::constant(grid, beta),
                  v_start,
                  v_end};
}

using CurvatureModel = std::variant<PiecewiseHermiteCurvature, QuinticPath, SampledCurvature>;

inline SampledFunction sample_curvature(const CurvatureModel& model, const Grid& grid) {
  return std::visit(
      [&grid](const auto& m) -> SampledFunction {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, QuinticPath>) {
          return m.sample_curvature(grid);
        } else {
          return m.sample(grid);
        }
      },
      model);
}

struct Tolerances {
  /// Relative feasibility slack: the verdict test uses
  /// eps_feas * max(1, ||mu_plus||_inf).
  double eps_feas = 1e-6;
  /// Curvature magnitudes below this (1/m) leave mu_plus speed-limited only.
  double kappa_eps = 1e-9;
};

struct ProblemSpec {
  Grid grid;
  CurvatureModel curvature;
  BoundSet bounds;
  Tolerances tolerances;

  void validate() const;
};

/// The squared-speed corridor [mu_minus, mu_plus] derived from a ProblemSpec.
struct Envelope {
  SampledFunction mu_minus;
  SampledFunction mu_plus;
};

namespace detail {

inline void require_bound_grid(const SampledFunction& f, const Grid& grid, const char* name) {
  if (f.grid() != grid) {
    throw GridMismatchError(std::string("ProblemSpec: ") + name +
                            " is sampled on a different grid");
  }
}

}  // namespace detail

inline void ProblemSpec::validate() const {
  detail::require_bound_grid(bounds.v_minus, grid, "v_minus");
  detail::require_bound_grid(bounds.v_plus, grid, "v_plus");
  detail::require_bound_grid(bounds.alpha_minus, grid, "alpha_minus");
  detail::require_bound_grid(bounds.alpha_plus, grid, "alpha_plus");
  detail::require_bound_grid(bounds.beta, grid, "beta");

  for (int i = 0; i < grid.point_count(); ++i) {
    if (bounds.v_minus[i] < 0.0) {
      throw InconsistentBoundsError("v_minus must be nonnegative (index " + std::to_string(i) +
                                    ")");
    }
    if (bounds.v_minus[i] > bounds.v_plus[i]) {
      throw InconsistentBoundsError("v_minus exceeds v_plus at index " + std::to_string(i));
    }
    if (bounds.alpha_minus[i] > 0.0 || bounds.alpha_plus[i] < 0.0) {
      throw InconsistentBoundsError(
          "slope bounds must satisfy alpha_minus <= 0 <= alpha_plus (index " + std::to_string(i) +
          ")");
    }
    if (bounds.beta[i] < 0.0) {
      throw InconsistentBoundsError("beta must be nonnegative (index " + std::to_string(i) + ")");
    }
  }
  for (const auto& v : {bounds.v_start, bounds.v_end}) {
    if (v && (!std::isfinite(*v) || *v < 0.0)) {
      throw InconsistentBoundsError("boundary speeds must be finite and nonnegative");
    }
  }

  // The curvature model must describe a path of the grid's length.
  if (const auto* hermite = std::get_if<PiecewiseHermiteCurvature>(&curvature)) {
    if (hermite->total_length() != grid.arc_length()) {
      throw std::invalid_argument("ProblemSpec: curvature model length differs from grid length");
    }
  } else if (const auto* path = std::get_if<QuinticPath>(&curvature)) {
    const double rel = std::abs(path->total_length() - grid.arc_length()) /
                       std::max(1e-300, path->total_length());
    if (rel > 1e-6) {
      throw std::invalid_argument(
          "ProblemSpec: grid length differs from the path's arc length by more than 1e-6 "
          "relative");
    }
  } else if (const auto* sampled = std::get_if<SampledCurvature>(&curvature)) {
    if (static_cast<int>(sampled->values().size()) != grid.point_count()) {
      throw std::invalid_argument("ProblemSpec: sampled curvature size does not match the grid");
    }
  }
}

/// Builds the squared-speed corridor: mu_plus = min((v_plus)^2, beta / |k|)
/// with the curvature term dropped where |k| < kappa_eps, and
/// mu_minus = (v_minus)^2. Boundary speeds, when present, pin both sides at
/// the first and last grid point.
inline Envelope build_envelope(const ProblemSpec& spec, const SampledFunction& k) {
  spec.validate();
  detail::require_bound_grid(k, spec.grid, "curvature");

  const int count = spec.grid.point_count();
  std::vector<double> mu_plus(count), mu_minus(count);
  for (int i = 0; i < count; ++i) {
    double cap = spec.bounds.v_plus[i] * spec.bounds.v_plus[i];
    const double abs_k = std::abs(k[i]);
    if (abs_k >= spec.tolerances.kappa_eps) {
      cap = std::min(cap, spec.bounds.beta[i] / abs_k);
    }
    mu_plus[i] = cap;
    mu_minus[i] = spec.bounds.v_minus[i] * spec.bounds.v_minus[i];
  }
  if (spec.bounds.v_start) {
    const double w0 = *spec.bounds.v_start * *spec.bounds.v_start;
    mu_plus.front() = w0;
    mu_minus.front() = w0;
  }
  if (spec.bounds.v_end) {
    const double wf = *spec.bounds.v_end * *spec.bounds.v_end;
    mu_plus.back() = wf;
    mu_minus.back() = wf;
  }
  return Envelope{SampledFunction(spec.grid, std::move(mu_minus)),
                  SampledFunction(spec.grid, std::move(mu_plus))};
}

inline Envelope build_envelope(const ProblemSpec& spec) {
  return build_envelope(spec, sample_curvature(spec.curvature, spec.grid));
}

}  // namespace speedplan
