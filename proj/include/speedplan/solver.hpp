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
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "speedplan/problem.hpp"
#include "speedplan/sampled_function.hpp"

namespace speedplan {

namespace detail {

inline void require_sign(const SampledFunction& f, bool nonnegative, const char* name) {
  for (int i = 0; i < f.size(); ++i) {
    if (nonnegative ? f[i] < 0.0 : f[i] > 0.0) {
      throw std::invalid_argument(std::string(name) + " has the wrong sign at index " +
                                  std::to_string(i));
    }
  }
}

}  // namespace detail

/// Forward pass: phi(0) = mu(0), then a clipped Euler march
///   phi_{i+1} = min(mu_{i+1}, phi_i + integral of alpha_plus over the cell)
/// with the cell integral taken by the trapezoid rule. Below mu the profile
/// rises at the full slope allowance; the min keeps it on mu whenever mu
/// rises slower than the allowance. The result never exceeds mu.
inline SampledFunction forward(const SampledFunction& mu, const SampledFunction& alpha_plus) {
  require_same_grid(mu, alpha_plus, "forward");
  detail::require_sign(alpha_plus, /*nonnegative=*/true, "forward: alpha_plus");
  const int n = mu.grid().intervals();
  const double h = mu.grid().step();
  std::vector<double> phi(n + 1);
  phi[0] = mu[0];
  for (int i = 0; i < n; ++i) {
    const double step = 0.5 * h * (alpha_plus[i] + alpha_plus[i + 1]);
    phi[i + 1] = std::min(mu[i + 1], phi[i] + step);
  }
  return SampledFunction(mu.grid(), std::move(phi));
}

/// Backward pass, the mirror image of forward under s -> s_f - s:
/// phi(s_f) = mu(s_f) and, marching toward s = 0,
///   phi_i = min(mu_i, phi_{i+1} - integral of alpha_minus over the cell).
inline SampledFunction backward(const SampledFunction& mu, const SampledFunction& alpha_minus) {
  require_same_grid(mu, alpha_minus, "backward");
  detail::require_sign(alpha_minus, /*nonnegative=*/false, "backward: alpha_minus");
  const int n = mu.grid().intervals();
  const double h = mu.grid().step();
  std::vector<double> phi(n + 1);
  phi[n] = mu[n];
  for (int i = n - 1; i >= 0; --i) {
    const double step = 0.5 * h * (alpha_minus[i] + alpha_minus[i + 1]);
    phi[i] = std::min(mu[i], phi[i + 1] - step);
  }
  return SampledFunction(mu.grid(), std::move(phi));
}

/// Pointwise minimum of the forward and backward passes. This is the
/// projection onto the set of slope-admissible profiles below mu; applied to
/// mu_plus it yields the fastest admissible squared-speed profile.
inline SampledFunction meet_operator(const SampledFunction& mu, const SampledFunction& alpha_minus,
                                     const SampledFunction& alpha_plus) {
  return meet(forward(mu, alpha_plus), backward(mu, alpha_minus));
}

struct ManeuverTime {
  double total = 0.0;            // seconds; +inf when the profile rests on a full cell
  SampledFunction cumulative;    // t(s_i); entries past a resting cell are +inf
};

/// Travel time of a squared-speed profile, sum over cells of the exact
/// integral of w^{-1/2} with w taken linear on each cell:
///   dt_i = 2h / (sqrt(w_i) + sqrt(w_{i+1})),
/// the rationalized form of 2(sqrt(w_{i+1}) - sqrt(w_i)) / slope. Cells with
/// both endpoints below rest_eps contribute +inf. Entries below -tol are an
/// error; small negative roundoff is clamped to zero.
inline ManeuverTime maneuver_time(const SampledFunction& w, double rest_eps = 1e-12) {
  const double tol = 1e-9 * std::max(1.0, w.max_abs());
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] < -tol) {
      throw std::invalid_argument("maneuver_time: negative squared speed at index " +
                                  std::to_string(i));
    }
  }
  const int n = w.grid().intervals();
  const double h = w.grid().step();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> t(n + 1);
  t[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    const double wa = std::max(w[i], 0.0);
    const double wb = std::max(w[i + 1], 0.0);
    const double dt =
        (wa < rest_eps && wb < rest_eps) ? inf : 2.0 * h / (std::sqrt(wa) + std::sqrt(wb));
    t[i + 1] = t[i] + dt;
  }
  return ManeuverTime{t[n], SampledFunction::unchecked(w.grid(), std::move(t))};
}

struct Violation {
  int index = 0;          // grid index where the breach was detected
  std::string bound;      // "mu_minus", "mu_plus", "alpha_minus", "alpha_plus" or "beta"
  double magnitude = 0.0; // size of the breach, in the bound's own units
};

struct PlanResult {
  bool feasible = false;
  SampledFunction w_star;           // optimal squared speed, m^2/s^2
  SampledFunction v_star;           // sqrt(w_star), m/s
  double total_time = 0.0;          // seconds; +inf when w_star rests on a full cell
  SampledFunction cumulative_time;  // t(s_i)
  SampledFunction forward_profile;  // forward pass of mu_plus
  SampledFunction backward_profile; // backward pass of mu_plus
  SampledFunction a_long;           // slope of w_star (= 2 v' v), m/s^2
  SampledFunction a_norm;           // |k| * w_star, m/s^2
  std::vector<Violation> violations;
};

/// Plans the minimum-time profile. The profile w* is the meet of the forward
/// and backward passes of mu_plus; the problem is feasible exactly when w*
/// dominates mu_minus (within eps_feas * max(1, ||mu_plus||_inf)). Infeasible
/// results still carry w* plus a violation entry for every grid point where
/// it falls short of mu_minus. Bound inconsistencies throw instead.
inline PlanResult plan(const ProblemSpec& spec, const Envelope& envelope,
                       const SampledFunction& k) {
  SampledFunction fwd = forward(envelope.mu_plus, spec.bounds.alpha_plus);
  SampledFunction bwd = backward(envelope.mu_plus, spec.bounds.alpha_minus);
  SampledFunction w = meet(fwd, bwd);

  const int n = spec.grid.intervals();
  const double h = spec.grid.step();
  const double eps_feas = spec.tolerances.eps_feas * std::max(1.0, envelope.mu_plus.max_abs());

  std::vector<Violation> violations;
  for (int i = 0; i <= n; ++i) {
    if (w[i] < envelope.mu_minus[i] - eps_feas) {
      violations.push_back({i, "mu_minus", envelope.mu_minus[i] - w[i]});
    }
  }
  const bool feasible = violations.empty();

  // Diagnostics: these should hold by construction, but any tolerance breach
  // is reported alongside the feasibility gaps.
  for (int i = 0; i <= n; ++i) {
    if (w[i] > envelope.mu_plus[i] + eps_feas) {
      violations.push_back({i, "mu_plus", w[i] - envelope.mu_plus[i]});
    }
  }
  const double eps_slope =
      1e-7 * std::max({1.0, spec.bounds.alpha_plus.max_abs(), spec.bounds.alpha_minus.max_abs()});
  for (int i = 0; i < n; ++i) {
    const double slope = (w[i + 1] - w[i]) / h;
    const double lo = 0.5 * (spec.bounds.alpha_minus[i] + spec.bounds.alpha_minus[i + 1]);
    const double hi = 0.5 * (spec.bounds.alpha_plus[i] + spec.bounds.alpha_plus[i + 1]);
    if (slope > hi + eps_slope) violations.push_back({i, "alpha_plus", slope - hi});
    if (slope < lo - eps_slope) violations.push_back({i, "alpha_minus", lo - slope});
  }

  std::vector<double> v(n + 1), an(n + 1);
  for (int i = 0; i <= n; ++i) {
    v[i] = std::sqrt(std::max(w[i], 0.0));
    an[i] = std::abs(k[i]) * w[i];
    if (an[i] > spec.bounds.beta[i] + eps_feas) {
      violations.push_back({i, "beta", an[i] - spec.bounds.beta[i]});
    }
  }

  ManeuverTime time = maneuver_time(w);
  SampledFunction a_long = derivative(w);

  return PlanResult{feasible,
                    std::move(w),
                    SampledFunction(spec.grid, std::move(v)),
                    time.total,
                    std::move(time.cumulative),
                    std::move(fwd),
                    std::move(bwd),
                    std::move(a_long),
                    SampledFunction(spec.grid, std::move(an)),
                    std::move(violations)};
}

inline PlanResult plan(const ProblemSpec& spec) {
  spec.validate();
  SampledFunction k = sample_curvature(spec.curvature, spec.grid);
  Envelope envelope = build_envelope(spec, k);
  return plan(spec, envelope, k);
}

}  // namespace speedplan
