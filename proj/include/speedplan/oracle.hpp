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

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "speedplan/grid.hpp"
#include "speedplan/sampled_function.hpp"

// Brute-force counterpart of the fast solver. Everything here is O(n^2) by
// design: profiles are computed as explicit minimizations over all grid
// pairs, which is the definition the fast marching recursions must agree
// with. Deliberately naive; used to validate the solver, not to replace it.

namespace speedplan::oracle {

/// Cumulative trapezoid integrals of the slope bounds. They make the
/// admissible-rise distance between any two grid points an O(1) lookup:
///   A(i, j) = integral of alpha_plus from s_i to s_j    (j >= i)
///   A(i, j) = integral of alpha_minus from s_i to s_j   (j < i, >= 0 as well)
class HemiMetricTable {
 public:
  HemiMetricTable(const SampledFunction& alpha_plus, const SampledFunction& alpha_minus)
      : grid_(alpha_plus.grid()) {
    require_same_grid(alpha_plus, alpha_minus, "HemiMetricTable");
    const int n = grid_.intervals();
    const double h = grid_.step();
    cum_plus_.resize(n + 1);
    cum_minus_.resize(n + 1);
    cum_plus_[0] = cum_minus_[0] = 0.0;
    for (int i = 0; i < n; ++i) {
      if (alpha_plus[i] < 0.0 || alpha_plus[i + 1] < 0.0) {
        throw std::invalid_argument("HemiMetricTable: alpha_plus must be nonnegative");
      }
      if (alpha_minus[i] > 0.0 || alpha_minus[i + 1] > 0.0) {
        throw std::invalid_argument("HemiMetricTable: alpha_minus must be nonpositive");
      }
      cum_plus_[i + 1] = cum_plus_[i] + 0.5 * h * (alpha_plus[i] + alpha_plus[i + 1]);
      cum_minus_[i + 1] = cum_minus_[i] + 0.5 * h * (alpha_minus[i] + alpha_minus[i + 1]);
    }
  }

  /// Unvalidated construction from raw cumulative arrays; for tests that need
  /// a deliberately broken table.
  static HemiMetricTable from_cumulative(const Grid& grid, std::vector<double> cum_plus,
                                         std::vector<double> cum_minus) {
    if (static_cast<int>(cum_plus.size()) != grid.point_count() ||
        static_cast<int>(cum_minus.size()) != grid.point_count()) {
      throw std::invalid_argument("HemiMetricTable: cumulative arrays must have n+1 entries");
    }
    return HemiMetricTable(grid, std::move(cum_plus), std::move(cum_minus));
  }

  const Grid& grid() const { return grid_; }
  const std::vector<double>& cum_plus() const { return cum_plus_; }
  const std::vector<double>& cum_minus() const { return cum_minus_; }

  /// The admissible rise A(from, to) between grid points.
  double operator()(int from, int to) const {
    return to >= from ? cum_plus_[to] - cum_plus_[from] : cum_minus_[to] - cum_minus_[from];
  }

 private:
  HemiMetricTable(const Grid& grid, std::vector<double> cum_plus, std::vector<double> cum_minus)
      : grid_(grid), cum_plus_(std::move(cum_plus)), cum_minus_(std::move(cum_minus)) {}

  Grid grid_;
  std::vector<double> cum_plus_;
  std::vector<double> cum_minus_;
};

/// min over j <= i of mu(j) + A(j, i).
inline SampledFunction brute_forward(const SampledFunction& mu, const HemiMetricTable& table) {
  if (mu.grid() != table.grid()) {
    throw GridMismatchError("brute_forward: table built on a different grid");
  }
  const int count = mu.size();
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    double best = mu[i];
    for (int j = 0; j < i; ++j) best = std::min(best, mu[j] + table(j, i));
    out[i] = best;
  }
  return SampledFunction(mu.grid(), std::move(out));
}

/// min over j >= i of mu(j) + A(j, i).
inline SampledFunction brute_backward(const SampledFunction& mu, const HemiMetricTable& table) {
  if (mu.grid() != table.grid()) {
    throw GridMismatchError("brute_backward: table built on a different grid");
  }
  const int count = mu.size();
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    double best = mu[i];
    for (int j = i + 1; j < count; ++j) best = std::min(best, mu[j] + table(j, i));
    out[i] = best;
  }
  return SampledFunction(mu.grid(), std::move(out));
}

/// min over all j of mu(j) + A(j, i); equals brute_forward ^ brute_backward
/// exactly, because the two index ranges cover every j.
inline SampledFunction brute_meet(const SampledFunction& mu, const HemiMetricTable& table) {
  if (mu.grid() != table.grid()) {
    throw GridMismatchError("brute_meet: table built on a different grid");
  }
  const int count = mu.size();
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    double best = mu[i];
    for (int j = 0; j < count; ++j) best = std::min(best, mu[j] + table(j, i));
    out[i] = best;
  }
  return SampledFunction(mu.grid(), std::move(out));
}

struct HemiMetricViolation {
  int x = 0, y = 0, z = 0;   // offending indices; pair/point checks use x, y
  const char* axiom = "";    // "nonnegative", "zero_diagonal", "triangle", "monotone_equality"
  double magnitude = 0.0;
};

struct HemiMetricReport {
  long pairs_checked = 0;
  long triples_checked = 0;
  std::vector<HemiMetricViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the distance axioms on the table: A >= 0, A(i, i) = 0, and the
/// triangle inequality A(x, z) <= A(x, y) + A(y, z), with equality on
/// monotone triples (x <= y <= z or x >= y >= z), all within tol. Exhausts
/// every triple up to n = 50 and samples max_sampled_triples beyond that.
inline HemiMetricReport check_hemimetric(const HemiMetricTable& table,
                                         long max_sampled_triples = 10000, unsigned seed = 0,
                                         double tol = 1e-9) {
  const int count = table.grid().point_count();
  HemiMetricReport report;

  for (int i = 0; i < count; ++i) {
    const double diag = table(i, i);
    if (std::abs(diag) > 0.0) {
      report.violations.push_back({i, i, 0, "zero_diagonal", std::abs(diag)});
    }
    for (int j = 0; j < count; ++j) {
      ++report.pairs_checked;
      const double a = table(i, j);
      if (a < 0.0) report.violations.push_back({i, j, 0, "nonnegative", -a});
    }
  }

  auto check_triple = [&](int x, int y, int z) {
    ++report.triples_checked;
    const double lhs = table(x, z);
    const double rhs = table(x, y) + table(y, z);
    if (lhs > rhs + tol) {
      report.violations.push_back({x, y, z, "triangle", lhs - rhs});
    }
    const bool monotone = (x <= y && y <= z) || (x >= y && y >= z);
    if (monotone && std::abs(lhs - rhs) > tol) {
      report.violations.push_back({x, y, z, "monotone_equality", std::abs(lhs - rhs)});
    }
  };

  if (count <= 51) {
    for (int x = 0; x < count; ++x)
      for (int y = 0; y < count; ++y)
        for (int z = 0; z < count; ++z) check_triple(x, y, z);
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, count - 1);
    for (long t = 0; t < max_sampled_triples; ++t) {
      check_triple(pick(rng), pick(rng), pick(rng));
    }
  }
  return report;
}

}  // namespace speedplan::oracle
