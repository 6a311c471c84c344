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
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "speedplan/grid.hpp"

namespace speedplan {

/// A real-valued function sampled on a uniform Grid, immutable after
/// construction. Together with the pointwise min/max operations below these
/// form the lattice every planner computation lives in.
class SampledFunction {
 public:
  /// Values must be finite and there must be exactly grid.point_count() of them.
  SampledFunction(const Grid& grid, std::vector<double> values)
      : grid_(grid), values_(std::move(values)) {
    check_size();
    for (double v : values_) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("SampledFunction: values must be finite");
      }
    }
  }

  static SampledFunction constant(const Grid& grid, double value) {
    return SampledFunction(grid, std::vector<double>(grid.point_count(), value));
  }

  /// Samples f(s_i) at every grid point.
  template <class F>
  static SampledFunction sample(const Grid& grid, F&& f) {
    std::vector<double> values(grid.point_count());
    for (int i = 0; i < grid.point_count(); ++i) {
      values[i] = f(grid.point(i));
    }
    return SampledFunction(grid, std::move(values));
  }

  /// Admits +-infinity entries (used for cumulative-time diagnostics, whose
  /// entries are infinite past a full-stop interval). NaN is still rejected.
  static SampledFunction unchecked(const Grid& grid, std::vector<double> values) {
    return SampledFunction(unchecked_tag{}, grid, std::move(values));
  }

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double operator[](int i) const { return values_[i]; }
  int size() const { return static_cast<int>(values_.size()); }

  /// Sup norm, max_i |f(s_i)|.
  double max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  struct unchecked_tag {};
  SampledFunction(unchecked_tag, const Grid& grid, std::vector<double> values)
      : grid_(grid), values_(std::move(values)) {
    check_size();
    for (double v : values_) {
      if (std::isnan(v)) {
        throw std::invalid_argument("SampledFunction: NaN entry");
      }
    }
  }

  void check_size() const {
    if (static_cast<int>(values_.size()) != grid_.point_count()) {
      throw std::invalid_argument("SampledFunction: expected " +
                                  std::to_string(grid_.point_count()) + " values, got " +
                                  std::to_string(values_.size()));
    }
  }

  Grid grid_;
  std::vector<double> values_;
};

inline void require_same_grid(const SampledFunction& f, const SampledFunction& g,
                              const char* operation) {
  if (f.grid() != g.grid()) {
    throw GridMismatchError(std::string(operation) + ": operands sampled on different grids");
  }
}

/// Pointwise minimum.
inline SampledFunction meet(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g, "meet");
  std::vector<double> values(f.size());
  for (int i = 0; i < f.size(); ++i) values[i] = std::min(f[i], g[i]);
  return SampledFunction::unchecked(f.grid(), std::move(values));
}

/// Pointwise maximum.
inline SampledFunction join(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g, "join");
  std::vector<double> values(f.size());
  for (int i = 0; i < f.size(); ++i) values[i] = std::max(f[i], g[i]);
  return SampledFunction::unchecked(f.grid(), std::move(values));
}

/// Default slack for pointwise comparisons, 1e-9 * max(1, ||f||_inf).
inline double leq_tolerance(const SampledFunction& f) {
  return 1e-9 * std::max(1.0, f.max_abs());
}

/// True iff f(s_i) <= g(s_i) + eps at every grid point.
inline bool leq(const SampledFunction& f, const SampledFunction& g, double eps) {
  require_same_grid(f, g, "leq");
  if (eps < 0.0) throw std::invalid_argument("leq: tolerance must be >= 0");
  for (int i = 0; i < f.size(); ++i) {
    if (f[i] > g[i] + eps) return false;
  }
  return true;
}

inline bool leq(const SampledFunction& f, const SampledFunction& g) {
  return leq(f, g, leq_tolerance(f));
}

/// Forward-difference slope (f(s_{i+1}) - f(s_i)) / h; the last entry repeats
/// the one before it so the result lives on the same grid. Diagnostic only.
inline SampledFunction derivative(const SampledFunction& f) {
  const int n = f.grid().intervals();
  const double h = f.grid().step();
  std::vector<double> values(f.size());
  for (int i = 0; i < n; ++i) values[i] = (f[i + 1] - f[i]) / h;
  values[n] = values[n - 1];
  return SampledFunction::unchecked(f.grid(), std::move(values));
}

}  // namespace speedplan
