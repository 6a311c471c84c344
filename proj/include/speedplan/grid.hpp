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
#include <stdexcept>
#include <string>

namespace speedplan {

/// Thrown when two sampled functions that must live on the same grid do not.
class GridMismatchError : public std::invalid_argument {
 public:
  explicit GridMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// Uniform grid of n >= 2 intervals over [0, s_f]. Points are s_i = i * step()
/// for i = 0..n, so there are exactly n + 1 of them.
class Grid {
 public:
  Grid(double arc_length, int intervals) : s_f_(arc_length), n_(intervals) {
    if (!std::isfinite(arc_length) || arc_length <= 0.0) {
      throw std::invalid_argument("Grid: arc length must be finite and positive, got " +
                                  std::to_string(arc_length));
    }
    if (intervals < 2) {
      throw std::invalid_argument("Grid: need at least 2 intervals, got " +
                                  std::to_string(intervals));
    }
  }

  double arc_length() const { return s_f_; }
  int intervals() const { return n_; }
  int point_count() const { return n_ + 1; }
  double step() const { return s_f_ / n_; }
  double point(int i) const { return i * step(); }

  /// Two grids are compatible only when both the interval count and the total
  /// arc length agree exactly.
  friend bool operator==(const Grid& a, const Grid& b) {
    return a.n_ == b.n_ && a.s_f_ == b.s_f_;
  }
  friend bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }

 private:
  double s_f_;
  int n_;
};

}  // namespace speedplan
