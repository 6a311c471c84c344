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
#include <utility>
#include <vector>

#include "speedplan/grid.hpp"
#include "speedplan/sampled_function.hpp"

namespace speedplan {

/// Smooth blend between curvature values k_a at l_a and k_b at l_b: the
/// unique minimal-degree polynomial (a quintic in the normalized coordinate)
/// taking the endpoint values with zero first and second derivative at both
/// ends. Defined for any s; callers sample it on [l_a, l_b].
inline double hermite_transition(double l_a, double l_b, double k_a, double k_b, double s) {
  if (!(l_a < l_b)) {
    throw std::invalid_argument("hermite_transition: requires l_a < l_b");
  }
  const double t = (s - l_a) / (l_b - l_a);
  const double blend = t * t * t * (t * (6.0 * t - 15.0) + 10.0);
  return k_a + (k_b - k_a) * blend;
}

/// Curvature of a straight / arc / straight path of given total length:
/// zero on [0, l1), a smooth rise to 1/R on [l1, l2], constant 1/R on
/// (l2, l3), a smooth fall back to zero on [l3, l4], zero after l4.
class PiecewiseHermiteCurvature {
 public:
  PiecewiseHermiteCurvature(double l1, double l2, double l3, double l4, double radius,
                            double total_length)
      : l1_(l1), l2_(l2), l3_(l3), l4_(l4), radius_(radius), total_length_(total_length) {
    if (!(0.0 < l1 && l1 < l2 && l2 < l3 && l3 < l4 && l4 < total_length)) {
      throw std::invalid_argument(
          "PiecewiseHermiteCurvature: breakpoints must satisfy 0 < l1 < l2 < l3 < l4 < s_f");
    }
    if (!(radius > 0.0) || !std::isfinite(radius)) {
      throw std::invalid_argument("PiecewiseHermiteCurvature: radius must be positive");
    }
  }

  double operator()(double s) const {
    if (s < l1_ || s > l4_) return 0.0;
    const double k_arc = 1.0 / radius_;
    if (s <= l2_) return hermite_transition(l1_, l2_, 0.0, k_arc, s);
    if (s < l3_) return k_arc;
    return hermite_transition(l3_, l4_, k_arc, 0.0, s);
  }

  SampledFunction sample(const Grid& grid) const {
    return SampledFunction::sample(grid, *this);
  }

  double l1() const { return l1_; }
  double l2() const { return l2_; }
  double l3() const { return l3_; }
  double l4() const { return l4_; }
  double radius() const { return radius_; }
  double total_length() const { return total_length_; }

 private:
  double l1_, l2_, l3_, l4_;
  double radius_;
  double total_length_;
};

/// Curvature handed over directly as one value per grid point.
class SampledCurvature {
 public:
  explicit SampledCurvature(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("SampledCurvature: values must be finite");
      }
    }
  }

  const std::vector<double>& values() const { return values_; }

  SampledFunction sample(const Grid& grid) const {
    if (static_cast<int>(values_.size()) != grid.point_count()) {
      throw std::invalid_argument("SampledCurvature: have " + std::to_string(values_.size()) +
                                  " values but the grid has " +
                                  std::to_string(grid.point_count()) + " points");
    }
    return SampledFunction(grid, values_);
  }

 private:
  std::vector<double> values_;
};

}  // namespace speedplan
