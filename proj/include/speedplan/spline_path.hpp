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
#include <vector>

#include <Eigen/Dense>

#include "speedplan/grid.hpp"
#include "speedplan/sampled_function.hpp"

namespace speedplan {

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Thrown when a path's parameterization is (numerically) singular,
/// i.e. ||gamma'|| < 1e-12 somewhere the path is evaluated.
class DegeneratePathError : public std::runtime_error {
 public:
  explicit DegeneratePathError(const std::string& what) : std::runtime_error(what) {}
};

/// Planar polynomial curve of degree min(#waypoints - 1, 5) fitted through
/// the waypoints at chord-length parameters on [0, 1]. Up to six waypoints
/// are interpolated exactly; more are fitted in the least-squares sense.
/// Provides arc length, arc-length reparameterization and curvature.
class QuinticPath {
 public:
  explicit QuinticPath(std::span<const PlanarPoint> waypoints) {
    const int m = static_cast<int>(waypoints.size());
    if (m < 3) {
      throw std::invalid_argument("QuinticPath: need at least 3 waypoints");
    }

    // Chord-length parameters, normalized to [0, 1].
    std::vector<double> u(m, 0.0);
    for (int i = 1; i < m; ++i) {
      const double dx = waypoints[i].x - waypoints[i - 1].x;
      const double dy = waypoints[i].y - waypoints[i - 1].y;
      const double chord = std::hypot(dx, dy);
      if (!(chord > 0.0)) {
        throw std::invalid_argument("QuinticPath: consecutive waypoints coincide");
      }
      u[i] = u[i - 1] + chord;
    }
    for (int i = 1; i < m; ++i) u[i] /= u[m - 1];

    degree_ = std::min(m - 1, 5);
    Eigen::MatrixXd vand(m, degree_ + 1);
    Eigen::VectorXd bx(m), by(m);
    for (int i = 0; i < m; ++i) {
      double p = 1.0;
      for (int j = 0; j <= degree_; ++j) {
        vand(i, j) = p;
        p *= u[i];
      }
      bx(i) = waypoints[i].x;
      by(i) = waypoints[i].y;
    }
    const auto qr = vand.colPivHouseholderQr();
    const Eigen::VectorXd cx = qr.solve(bx);
    const Eigen::VectorXd cy = qr.solve(by);
    cx_.assign(cx.data(), cx.data() + cx.size());
    cy_.assign(cy.data(), cy.data() + cy.size());

    build_length_table();
  }

  explicit QuinticPath(const std::vector<PlanarPoint>& waypoints)
      : QuinticPath(std::span<const PlanarPoint>(waypoints)) {}

  int degree() const { return degree_; }

  PlanarPoint position(double u) const { return {eval(cx_, u, 0), eval(cy_, u, 0)}; }
  PlanarPoint velocity(double u) const { return {eval(cx_, u, 1), eval(cy_, u, 1)}; }
  PlanarPoint acceleration(double u) const { return {eval(cx_, u, 2), eval(cy_, u, 2)}; }

  double speed(double u) const {
    const PlanarPoint d = velocity(u);
    return std::hypot(d.x, d.y);
  }

  double total_length() const { return cum_length_.back(); }

  /// Inverse of the cumulative arc length: the parameter u with L(u) = s.
  /// L is strictly increasing because the speed is positive everywhere.
  double parameter_at_arc_length(double s) const {
    const double total = total_length();
    if (s <= 0.0) return 0.0;
    if (s >= total) return 1.0;
    // Locate the quadrature panel, then refine with safeguarded Newton.
    const auto it = std::upper_bound(cum_length_.begin(), cum_length_.end(), s);
    int panel = static_cast<int>(it - cum_length_.begin()) - 1;
    panel = std::clamp(panel, 0, panel_count - 1);
    double lo = panel * panel_width();
    double hi = lo + panel_width();
    double u = lo + (hi - lo) * (s - cum_length_[panel]) /
                        std::max(cum_length_[panel + 1] - cum_length_[panel], 1e-300);
    for (int iter = 0; iter < 50; ++iter) {
      const double g = cum_length_[panel] + gauss_length(panel * panel_width(), u) - s;
      if (g > 0.0) {
        hi = u;
      } else {
        lo = u;
      }
      const double sp = speed(u);
      double next = u - g / std::max(sp, 1e-300);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
      if (std::abs(next - u) < 1e-15) {
        u = next;
        break;
      }
      u = next;
    }
    return u;
  }

  /// Signed curvature k = (x'y'' - y'x'') / (x'^2 + y'^2)^{3/2}.
  double curvature_at_parameter(double u) const {
    const PlanarPoint d1 = velocity(u);
    const PlanarPoint d2 = acceleration(u);
    const double speed2 = d1.x * d1.x + d1.y * d1.y;
    if (std::sqrt(speed2) < singular_speed) {
      throw DegeneratePathError("QuinticPath: singular parameterization (||gamma'|| < 1e-12)");
    }
    return (d1.x * d2.y - d1.y * d2.x) / (speed2 * std::sqrt(speed2));
  }

  /// Curvature at uniform arc length. The grid's arc length is expected to
  /// match total_length(); samples beyond the path end are clamped to it.
  SampledFunction sample_curvature(const Grid& grid) const {
    std::vector<double> values(grid.point_count());
    for (int i = 0; i < grid.point_count(); ++i) {
      const double u = parameter_at_arc_length(grid.point(i));
      values[i] = curvature_at_parameter(u);
    }
    return SampledFunction(grid, std::move(values));
  }

 private:
  static constexpr int panel_count = 2048;
  static constexpr double singular_speed = 1e-12;

  double panel_width() const { return 1.0 / panel_count; }

  static double eval(const std::vector<double>& coeffs, double u, int der) {
    // Horner on the der-th derivative coefficients.
    double acc = 0.0;
    for (int j = static_cast<int>(coeffs.size()) - 1; j >= der; --j) {
      double factor = 1.0;
      for (int r = 0; r < der; ++r) factor *= static_cast<double>(j - r);
      acc = acc * u + coeffs[j] * factor;
    }
    return acc;
  }

  /// 5-point Gauss-Legendre integral of the speed over [a, b].
  double gauss_length(double a, double b) const {
    static constexpr double nodes[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                        0.5384693101056831, 0.9061798459386640};
    static constexpr double weights[5] = {0.2369268850561891, 0.4786286704993665,
                                          0.5688888888888889, 0.4786286704993665,
                                          0.2369268850561891};
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int q = 0; q < 5; ++q) {
      const double sp = speed(mid + half * nodes[q]);
      if (sp < singular_speed) {
        throw DegeneratePathError("QuinticPath: singular parameterization (||gamma'|| < 1e-12)");
      }
      acc += weights[q] * sp;
    }
    return acc * half;
  }

  void build_length_table() {
    cum_length_.resize(panel_count + 1);
    cum_length_[0] = 0.0;
    for (int p = 0; p < panel_count; ++p) {
      const double a = p * panel_width();
      cum_length_[p + 1] = cum_length_[p] + gauss_length(a, a + panel_width());
    }
  }

  std::vector<double> cx_, cy_;  // coefficients, ascending powers of u
  int degree_ = 0;
  std::vector<double> cum_length_;
};

}  // namespace speedplan
