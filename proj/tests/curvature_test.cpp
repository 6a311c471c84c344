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

#include "speedplan/curvature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "speedplan/spline_path.hpp"

namespace speedplan {
namespace {

// Independent route to the transition polynomial: solve the six endpoint
// conditions (values at both ends, zero first and second derivatives) as a
// dense linear system in the monomial coefficients and evaluate that.
double transition_via_linear_system(double l_a, double l_b, double k_a, double k_b, double s) {
  Eigen::Matrix<double, 6, 6> conditions;
  Eigen::Matrix<double, 6, 1> rhs;
  auto value_row = [](double x) {
    Eigen::Matrix<double, 1, 6> row;
    for (int j = 0; j < 6; ++j) row(j) = std::pow(x, j);
    return row;
  };
  auto d1_row = [](double x) {
    Eigen::Matrix<double, 1, 6> row;
    row(0) = 0.0;
    for (int j = 1; j < 6; ++j) row(j) = j * std::pow(x, j - 1);
    return row;
  };
  auto d2_row = [](double x) {
    Eigen::Matrix<double, 1, 6> row;
    row(0) = row(1) = 0.0;
    for (int j = 2; j < 6; ++j) row(j) = j * (j - 1) * std::pow(x, j - 2);
    return row;
  };
  conditions.row(0) = value_row(l_a);
  conditions.row(1) = value_row(l_b);
  conditions.row(2) = d1_row(l_a);
  conditions.row(3) = d1_row(l_b);
  conditions.row(4) = d2_row(l_a);
  conditions.row(5) = d2_row(l_b);
  rhs << k_a, k_b, 0.0, 0.0, 0.0, 0.0;
  const Eigen::Matrix<double, 6, 1> coeffs = conditions.fullPivLu().solve(rhs);
  double acc = 0.0;
  for (int j = 5; j >= 0; --j) acc = acc * s + coeffs(j);
  return acc;
}

TEST(HermiteTransition, EndpointValues) {
  EXPECT_DOUBLE_EQ(hermite_transition(30.0, 40.0, 0.0, 1.0 / 60.0, 30.0), 0.0);
  EXPECT_DOUBLE_EQ(hermite_transition(30.0, 40.0, 0.0, 1.0 / 60.0, 40.0), 1.0 / 60.0);
  EXPECT_DOUBLE_EQ(hermite_transition(-2.0, 3.0, 1.5, -0.25, -2.0), 1.5);
  EXPECT_DOUBLE_EQ(hermite_transition(-2.0, 3.0, 1.5, -0.25, 3.0), -0.25);
}

TEST(HermiteTransition, ConstantWhenEndpointsAgree) {
  for (double s = 0.0; s <= 1.0; s += 0.125) {
    EXPECT_DOUBLE_EQ(hermite_transition(0.0, 1.0, 0.7, 0.7, s), 0.7);
  }
}

TEST(HermiteTransition, MidpointOfUnitBlend) {
  // By the symmetry of the blend, the midpoint of a 0 -> 1 transition is 1/2;
  // the linear-system route confirms it.
  EXPECT_NEAR(hermite_transition(0.0, 1.0, 0.0, 1.0, 0.5), 0.5, 1e-12);
  EXPECT_NEAR(transition_via_linear_system(0.0, 1.0, 0.0, 1.0, 0.5), 0.5, 1e-9);
}

TEST(HermiteTransition, MatchesLinearSystemRoute) {
  const double l_a = 30.0, l_b = 40.0, k_a = 0.0, k_b = 1.0 / 60.0;
  for (int i = 0; i <= 20; ++i) {
    const double s = l_a + (l_b - l_a) * i / 20.0;
    EXPECT_NEAR(hermite_transition(l_a, l_b, k_a, k_b, s),
                transition_via_linear_system(l_a, l_b, k_a, k_b, s), 1e-12);
  }
}

TEST(HermiteTransition, DerivativeConditionsAtEndpoints) {
  const double l_a = 2.0, l_b = 5.0, k_a = 0.3, k_b = -0.1;
  auto f = [&](double s) { return hermite_transition(l_a, l_b, k_a, k_b, s); };
  // Central differences, second order in the step.
  const double h = 1e-5;
  auto d1 = [&](double s) { return (f(s + h) - f(s - h)) / (2.0 * h); };
  auto d2 = [&](double s) { return (f(s + h) - 2.0 * f(s) + f(s - h)) / (h * h); };
  EXPECT_NEAR(d1(l_a), 0.0, 1e-9);
  EXPECT_NEAR(d1(l_b), 0.0, 1e-9);
  EXPECT_NEAR(d2(l_a), 0.0, 1e-4);
  EXPECT_NEAR(d2(l_b), 0.0, 1e-4);
}

TEST(HermiteTransition, RejectsEmptyInterval) {
  EXPECT_THROW(hermite_transition(1.0, 1.0, 0.0, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(hermite_transition(2.0, 1.0, 0.0, 1.0, 1.5), std::invalid_argument);
}

TEST(PiecewiseHermiteCurvature, RegionValues) {
  const PiecewiseHermiteCurvature k(30.0, 40.0, 124.2478, 134.2478, 60.0, 200.0);
  EXPECT_EQ(k(0.0), 0.0);
  EXPECT_EQ(k(29.9), 0.0);
  EXPECT_DOUBLE_EQ(k(30.0), 0.0);
  EXPECT_DOUBLE_EQ(k(40.0), 1.0 / 60.0);
  EXPECT_DOUBLE_EQ(k(80.0), 1.0 / 60.0);
  EXPECT_DOUBLE_EQ(k(124.2478), 1.0 / 60.0);
  EXPECT_DOUBLE_EQ(k(134.2478), 0.0);
  EXPECT_EQ(k(150.0), 0.0);
  EXPECT_EQ(k(200.0), 0.0);
}

TEST(PiecewiseHermiteCurvature, InterpolationConditionsAtBreakpoints) {
  const PiecewiseHermiteCurvature k(30.0, 40.0, 124.2478, 134.2478, 60.0, 200.0);
  const double h = 1e-5;
  auto d1 = [&](double s) { return (k(s + h) - k(s - h)) / (2.0 * h); };
  auto d2 = [&](double s) { return (k(s + h) - 2.0 * k(s) + k(s - h)) / (h * h); };
  for (double l : {30.0, 40.0, 124.2478, 134.2478}) {
    EXPECT_NEAR(d1(l), 0.0, 1e-9) << "at l = " << l;
    EXPECT_NEAR(d2(l), 0.0, 1e-4) << "at l = " << l;
  }
  EXPECT_NEAR(k(30.0), 0.0, 1e-9);
  EXPECT_NEAR(k(40.0), 1.0 / 60.0, 1e-9);
  EXPECT_NEAR(k(124.2478), 1.0 / 60.0, 1e-9);
  EXPECT_NEAR(k(134.2478), 0.0, 1e-9);
}

TEST(PiecewiseHermiteCurvature, ValidatesBreakpoints) {
  EXPECT_THROW(PiecewiseHermiteCurvature(0.0, 40, 120, 130, 60, 200), std::invalid_argument);
  EXPECT_THROW(PiecewiseHermiteCurvature(40, 30, 120, 130, 60, 200), std::invalid_argument);
  EXPECT_THROW(PiecewiseHermiteCurvature(30, 40, 120, 130, 60, 129), std::invalid_argument);
  EXPECT_THROW(PiecewiseHermiteCurvature(30, 40, 120, 130, -60, 200), std::invalid_argument);
}

TEST(SampledCurvature, SizeMustMatchGrid) {
  const Grid grid(1.0, 2);
  EXPECT_NO_THROW(SampledCurvature({0.0, 0.1, 0.0}).sample(grid));
  EXPECT_THROW(SampledCurvature({0.0, 0.1}).sample(grid), std::invalid_argument);
  EXPECT_THROW(SampledCurvature({0.0, std::nan(""), 0.0}), std::invalid_argument);
}

TEST(QuinticPath, NeedsThreeWaypoints) {
  std::vector<PlanarPoint> two = {{0, 0}, {1, 0}};
  EXPECT_THROW(QuinticPath path(two), std::invalid_argument);
  std::vector<PlanarPoint> repeated = {{0, 0}, {0, 0}, {1, 0}};
  EXPECT_THROW(QuinticPath path(repeated), std::invalid_argument);
}

TEST(QuinticPath, StraightLineHasZeroCurvature) {
  std::vector<PlanarPoint> pts = {{0, 0}, {1, 1}, {2.5, 2.5}, {4, 4}, {7, 7}};
  const QuinticPath path(pts);
  EXPECT_NEAR(path.total_length(), std::hypot(7.0, 7.0), 1e-9);
  const Grid grid(path.total_length(), 200);
  const auto k = path.sample_curvature(grid);
  for (int i = 0; i < k.size(); ++i) {
    EXPECT_NEAR(k[i], 0.0, 1e-9) << "at i = " << i;
  }
}

TEST(QuinticPath, QuarterCircleCurvature) {
  // Eight waypoints on a quarter circle of radius 5; the degree-5 fit is a
  // least-squares one, so curvature is only near 1/R, within 2 percent away
  // from the ends.
  const double radius = 5.0;
  std::vector<PlanarPoint> pts;
  for (int i = 0; i < 8; ++i) {
    const double theta = (std::numbers::pi / 2.0) * i / 7.0;
    pts.push_back({radius * std::cos(theta), radius * std::sin(theta)});
  }
  const QuinticPath path(pts);
  EXPECT_NEAR(path.total_length(), radius * std::numbers::pi / 2.0, 1e-3 * radius);
  for (int i = 0; i <= 50; ++i) {
    const double u = 0.1 + 0.8 * i / 50.0;
    const double k = std::abs(path.curvature_at_parameter(u));
    EXPECT_NEAR(k * radius, 1.0, 0.02) << "at u = " << u;
  }
}

TEST(QuinticPath, SingularParameterizationIsDegenerate) {
  // An out-and-back set of waypoints: the fitted x(u) is a parabola whose
  // derivative vanishes at the turning point while y stays identically zero.
  std::vector<PlanarPoint> pts = {{0, 0}, {1, 0}, {0, 0}};
  const QuinticPath path(pts);
  EXPECT_THROW(path.curvature_at_parameter(0.5), DegeneratePathError);
}

TEST(QuinticPath, ArcLengthAgreesWithFineQuadrature) {
  std::vector<PlanarPoint> pts = {{0, 0}, {2, -0.5}, {2.60, 0}, {1.75, 2}, {3, 3}};
  const QuinticPath path(pts);
  // Trapezoid refinement as an independent route to the length.
  const int m = 200000;
  double ref = 0.0;
  double prev = path.speed(0.0);
  for (int i = 1; i <= m; ++i) {
    const double u = double(i) / m;
    const double sp = path.speed(u);
    ref += 0.5 * (prev + sp) / m;
    prev = sp;
  }
  EXPECT_NEAR(path.total_length(), ref, 1e-6 * ref);
}

TEST(QuinticPath, ReparameterizationIsMonotoneAndConsistent) {
  std::vector<PlanarPoint> pts = {{0, 0}, {2, -0.5}, {2.60, 0}, {1.75, 2}, {3, 3}};
  const QuinticPath path(pts);
  const double total = path.total_length();
  double prev_u = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double s = total * i / 100.0;
    const double u = path.parameter_at_arc_length(s);
    EXPECT_GE(u, prev_u);
    prev_u = u;
  }
  EXPECT_DOUBLE_EQ(path.parameter_at_arc_length(0.0), 0.0);
  EXPECT_DOUBLE_EQ(path.parameter_at_arc_length(total), 1.0);
  // Round trip: the arc length up to u(s) is s again.
  for (double frac : {0.1, 0.35, 0.5, 0.77, 0.93}) {
    const double s = frac * total;
    const double u = path.parameter_at_arc_length(s);
    double acc = 0.0;
    const int m = 20000;
    double prev = path.speed(0.0);
    for (int i = 1; i <= m; ++i) {
      const double x = u * i / m;
      const double sp = path.speed(x);
      acc += 0.5 * (prev + sp) * (u / m);
      prev = sp;
    }
    EXPECT_NEAR(acc, s, 1e-5 * total);
  }
}

}  // namespace
}  // namespace speedplan
