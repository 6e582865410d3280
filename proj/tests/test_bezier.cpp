// Copyright 2026 The prrtc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "prrtc/bezier.hpp"
#include "test_util.hpp"

namespace prrtc {
namespace {

using test::convex_hull;
using test::de_casteljau;
using test::inside_hull;

TEST(Bernstein, QuadraticMiddleWeight) { EXPECT_DOUBLE_EQ(bernstein(2, 1, 0.5), 0.5); }

TEST(Bernstein, EndpointValues) {
  for (int n = 0; n <= 20; ++n) {
    for (int i = 0; i <= n; ++i) {
      EXPECT_EQ(bernstein(n, i, 0.0), i == 0 ? 1.0 : 0.0);
      EXPECT_EQ(bernstein(n, i, 1.0), i == n ? 1.0 : 0.0);
    }
  }
}

TEST(Bernstein, PartitionOfUnity) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n <= 20; ++n) {
    for (int k = 0; k < 100; ++k) {
      const double t = u(rng);
      double sum = 0.0;
      for (int i = 0; i <= n; ++i) sum += bernstein(n, i, t);
      EXPECT_LT(std::abs(sum - 1.0), 1e-12) << "n=" << n << " t=" << t;
    }
  }
}

TEST(Bernstein, RejectsBadArguments) {
  EXPECT_THROW(bernstein(3, 4, 0.5), std::invalid_argument);
  EXPECT_THROW(bernstein(3, 1, 1.5), std::invalid_argument);
}

TEST(BezierPath, LinearMidpoint) {
  const SmoothPath p = bezier_path({{0, 0}, {4, 2}}, 3);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_NEAR(p.samples[1].x(), 2.0, 1e-15);
  EXPECT_NEAR(p.samples[1].y(), 1.0, 1e-15);
  EXPECT_NEAR(p.length(), std::sqrt(20.0), 1e-12);
}

TEST(BezierPath, QuadraticMidpointMatchesDeCasteljau) {
  const Polyline ctrl{{0, 0}, {1, 1}, {2, 0}};
  const Point2 oracle = de_casteljau(ctrl, 0.5);
  EXPECT_NEAR(oracle.x(), 1.0, 1e-15);
  EXPECT_NEAR(oracle.y(), 0.5, 1e-15);
  const SmoothPath p = bezier_path(ctrl, 3);
  EXPECT_NEAR((p.samples[1] - oracle).norm(), 0.0, 1e-12);
}

TEST(BezierPath, AgreesWithDeCasteljauOnRandomPolygons) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    Polyline ctrl(2 + trial % 20);
    for (auto& c : ctrl) c = Point2(u(rng), u(rng));
    for (double t : {0.1, 0.37, 0.5, 0.81}) {
      EXPECT_NEAR((bezier_point(ctrl, t) - de_casteljau(ctrl, t)).norm(), 0.0, 1e-9);
    }
  }
}

TEST(BezierPath, EndpointsInterpolatedExactly) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    Polyline ctrl(2 + trial % 24);
    for (auto& c : ctrl) c = Point2(u(rng), u(rng));
    const SmoothPath p = bezier_path(ctrl, 40);
    EXPECT_EQ(p.samples.front(), ctrl.front());
    EXPECT_EQ(p.samples.back(), ctrl.back());
    EXPECT_EQ(bezier_point(ctrl, 0.0), ctrl.front());
    EXPECT_EQ(bezier_point(ctrl, 1.0), ctrl.back());
  }
}

TEST(BezierPath, SamplesStayInConvexHull) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    Polyline ctrl(3 + trial % 20);
    for (auto& c : ctrl) c = Point2(u(rng), u(rng));
    const Polyline hull = convex_hull(ctrl);
    for (const auto& s : bezier_path(ctrl, 60).samples) EXPECT_TRUE(inside_hull(s, hull, 1e-9));
  }
}

TEST(ConnectAndSmooth, SingleStraightSegment) {
  const SmoothPath p = connect_and_smooth({{{0, 0}, {10, 0}}});
  EXPECT_NEAR(p.length(), 10.0, 1e-12);
  for (const auto& s : p.samples) EXPECT_EQ(s.y(), 0.0);
  for (double k : p.curvature) EXPECT_NEAR(k, 0.0, 1e-12);
}

TEST(ConnectAndSmooth, TwoSegmentsPassThroughJunction) {
  const Point2 g(5, 3);
  const SmoothPath p = connect_and_smooth({{{0, 0}, {2, 3}, g}, {g, {8, 3}, {10, 0}}});
  EXPECT_EQ(p.samples.front(), Point2(0, 0));
  EXPECT_EQ(p.samples.back(), Point2(10, 0));
  EXPECT_EQ(std::count(p.samples.begin(), p.samples.end(), g), 1);
}

TEST(ConnectAndSmooth, HighDegreeSplitsAtMiddleNode) {
  Polyline nodes;
  for (int i = 0; i < 30; ++i) nodes.emplace_back(i, std::sin(0.4 * i));
  const auto pieces = split_for_degree(nodes);
  ASSERT_EQ(pieces.size(), 2u);
  EXPECT_EQ(pieces[0].back(), nodes[15]);
  EXPECT_EQ(pieces[1].front(), nodes[15]);
  const SmoothPath p = connect_and_smooth({nodes});
  EXPECT_NE(std::find(p.samples.begin(), p.samples.end(), nodes[15]), p.samples.end());
}

TEST(ConnectAndSmooth, DefaultSampleDensity) {
  EXPECT_EQ(default_sample_count({{0, 0}, {1, 0}}), 20);
  EXPECT_EQ(default_sample_count({{0, 0}, {10, 0}}), 50);
}

TEST(SmoothPathCurvature, CircleSamples) {
  Polyline pts;
  for (int i = 0; i <= 100; ++i) {
    const double a = 0.01 * i;
    pts.emplace_back(5.0 * std::cos(a), 5.0 * std::sin(a));
  }
  const SmoothPath p = SmoothPath::from_samples(pts);
  for (double k : p.curvature) EXPECT_NEAR(std::abs(k), 0.2, 1e-6);
}

}  // namespace
}  // namespace prrtc
