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

#include <cmath>
#include <random>

#include "prrtc/connect.hpp"
#include "prrtc/scenario_io.hpp"
#include "test_util.hpp"

namespace prrtc {
namespace {

using test::box;

TEST(Tangent, KnownPoint) {
  const auto t = tangent_points<double>({0, 0}, {3, 4}, 3.0);
  EXPECT_NEAR(t.right.x(), 3.84, 1e-12);
  EXPECT_NEAR(t.right.y(), 1.12, 1e-12);
  EXPECT_NEAR(t.left.x(), 0.0, 1e-12);
  EXPECT_NEAR(t.left.y(), 4.0, 1e-12);
  for (const Point2& T : {t.right, t.left}) {
    EXPECT_NEAR((T - Point2(3, 4)).norm(), 3.0, 1e-9);
    EXPECT_NEAR((T - Point2(0, 0)).dot(T - Point2(3, 4)), 0.0, 1e-9);
  }
}

TEST(Tangent, VanishingRadiusCollapsesToCenter) {
  const auto t = tangent_points<double>({-1, 2}, {4, 6}, 1e-9);
  EXPECT_NEAR((t.right - Point2(4, 6)).norm(), 0.0, 1e-8);
  EXPECT_NEAR((t.left - Point2(4, 6)).norm(), 0.0, 1e-8);
}

TEST(Tangent, PointOnCircleThrows) {
  EXPECT_THROW(tangent_points<double>({0, 0}, {3, 4}, 5.0), std::domain_error);
  EXPECT_THROW(tangent_points<double>({0, 0}, {3, 4}, 6.0), std::domain_error);
}

TEST(Tangent, RandomResiduals) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  std::uniform_real_distribution<double> ur(0.1, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const Point2 o(u(rng), u(rng));
    const double r = ur(rng);
    Point2 p(u(rng), u(rng));
    while ((p - o).norm() <= 1.01 * r) p = Point2(u(rng), u(rng));
    const auto t = tangent_points(p, o, r);
    for (const Point2& T : {t.right, t.left}) {
      EXPECT_LT(std::abs((T - o).norm() - r), 1e-9);
      EXPECT_LT(std::abs((T - p).dot(T - o)), 1e-9);
    }
  }
}

TEST(IntermediateGoals, SymmetricCase) {
  const auto g = intermediate_goals({-2, 0}, {2, 0}, {{0, 0}, 1.0});
  // Tangent slope from (-2, 0) is m = r / sqrt(d^2 - r^2); the lines meet at x = 0.
  const double y = 2.0 * 1.0 / std::sqrt(4.0 - 1.0);
  EXPECT_NEAR(y, 2.0 / std::sqrt(3.0), 1e-15);
  EXPECT_FALSE(g.fallback);
  EXPECT_NEAR(g.g1.x(), 0.0, 1e-9);
  EXPECT_NEAR(g.g2.x(), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(g.g1.y()), y, 1e-9);
  EXPECT_NEAR(std::abs(g.g2.y()), y, 1e-9);
  EXPECT_NEAR(g.g1.y(), -g.g2.y(), 1e-9);
}

TEST(IntermediateGoals, MirrorSwapsGoals) {
  // Start-goal axis along x; mirroring flips y. The goal nearer the start stays first.
  const auto a = intermediate_goals({-3, 0}, {4, 0}, {{0.5, 0.4}, 1.2});
  const auto b = intermediate_goals({-3, 0}, {4, 0}, {{0.5, -0.4}, 1.2});
  EXPECT_NEAR(a.g1.x(), b.g1.x(), 1e-9);
  EXPECT_NEAR(a.g1.y(), -b.g1.y(), 1e-9);
  EXPECT_NEAR(a.g2.x(), b.g2.x(), 1e-9);
  EXPECT_NEAR(a.g2.y(), -b.g2.y(), 1e-9);
}

TEST(IntermediateGoals, VanishingRadiusCollapsesToCenter) {
  const auto g = intermediate_goals({-3, 1}, {5, -2}, {{1, 0.5}, 1e-9});
  EXPECT_NEAR((g.g1 - Point2(1, 0.5)).norm(), 0.0, 1e-6);
  EXPECT_NEAR((g.g2 - Point2(1, 0.5)).norm(), 0.0, 1e-6);
}

TEST(IntermediateGoals, OutsideGeneratingCircle) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-15.0, 15.0);
  std::uniform_real_distribution<double> ur(0.3, 3.0);
  for (int i = 0; i < 500; ++i) {
    const Point2 o(u(rng), u(rng));
    const double r = ur(rng);
    Point2 s(u(rng), u(rng));
    Point2 d(u(rng), u(rng));
    if ((s - o).norm() <= 1.01 * r || (d - o).norm() <= 1.01 * r) continue;
    const auto g = intermediate_goals(s, d, {o, r});
    EXPECT_GE((g.g1 - o).norm(), r - 1e-9);
    EXPECT_GE((g.g2 - o).norm(), r - 1e-9);
  }
}

TEST(Connect, SharedGoal) {
  const Point2 a(0, 0), g(5, 1), b(9, 0);
  const Polyline out = connect({a, g}, {b, g}, 1.0);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0], a);
  EXPECT_EQ(out[1], g);
  EXPECT_EQ(out[2], b);
}

TEST(Connect, NearbyEndpointsMergeAtMidpoint) {
  const Polyline out = connect({{0, 0}, {2, 0}, {5, 0.2}}, {{10, 0}, {5.4, -0.2}}, 1.0);
  ASSERT_EQ(out.size(), 4u);
  EXPECT_NEAR(out[2].x(), 5.2, 1e-12);
  EXPECT_NEAR(out[2].y(), 0.0, 1e-12);
  EXPECT_EQ(out[3], Point2(10, 0));
}

TEST(Connect, DistantEndpointsThrow) {
  EXPECT_THROW(connect({{0, 0}, {5, 0}}, {{10, 0}, {10, 0}}, 1.0), std::logic_error);
}

Scenario open_field() {
  Scenario s;
  s.name = "open";
  s.bounds = {0, 0, 30, 30};
  s.start = {3, 3, 0, 0};
  s.goal = {26, 24};
  return s;
}

TEST(Plan, ObstacleFreeUsesOneTree) {
  Rng rng(3);
  const PlanResult r = plan(open_field(), ConnectParams{}, rng);
  EXPECT_EQ(r.trees.size(), 1u);
  EXPECT_TRUE(r.hindering_ids.empty());
  EXPECT_TRUE(r.goals_used.empty());
  EXPECT_FALSE(r.path.empty());
}

TEST(Plan, ObstacleFreeIterationsMatchSingleSearch) {
  const Scenario s = open_field();
  const ConnectParams params;
  Rng a(41);
  const PlanResult r = plan(s, params, a);

  Rng b(41);
  const auto ppm = generate_ppm(s.goal, params.rrt.lambda, params.rrt.sigma, s.bounds, {},
                                params.rrt.cell_size);
  const auto ctx = PlanningContext::make(s.bounds, {}, s.ego);
  const RrtResult direct = prrt(s.start, s.goal, ppm, params.rrt, ctx, b);
  ASSERT_TRUE(direct.reached());
  EXPECT_EQ(r.total_iterations, direct.iterations);
}

TEST(Plan, LeftTurnSingleHinderingObstacle) {
  const Scenario s = load_scenario(test::scenario_path("left_turn"));
  Rng rng(1);
  const PlanResult r = plan(s, ConnectParams{}, rng);
  ASSERT_EQ(r.hindering_ids.size(), 1u);
  EXPECT_EQ(r.trees.size(), 2u);
  EXPECT_EQ(r.goals_used.size(), 1u);
  EXPECT_GE(test::sampled_clearance(r.path.samples, s.obstacles, 0.1), s.ego.half_width());
  EXPECT_LE((r.path.samples.front() - s.start.position()).norm(), 1e-9);
  EXPECT_LE((r.path.samples.back() - s.goal).norm(), s.ego.goal_radius + 1e-9);
}

TEST(Plan, MultiObstacleHindersBoth) {
  const Scenario s = load_scenario(test::scenario_path("multi_obstacle"));
  Rng rng(1);
  const PlanResult r = plan(s, ConnectParams{}, rng);
  ASSERT_EQ(r.hindering_ids.size(), 2u);
  EXPECT_GE(test::sampled_clearance(r.path.samples, s.obstacles, 0.1), s.ego.half_width());
}

TEST(Plan, GoalsClearTheirObstacles) {
  const Scenario s = load_scenario(test::scenario_path("pothole_straight"));
  Rng rng(6);
  const PlanResult r = plan(s, ConnectParams{}, rng);
  for (const auto& g : r.goals_used) EXPECT_GE(clearance(g, s.obstacles), s.ego.half_width());
}

TEST(Plan, Deterministic) {
  const Scenario s = load_scenario(test::scenario_path("pothole_left_turn"));
  Rng a(12);
  Rng b(12);
  const PlanResult ra = plan(s, ConnectParams{}, a);
  const PlanResult rb = plan(s, ConnectParams{}, b);
  EXPECT_EQ(plan_to_json(ra), plan_to_json(rb));
  EXPECT_EQ(ra.path.samples, rb.path.samples);
}

TEST(Plan, ExhaustedBudgetReportsIterations) {
  Scenario s = open_field();
  // A wall with no gap separates start and goal.
  s.obstacles = {box(1, 14, -1, 16, 31)};
  ConnectParams params;
  params.rrt.max_iterations = 50;
  Rng rng(2);
  try {
    plan(s, params, rng);
    FAIL() << "expected PlanningError";
  } catch (const PlanningError& e) {
    EXPECT_GT(e.iterations(), 0);
    EXPECT_FALSE(e.stage().empty());
  }
}

}  // namespace
}  // namespace prrtc
