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

#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prrtc/bezier.hpp"
#include "prrtc/geometry.hpp"
#include "prrtc/rrt.hpp"
#include "prrtc/world.hpp"

namespace prrtc {

/// Circle around an obstacle interest point; its radius is the ego width.
struct SafetyCircle {
  Point2 center;
  double radius = 0.0;
};

/// The two points where tangents from an external point touch a circle.
/// `right` is reached by turning clockwise from the ray toward the center,
/// `left` counter-clockwise.
template <typename Scalar>
struct TangentPoints {
  Vec2<Scalar> right;
  Vec2<Scalar> left;
};

/// Tangency points from `p` to the circle (o, r):
///   h = sqrt(L^2 - r^2), beta = atan2(o - p), alpha = atan2(r, h),
///   T = p + h (cos(beta -/+ alpha), sin(beta -/+ alpha)).
/// Throws std::domain_error when p lies inside or on the circle.
template <typename Scalar>
TangentPoints<Scalar> tangent_points(const Vec2<Scalar>& p, const Vec2<Scalar>& o, Scalar r) {
  const Vec2<Scalar> d = o - p;
  const Scalar L = d.norm();
  if (!(r >= Scalar(0)) || !(L > r)) {
    throw std::domain_error("tangent_points: point inside or on safety circle");
  }
  const Scalar h = std::sqrt((L - r) * (L + r));
  const Scalar beta = std::atan2(d.y(), d.x());
  const Scalar alpha = std::atan2(r, h);
  return {p + h * Vec2<Scalar>(std::cos(beta - alpha), std::sin(beta - alpha)),
          p + h * Vec2<Scalar>(std::cos(beta + alpha), std::sin(beta + alpha))};
}

struct IntermediateGoalPair {
  Point2 g1;  // nearer to the start
  Point2 g2;
  bool fallback = false;  // parallel tangents; goals offset perpendicular from the center
};

/// Intersections of same-side tangents: the start's left tangent with the
/// goal's right tangent (passing the circle on its left), and vice versa.
/// Ordered by distance to `start`. Throws std::domain_error if either endpoint
/// lies inside or on the circle.
IntermediateGoalPair intermediate_goals(const Point2& start, const Point2& goal,
                                        const SafetyCircle& circle);

/// Joins a tree path grown from the segment start and one grown from the
/// segment destination toward the same intermediate goal. The two end points
/// are merged into their midpoint; the second path is reversed. Throws
/// std::logic_error if the ends are more than 2 * goal_radius apart.
Polyline connect(const Polyline& forward, const Polyline& backward, double goal_radius);

struct ConnectParams {
  PlannerParams rrt;
  double outline_spacing = 0.3;
  int max_depth = 8;
};

struct PlanResult {
  SmoothPath path;
  std::vector<Tree> trees;  // partial trees forming the final path, in path order
  std::vector<Point2> goals_used;
  long total_iterations = 0;
  std::vector<ObstacleId> hindering_ids;
  std::vector<Polyline> segments;  // control polygons handed to the smoother
};

class PlanningError : public std::runtime_error {
 public:
  PlanningError(std::string stage, std::optional<ObstacleId> obstacle, const std::string& detail,
                long iterations);

  const std::string& stage() const { return stage_; }
  std::optional<ObstacleId> obstacle() const { return obstacle_; }
  long iterations() const { return iterations_; }

 private:
  std::string stage_;
  std::optional<ObstacleId> obstacle_;
  long iterations_;
};

/// Multi-tree planner. Plans start -> goal ignoring obstacles, then repeatedly
/// repairs the part of the path hit by an obstacle: trees are grown from both
/// ends of the broken part toward intermediate goals around the obstacle's
/// interest points and spliced in. The final control polygons are smoothed
/// with Bezier curves; curves that would cut into an obstacle are split until
/// they clear it. Throws PlanningError when no repair succeeds.
PlanResult plan(const Scenario& scenario, const ConnectParams& params, Rng& rng);

}  // namespace prrtc
