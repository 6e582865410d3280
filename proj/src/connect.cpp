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

#include "prrtc/connect.hpp"

#include <algorithm>
#include <limits>

namespace prrtc {

IntermediateGoalPair intermediate_goals(const Point2& start, const Point2& goal,
                                        const SafetyCircle& circle) {
  const auto from_start = tangent_points(start, circle.center, circle.radius);
  const auto from_goal = tangent_points(goal, circle.center, circle.radius);

  Point2 perp(-(goal - start).y(), (goal - start).x());
  if (perp.norm() > 0) perp.normalize();
  const Point2 offset = 2.0 * circle.radius * perp;

  IntermediateGoalPair out;
  Point2 left_pass;
  Point2 right_pass;
  if (!line_intersection<double>(start, from_start.left - start, goal, from_goal.right - goal,
                                 left_pass)) {
    left_pass = circle.center + offset;
    out.fallback = true;
  }
  if (!line_intersection<double>(start, from_start.right - start, goal, from_goal.left - goal,
                                 right_pass)) {
    right_pass = circle.center - offset;
    out.fallback = true;
  }
  if ((right_pass - start).norm() < (left_pass - start).norm()) {
    out.g1 = right_pass;
    out.g2 = left_pass;
  } else {
    out.g1 = left_pass;
    out.g2 = right_pass;
  }
  return out;
}

Polyline connect(const Polyline& forward, const Polyline& backward, double goal_radius) {
  if (forward.empty() || backward.empty()) throw std::logic_error("connect: empty tree path");
  const double gap = (forward.back() - backward.back()).norm();
  if (gap > 2.0 * goal_radius) {
    throw std::logic_error("connect: tree paths end " + std::to_string(gap) + " m apart");
  }
  Polyline out(forward.begin(), forward.end() - 1);
  out.push_back(0.5 * (forward.back() + backward.back()));
  out.insert(out.end(), backward.rbegin() + 1, backward.rend());
  return out;
}

PlanningError::PlanningError(std::string stage, std::optional<ObstacleId> obstacle,
                             const std::string& detail, long iterations)
    : std::runtime_error("planning failed at " + stage +
                         (obstacle ? " (obstacle " + std::to_string(*obstacle) + ")" : "") +
                         ": " + detail),
      stage_(std::move(stage)),
      obstacle_(obstacle),
      iterations_(iterations) {}

namespace {

// A stretch of the current path taken from one partial tree. States carry the
// forward driving heading at each end, whichever direction the tree grew.
struct Leg {
  Tree tree;
  Polyline points;
  VehicleState front;
  VehicleState back;
};

VehicleState reversed(VehicleState s) {
  s.psi = wrap_angle(s.psi + kPi<double>);
  return s;
}

VehicleState at(VehicleState s, const Point2& p) {
  s.px = p.x();
  s.py = p.y();
  return s;
}

Polyline concatenate(const std::vector<Leg>& legs) {
  Polyline out;
  for (const auto& leg : legs) {
    auto first = leg.points.begin();
    if (!out.empty()) ++first;  // legs share their junction point
    out.insert(out.end(), first, leg.points.end());
  }
  return out;
}

std::vector<Obstacle> select(const std::vector<Obstacle>& all, const std::vector<ObstacleId>& ids) {
  std::vector<Obstacle> out;
  for (const auto id : ids) {
    if (const Obstacle* o = find_obstacle(all, id)) out.push_back(*o);
  }
  return out;
}

// Point of the path that passes nearest to the obstacle.
Point2 collision_location(const std::vector<Leg>& legs, std::size_t first, std::size_t last,
                          const Obstacle& obstacle) {
  Point2 centroid = Point2::Zero();
  for (const auto& p : obstacle.outline) centroid += p;
  centroid /= static_cast<double>(obstacle.outline.size());

  double best = std::numeric_limits<double>::infinity();
  Point2 location = legs[first].points.front();
  for (std::size_t k = first; k <= last; ++k) {
    const auto& pts = legs[k].points;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const double d = obstacle_distance(pts[i], pts[i + 1], obstacle);
      if (d < best) {
        best = d;
        location = closest_point_on_segment(centroid, pts[i], pts[i + 1]);
      }
    }
  }
  return location;
}

class Planner {
 public:
  Planner(const Scenario& scenario, const ConnectParams& params, Rng& rng)
      : scenario_(scenario), params_(params), rng_(rng), half_width_(scenario.ego.half_width()) {}

  PlanResult run();

 private:
  RrtResult grow(const VehicleState& root, const Point2& goal, const PlanningContext& ctx,
                 const PositionProbabilityMap& ppm) {
    RrtResult r = prrt(root, goal, ppm, params_.rrt, ctx, rng_);
    iterations_ += r.iterations;
    return r;
  }

  std::optional<std::vector<Leg>> try_goal(const VehicleState& front, const VehicleState& back,
                                           bool front_is_start, const Point2& goal,
                                           const PlanningContext& ctx);
  std::vector<Leg> repair(const VehicleState& front, const VehicleState& back, bool front_is_start,
                          const Obstacle& obstacle, const Point2& location);
  std::vector<Polyline> smooth_pieces(const std::vector<Leg>& legs) const;

  const Scenario& scenario_;
  const ConnectParams& params_;
  Rng& rng_;
  double half_width_;
  long iterations_ = 0;
  std::vector<ObstacleId> hindering_;
  std::vector<Point2> goals_used_;
};

std::optional<std::vector<Leg>> Planner::try_goal(const VehicleState& front,
                                                  const VehicleState& back, bool front_is_start,
                                                  const Point2& goal, const PlanningContext& ctx) {
  const PlannerParams& rp = params_.rrt;
  const auto ppm = generate_ppm(goal, rp.lambda, rp.sigma, ctx.bounds, ctx.obstacles,
                                rp.cell_size);
  // Only the real start carries a heading the vehicle must keep. Junctions and
  // the goal are position constraints, so trees rooted there face the
  // intermediate goal and the smoother blends the heading change.
  VehicleState t1_root = front;
  if (!front_is_start) t1_root.psi = std::atan2(goal.y() - front.py, goal.x() - front.px);
  RrtResult t1 = grow(t1_root, goal, ctx, ppm);
  if (!t1.reached()) return std::nullopt;
  VehicleState t2_root = back;
  t2_root.psi = std::atan2(goal.y() - back.py, goal.x() - back.px);
  RrtResult t2 = grow(t2_root, goal, ctx, ppm);
  if (!t2.reached()) return std::nullopt;

  const Polyline p1 = t1.tree.positions(*t1.path);
  const Polyline p2 = t2.tree.positions(*t2.path);
  const Polyline joined = connect(p1, p2, rp.goal_radius);
  const Point2 junction = joined[p1.size() - 1];

  // The merged junction moves the chords next to it; they must clear as well.
  Polyline around{joined[p1.size() > 1 ? p1.size() - 2 : 0], junction,
                  joined[std::min(p1.size(), joined.size() - 1)]};
  for (const auto& o : ctx.obstacles) {
    if (polyline_distance(around, o) < half_width_) return std::nullopt;
  }

  Leg a{t1.tree, Polyline(joined.begin(), joined.begin() + p1.size()), t1_root,
        at(t1.tree.node(t1.path->back()).state, junction)};
  Leg b{t2.tree, Polyline(joined.begin() + p1.size() - 1, joined.end()),
        at(reversed(t2.tree.node(t2.path->back()).state), junction), back};
  std::vector<Leg> legs;
  legs.push_back(std::move(a));
  legs.push_back(std::move(b));
  goals_used_.push_back(goal);
  return legs;
}

std::vector<Leg> Planner::repair(const VehicleState& front, const VehicleState& back,
                                 bool front_is_start, const Obstacle& obstacle,
                                 const Point2& location) {
  const PlanningContext ctx = PlanningContext::make(
      scenario_.bounds, select(scenario_.obstacles, hindering_), scenario_.ego);

  Polyline centers = interest_points(obstacle, params_.outline_spacing, half_width_);
  std::stable_sort(centers.begin(), centers.end(), [&](const Point2& a, const Point2& b) {
    return (a - location).norm() < (b - location).norm();
  });

  const Point2 p_front = front.position();
  const Point2 p_back = back.position();
  double radius = scenario_.ego.width;
  for (int attempt = 0; attempt < 2; ++attempt) {
    bool any_usable = false;
    double nearest_end = std::numeric_limits<double>::infinity();
    // Candidates keep the nearest-first order, but goals with a full safety
    // radius of room go first: a goal hugging the outline is slow to reach.
    std::vector<Point2> roomy;
    std::vector<Point2> tight;
    for (const auto& center : centers) {
      const double l = std::min((p_front - center).norm(), (p_back - center).norm());
      nearest_end = std::min(nearest_end, l);
      if (l <= radius) continue;
      any_usable = true;
      const auto goals = intermediate_goals(p_front, p_back, {center, radius});
      for (const Point2& g : {goals.g1, goals.g2}) {
        if (!ctx.bounds.contains(g)) continue;
        const double room = clearance(g, ctx.obstacles);
        if (room >= radius) {
          roomy.push_back(g);
        } else if (room >= half_width_) {
          tight.push_back(g);
        }
      }
    }
    for (const auto* list : {&roomy, &tight}) {
      for (const Point2& g : *list) {
        if (auto legs = try_goal(front, back, front_is_start, g, ctx)) return std::move(*legs);
      }
    }
    if (any_usable) break;
    // Every safety circle swallowed an endpoint: shrink once and retry.
    radius = std::max(half_width_, 0.9 * nearest_end);
  }
  throw PlanningError("intermediate goals", obstacle.id,
                      "all interest points exhausted without a connecting tree pair",
                      iterations_);
}

std::vector<Polyline> Planner::smooth_pieces(const std::vector<Leg>& legs) const {
  std::vector<Polyline> pieces;
  for (const auto& leg : legs) {
    for (auto& p : split_for_degree(leg.points)) pieces.push_back(std::move(p));
  }
  // A Bezier curve can cut across its control polygon; halve offending pieces
  // until they clear. Two-point pieces are the (already cleared) chords.
  std::vector<Polyline> done;
  std::vector<Polyline> stack(pieces.rbegin(), pieces.rend());
  while (!stack.empty()) {
    Polyline piece = std::move(stack.back());
    stack.pop_back();
    if (piece.size() >= 3) {
      const SmoothPath curve = bezier_path(piece, default_sample_count(piece));
      if (path_clearance(curve.samples, scenario_.obstacles) < half_width_) {
        const std::size_t mid = piece.size() / 2;
        stack.emplace_back(piece.begin() + mid, piece.end());
        stack.emplace_back(piece.begin(), piece.begin() + mid + 1);
        continue;
      }
    }
    done.push_back(std::move(piece));
  }
  return done;
}

PlanResult Planner::run() {
  validate_scenario(scenario_);
  const PlannerParams& rp = params_.rrt;
  const EgoParams& ego = scenario_.ego;

  std::vector<Leg> legs;
  {
    const PlanningContext free_ctx = PlanningContext::make(scenario_.bounds, {}, ego);
    const auto ppm =
        generate_ppm(scenario_.goal, rp.lambda, rp.sigma, scenario_.bounds, {}, rp.cell_size);
    RrtResult initial = grow(scenario_.start, scenario_.goal, free_ctx, ppm);
    if (!initial.reached()) {
      throw PlanningError("initial tree", std::nullopt, "goal not reached", iterations_);
    }
    const auto& path = *initial.path;
    Polyline pts = initial.tree.positions(path);
    VehicleState back = initial.tree.node(path.back()).state;
    if (path.size() == 1) back.psi = std::atan2(scenario_.goal.y() - back.py, scenario_.goal.x() - back.px);
    legs.push_back({std::move(initial.tree), std::move(pts), scenario_.start, back});
  }

  for (int repairs = 0;; ++repairs) {
    const Polyline current = concatenate(legs);
    const auto hit = path_collides(current, scenario_.obstacles, half_width_);
    if (!hit) break;
    if (repairs >= params_.max_depth) {
      throw PlanningError("repair", *hit, "exceeded " + std::to_string(params_.max_depth) +
                                              " repairs", iterations_);
    }
    const Obstacle& obstacle = *find_obstacle(scenario_.obstacles, *hit);
    if (std::find(hindering_.begin(), hindering_.end(), *hit) == hindering_.end()) {
      hindering_.push_back(*hit);
    }

    // Every leg touched by the obstacle is discarded; the unbroken neighbours
    // supply the new segment's endpoints.
    std::size_t first = legs.size();
    std::size_t last = 0;
    for (std::size_t k = 0; k < legs.size(); ++k) {
      if (polyline_distance(legs[k].points, obstacle) < half_width_) {
        first = std::min(first, k);
        last = k;
      }
    }
    const Point2 location = collision_location(legs, first, last, obstacle);
    std::vector<Leg> replacement =
        repair(legs[first].front, legs[last].back, first == 0, obstacle, location);
    legs.erase(legs.begin() + first, legs.begin() + last + 1);
    legs.insert(legs.begin() + first, std::make_move_iterator(replacement.begin()),
                std::make_move_iterator(replacement.end()));
  }

  PlanResult result;
  result.segments = smooth_pieces(legs);
  result.path = connect_and_smooth(result.segments);
  for (auto& leg : legs) result.trees.push_back(std::move(leg.tree));
  result.goals_used = goals_used_;
  result.total_iterations = iterations_;
  result.hindering_ids = hindering_;
  return result;
}

}  // namespace

PlanResult plan(const Scenario& scenario, const ConnectParams& params, Rng& rng) {
  return Planner(scenario, params, rng).run();
}

}  // namespace prrtc
