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

#include "prrtc/world.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace prrtc {

const char* to_string(ObstacleKind kind) {
  switch (kind) {
    case ObstacleKind::vehicle:
      return "vehicle";
    case ObstacleKind::pothole:
      return "pothole";
    case ObstacleKind::other:
      return "other";
  }
  return "other";
}

ObstacleKind obstacle_kind_from_string(const std::string& name) {
  if (name == "vehicle") return ObstacleKind::vehicle;
  if (name == "pothole") return ObstacleKind::pothole;
  if (name == "other") return ObstacleKind::other;
  throw std::invalid_argument("unknown obstacle kind '" + name + "'");
}

void validate_obstacle(const Obstacle& obstacle) {
  const std::string tag = "obstacle " + std::to_string(obstacle.id);
  const auto& pts = obstacle.outline;
  if (pts.size() < 3) throw std::invalid_argument(tag + ": outline needs at least 3 points");
  for (const auto& p : pts) {
    if (!p.allFinite()) throw std::invalid_argument(tag + ": non-finite outline point");
  }
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = pts[i];
    const Point2& b = pts[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      // Adjacent edges share a vertex and are allowed to touch there.
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_intersect(a, b, pts[j], pts[(j + 1) % n])) {
        throw std::invalid_argument(tag + ": outline is self-intersecting");
      }
    }
  }
  if (polyline_length(pts) == 0.0) throw std::invalid_argument(tag + ": zero perimeter");
}

void validate_scenario(const Scenario& s) {
  const Bounds& b = s.bounds;
  if (!(b.xmax > b.xmin) || !(b.ymax > b.ymin)) {
    throw std::invalid_argument("scenario bounds are empty");
  }
  const EgoParams& e = s.ego;
  if (!(e.width > 0 && e.wheelbase > 0 && e.v_max > 0 && e.delta_max > 0 &&
        e.goal_radius > 0)) {
    throw std::invalid_argument("ego parameters must be strictly positive");
  }
  if (!(e.delta_max < 0.5 * kPi<double>)) {
    throw std::invalid_argument("ego delta_max must be below pi/2");
  }
  for (const auto& o : s.obstacles) validate_obstacle(o);
  for (std::size_t i = 0; i < s.obstacles.size(); ++i) {
    for (std::size_t j = i + 1; j < s.obstacles.size(); ++j) {
      if (s.obstacles[i].id == s.obstacles[j].id) {
        throw std::invalid_argument("duplicate obstacle id " + std::to_string(s.obstacles[i].id));
      }
    }
  }
  const Point2 start = s.start.position();
  if (!start.allFinite() || !b.contains(start)) {
    throw std::invalid_argument("start lies outside the scenario bounds");
  }
  if (!s.goal.allFinite() || !b.contains(s.goal)) {
    throw std::invalid_argument("goal lies outside the scenario bounds");
  }
  if (s.start.v < 0) throw std::invalid_argument("start speed must be non-negative");
  for (const auto& o : s.obstacles) {
    if (point_in_polygon(start, o.outline)) {
      throw std::invalid_argument("start lies inside obstacle " + std::to_string(o.id));
    }
    if (point_in_polygon(s.goal, o.outline)) {
      throw std::invalid_argument("goal lies inside obstacle " + std::to_string(o.id));
    }
  }
}

Polyline discretize_outline(const Obstacle& obstacle, double spacing) {
  if (!(spacing > 0)) throw std::invalid_argument("discretize_outline: spacing must be > 0");
  const auto& pts = obstacle.outline;
  if (pts.size() < 3 || polyline_length(pts) == 0.0) {
    throw std::invalid_argument("discretize_outline: degenerate polygon");
  }
  Polyline out;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = pts[i];
    const Point2& b = pts[(i + 1) % n];
    out.push_back(a);
    const int pieces = static_cast<int>(std::ceil((b - a).norm() / spacing - 1e-12));
    for (int k = 1; k < pieces; ++k) {
      out.push_back(a + (static_cast<double>(k) / pieces) * (b - a));
    }
  }
  return out;
}

Polyline select_interest_points(const Polyline& outline_points, double half_width) {
  if (!(half_width > 0)) {
    throw std::invalid_argument("select_interest_points: half_width must be > 0");
  }
  Polyline kept;
  for (const auto& p : outline_points) {
    if (kept.empty() || (p - kept.back()).norm() > half_width) kept.push_back(p);
  }
  return kept;
}

Polyline interest_points(const Obstacle& obstacle, double spacing, double half_width) {
  return select_interest_points(discretize_outline(obstacle, spacing), half_width);
}

double obstacle_distance(const Point2& p, const Obstacle& obstacle) {
  return point_polygon_distance(p, obstacle.outline);
}

double obstacle_distance(const Point2& a, const Point2& b, const Obstacle& obstacle) {
  return segment_polygon_distance(a, b, obstacle.outline);
}

double polyline_distance(const Polyline& path, const Obstacle& obstacle) {
  if (path.empty()) return std::numeric_limits<double>::infinity();
  if (path.size() == 1) return obstacle_distance(path.front(), obstacle);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < path.size(); ++i) {
    best = std::min(best, obstacle_distance(path[i - 1], path[i], obstacle));
    if (best == 0.0) break;
  }
  return best;
}

std::optional<ObstacleId> path_collides(const Polyline& path,
                                        const std::vector<Obstacle>& obstacles,
                                        double half_width) {
  if (path.empty()) throw std::invalid_argument("path_collides: empty path");
  for (const auto& o : obstacles) {
    if (polyline_distance(path, o) < half_width) return o.id;
  }
  return std::nullopt;
}

double clearance(const Point2& point, const std::vector<Obstacle>& obstacles) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& o : obstacles) best = std::min(best, obstacle_distance(point, o));
  return best;
}

double path_clearance(const Polyline& path, const std::vector<Obstacle>& obstacles) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& o : obstacles) best = std::min(best, polyline_distance(path, o));
  return best;
}

const Obstacle* find_obstacle(const std::vector<Obstacle>& obstacles, ObstacleId id) {
  for (const auto& o : obstacles) {
    if (o.id == id) return &o;
  }
  return nullptr;
}

}  // namespace prrtc
