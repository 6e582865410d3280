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

#include <optional>
#include <string>
#include <vector>

#include "prrtc/geometry.hpp"
#include "prrtc/vehicle.hpp"

namespace prrtc {

using ObstacleId = int;

enum class ObstacleKind { vehicle, pothole, other };

const char* to_string(ObstacleKind kind);
ObstacleKind obstacle_kind_from_string(const std::string& name);

/// A static obstacle described by a closed, simple polygon outline.
struct Obstacle {
  ObstacleId id = 0;
  Polyline outline;
  ObstacleKind kind = ObstacleKind::other;
};

struct Bounds {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double diagonal() const { return std::hypot(width(), height()); }
  bool contains(const Point2& p) const {
    return p.x() >= xmin && p.x() <= xmax && p.y() >= ymin && p.y() <= ymax;
  }
};

struct Scenario {
  std::string name;
  Bounds bounds;
  std::vector<Obstacle> obstacles;
  VehicleState start;
  Point2 goal = Point2::Zero();
  EgoParams ego;
  std::vector<Polyline> lanes;  // drawing only
};

/// Throws std::invalid_argument describing the first violated invariant.
void validate_obstacle(const Obstacle& obstacle);
void validate_scenario(const Scenario& scenario);

/// Boundary points of the obstacle, walking the outline in order. Every original
/// vertex is kept and each edge is subdivided evenly so no gap exceeds `spacing`.
Polyline discretize_outline(const Obstacle& obstacle, double spacing);

/// Greedy scan in input order: a point survives when it is farther than
/// `half_width` from the last surviving point.
Polyline select_interest_points(const Polyline& outline_points, double half_width);

/// Interest points of an obstacle: outline discretization followed by pruning.
Polyline interest_points(const Obstacle& obstacle, double spacing, double half_width);

/// Distance from a point to a filled obstacle polygon (zero inside).
double obstacle_distance(const Point2& p, const Obstacle& obstacle);

/// Distance from a segment to a filled obstacle polygon (zero when overlapping).
double obstacle_distance(const Point2& a, const Point2& b, const Obstacle& obstacle);

/// Distance from a polyline (or a single point) to a filled obstacle polygon.
double polyline_distance(const Polyline& path, const Obstacle& obstacle);

/// First obstacle (in the given order) that comes closer than `half_width` to
/// the path; nullopt when the path keeps at least `half_width` clearance.
std::optional<ObstacleId> path_collides(const Polyline& path,
                                        const std::vector<Obstacle>& obstacles,
                                        double half_width);

/// Minimum distance from `point` to any obstacle; 0 inside one, +inf with none.
double clearance(const Point2& point, const std::vector<Obstacle>& obstacles);

/// Minimum clearance along a polyline, measured exactly per segment.
double path_clearance(const Polyline& path, const std::vector<Obstacle>& obstacles);

const Obstacle* find_obstacle(const std::vector<Obstacle>& obstacles, ObstacleId id);

}  // namespace prrtc
