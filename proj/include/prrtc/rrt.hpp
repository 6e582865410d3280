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

#include <cstddef>
#include <optional>
#include <vector>

#include "prrtc/sampling.hpp"
#include "prrtc/vehicle.hpp"
#include "prrtc/world.hpp"

namespace prrtc {

using NodeId = std::size_t;

struct TreeNode {
  NodeId id = 0;
  VehicleState state;
  ControlInput control;  // the control that produced this node; zero at the root
  std::optional<NodeId> parent;
};

/// Append-only search tree. Parents always precede their children.
class Tree {
 public:
  explicit Tree(const VehicleState& root);

  const TreeNode& add(const VehicleState& state, const ControlInput& control, NodeId parent);

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(NodeId id) const { return nodes_.at(id); }
  std::size_t size() const { return nodes_.size(); }
  const VehicleState& root_state() const { return nodes_.front().state; }

  /// Node ids from the root down to `leaf`, inclusive.
  std::vector<NodeId> chain_to(NodeId leaf) const;
  Polyline positions(const std::vector<NodeId>& ids) const;

 private:
  std::vector<TreeNode> nodes_;
};

struct PlannerParams {
  double lambda = 1e3;
  double sigma = 0.05;
  int max_iterations = 3000;
  double extension_horizon = 0.5;  // seconds per extension
  double dt = 0.1;                 // integration substep
  double goal_radius = 1.0;
  double cell_size = 0.25;
  /// When false, samples whose extension is rejected do not count as iterations
  /// (the sample budget is still max_iterations).
  bool count_rejected = true;
};

/// What a single tree search knows about the world.
struct PlanningContext {
  Bounds bounds;
  std::vector<Obstacle> obstacles;
  EgoParams ego;
  std::vector<ControlInput> controls;  // candidate set for steer_toward

  static PlanningContext make(const Bounds& bounds, std::vector<Obstacle> obstacles,
                              const EgoParams& ego);
};

struct RrtResult {
  Tree tree;
  std::optional<std::vector<NodeId>> path;  // root-to-goal chain; absent on failure
  int iterations = 0;

  bool reached() const { return path.has_value(); }
};

/// Nearest node by position; ties go to the lowest id.
NodeId nearest_node(const Tree& tree, const Point2& point);

/// True when the motion from `parent` to `child` (the substep curve and the
/// straight chord between them) stays in bounds with `half_width` clearance.
bool extension_valid(const std::vector<VehicleState>& motion, const PlanningContext& ctx,
                     double half_width);

/// Goal-biased RRT with kinematic extension. Every sample is one iteration; the
/// search stops once a node lands within goal_radius of the goal or after
/// max_iterations samples.
RrtResult prrt(const VehicleState& start, const Point2& goal, const PositionProbabilityMap& ppm,
               const PlannerParams& params, const PlanningContext& ctx, Rng& rng);

}  // namespace prrtc
