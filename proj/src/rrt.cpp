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

#include "prrtc/rrt.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace prrtc {

Tree::Tree(const VehicleState& root) { nodes_.push_back({0, root, ControlInput{}, std::nullopt}); }

const TreeNode& Tree::add(const VehicleState& state, const ControlInput& control,
                          NodeId parent) {
  if (parent >= nodes_.size()) throw std::out_of_range("Tree::add: unknown parent");
  nodes_.push_back({nodes_.size(), state, control, parent});
  return nodes_.back();
}

std::vector<NodeId> Tree::chain_to(NodeId leaf) const {
  std::vector<NodeId> chain;
  std::optional<NodeId> cur = leaf;
  while (cur) {
    chain.push_back(*cur);
    cur = nodes_.at(*cur).parent;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

Polyline Tree::positions(const std::vector<NodeId>& ids) const {
  Polyline out;
  out.reserve(ids.size());
  for (const NodeId id : ids) out.push_back(nodes_.at(id).state.position());
  return out;
}

PlanningContext PlanningContext::make(const Bounds& bounds, std::vector<Obstacle> obstacles,
                                      const EgoParams& ego) {
  return {bounds, std::move(obstacles), ego, control_grid(ego)};
}

NodeId nearest_node(const Tree& tree, const Point2& point) {
  if (tree.size() == 0) throw std::invalid_argument("nearest_node: empty tree");
  NodeId best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (const auto& n : tree.nodes()) {
    const double dx = n.state.px - point.x();
    const double dy = n.state.py - point.y();
    const double d2 = dx * dx + dy * dy;
    if (d2 < best_d2) {
      best_d2 = d2;
      best = n.id;
    }
  }
  return best;
}

bool extension_valid(const std::vector<VehicleState>& motion, const PlanningContext& ctx,
                     double half_width) {
  for (const auto& s : motion) {
    if (!ctx.bounds.contains(s.position())) return false;
  }
  if (ctx.obstacles.empty()) return true;
  Polyline swept;
  swept.reserve(motion.size());
  for (const auto& s : motion) swept.push_back(s.position());
  const Polyline chord{swept.front(), swept.back()};
  for (const auto& o : ctx.obstacles) {
    if (polyline_distance(swept, o) < half_width) return false;
    if (polyline_distance(chord, o) < half_width) return false;
  }
  return true;
}

RrtResult prrt(const VehicleState& start, const Point2& goal, const PositionProbabilityMap& ppm,
               const PlannerParams& params, const PlanningContext& ctx, Rng& rng) {
  if (params.max_iterations < 1) throw std::invalid_argument("prrt: max_iterations < 1");
  RrtResult result{Tree(start), std::nullopt, 0};
  if ((start.position() - goal).norm() <= params.goal_radius) {
    result.path = std::vector<NodeId>{0};
    return result;
  }

  const double half_width = ctx.ego.half_width();
  int counted = 0;
  for (int i = 0; i < params.max_iterations; ++i) {
    const Point2 target = ppm.sample(rng);
    const NodeId near = nearest_node(result.tree, target);
    const VehicleState& from = result.tree.node(near).state;
    const Extension ext =
        steer_toward(from, target, ctx.controls, ctx.ego, params.extension_horizon, params.dt);
    const auto motion = rollout(from, ext.control, params.extension_horizon, params.dt, ctx.ego);
    const bool accepted = extension_valid(motion, ctx, half_width);
    if (accepted || params.count_rejected) ++counted;
    if (!accepted) continue;

    const NodeId id = result.tree.add(ext.state, ext.control, near).id;
    if ((ext.state.position() - goal).norm() <= params.goal_radius) {
      result.path = result.tree.chain_to(id);
      result.iterations = counted;
      return result;
    }
  }
  result.iterations = counted;
  return result;
}

}  // namespace prrtc
