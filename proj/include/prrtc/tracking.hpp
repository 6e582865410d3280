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

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <vector>

#include "prrtc/bezier.hpp"
#include "prrtc/vehicle.hpp"

namespace prrtc {

struct MpcParams {
  int prediction_horizon = 20;
  int control_horizon = 15;
  double dt = 0.1;
  double w_position = 1.0;
  double w_curvature = 0.5;
  double w_speed = 0.2;
  double v_max = 4.4704;
  double tolerance = 1e-6;
  int max_sweeps = 10000;
};

/// Nearest point on the sampled path polyline.
struct PathProjection {
  std::size_t segment = 0;  // index of the segment's first sample
  double s = 0.0;           // arc length at the projection
  Point2 point = Point2::Zero();
  double heading = 0.0;      // tangent heading of the segment
  double lateral = 0.0;      // signed offset of the query point, positive left of the path
};

/// Projects onto the sample polyline. With `window`, only segments whose arc
/// length range intersects [window->first, window->second] are considered.
PathProjection project(const SmoothPath& path, const Point2& p,
                       std::optional<std::pair<double, double>> window = std::nullopt);

/// Position and curvature at arc length `s` (clamped to the path).
Point2 point_at(const SmoothPath& path, double s);
double curvature_at(const SmoothPath& path, double s);

/// Stanley law: delta = heading_error + atan2(gain * offset, v + 0.1), clamped to
/// +-delta_max. `offset` is the signed distance to the path measured to the
/// vehicle's left, so a path on the left gives a positive (left) correction.
double stanley_law(double heading_error, double offset, double v, double gain,
                   double delta_max);

/// Stanley steering about the front axle: heading error and offset are taken
/// at the projection of the front axle point onto the path.
double stanley_steer(const VehicleState& state, const SmoothPath& path, double gain,
                     const EgoParams& ego,
                     std::optional<std::pair<double, double>> window = std::nullopt);

/// Box-constrained speed QP over the control horizon:
///   J(v) = w1 sum_j (s_j - s_ref_j)^2 + w2 sum_m K_m v_m^2 + w3 sum_m (v_m - v_max)^2,
/// with progress s_j = dt * sum_{k<=j} v_min(k, Nc) and reference progress
/// s_ref_j = dt * j * v_ref. `curvature` holds |K| per prediction step (Np values).
/// Solved by projected coordinate descent.
Eigen::VectorXd solve_speed_profile(const Eigen::VectorXd& curvature, double v_ref,
                                    const MpcParams& params);

/// Speed sequence (length Nc) for the current state: curvature is read along the
/// reference progress from the vehicle's projection, reference speed is the current speed.
Eigen::VectorXd mpc_speed(const VehicleState& state, const SmoothPath& path,
                          const MpcParams& params);

struct TrajectoryRecord {
  double t = 0.0;
  VehicleState state;
  ControlInput control;  // control that produced `state` from the previous record
};

using Trajectory = std::vector<TrajectoryRecord>;

struct TrackResult {
  Trajectory trajectory;
  bool reached = false;  // false: the time cap expired first (trajectory is partial)
};

/// Closed-loop simulation: Stanley steering plus the first MPC speed each step
/// of mpc.dt, until within goal_radius of the path end or the time cap
/// 3 * length / (0.25 * v_max). Throws std::invalid_argument when the start is
/// more than 2 m from the path head.
TrackResult track(const SmoothPath& path, const VehicleState& start, const EgoParams& ego,
                  const MpcParams& mpc, double stanley_gain);

}  // namespace prrtc
