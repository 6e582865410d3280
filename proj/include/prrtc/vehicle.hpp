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
#include <span>
#include <vector>

#include "prrtc/geometry.hpp"

namespace prrtc {

/// Ego vehicle geometry and limits. Defaults: a mid-size car capped at 10 mph.
struct EgoParams {
  double width = 1.8;
  double wheelbase = 2.7;
  double v_max = 4.4704;
  double delta_max = 0.6;
  double goal_radius = 1.0;

  double half_width() const { return 0.5 * width; }
};

/// Rear-axle pose plus speed. Heading lives in (-pi, pi], speed is non-negative.
struct VehicleState {
  double px = 0.0;
  double py = 0.0;
  double psi = 0.0;
  double v = 0.0;

  Point2 position() const { return {px, py}; }
};

struct ControlInput {
  double delta = 0.0;
  double v_cmd = 0.0;
};

/// One forward-Euler step of the kinematic bicycle model. The speed input is
/// applied immediately (clamped to [0, v_max]) and drives the position update.
VehicleState step(const VehicleState& state, const ControlInput& u, double dt,
                  const EgoParams& ego);

/// Number of `step` calls used to cover `horizon` with steps no longer than `dt`.
int substep_count(double horizon, double dt);

/// Holds `u` for `horizon` seconds. The step length is horizon / substep_count.
VehicleState integrate(const VehicleState& state, const ControlInput& u, double horizon,
                       double dt, const EgoParams& ego);

/// Same as `integrate`, returning every intermediate state (the first entry is `state`).
std::vector<VehicleState> rollout(const VehicleState& state, const ControlInput& u,
                                  double horizon, double dt, const EgoParams& ego);

/// Candidate controls for tree extension: `steering_count` angles spread uniformly
/// over [-delta_max, delta_max] for each speed fraction of v_max. Speed-major order.
std::vector<ControlInput> control_grid(const EgoParams& ego, int steering_count = 9,
                                       std::span<const double> speed_fractions = {});

struct Extension {
  VehicleState state;
  ControlInput control;
  std::size_t candidate = 0;
};

/// Best-of-candidates extension toward `target`: each control is held for
/// `horizon` and the end state closest to the target wins. Ties go to the
/// smaller |delta|, then to the lower candidate index.
Extension steer_toward(const VehicleState& from, const Point2& target,
                       std::span<const ControlInput> candidates, const EgoParams& ego,
                       double horizon, double dt);

}  // namespace prrtc
