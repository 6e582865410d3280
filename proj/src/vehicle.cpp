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

#include "prrtc/vehicle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace prrtc {

VehicleState step(const VehicleState& state, const ControlInput& u, double dt,
                  const EgoParams& ego) {
  VehicleState next;
  next.v = std::clamp(u.v_cmd, 0.0, ego.v_max);
  next.px = state.px + next.v * std::cos(state.psi) * dt;
  next.py = state.py + next.v * std::sin(state.psi) * dt;
  next.psi = wrap_angle(state.psi + next.v / ego.wheelbase * std::tan(u.delta) * dt);
  return next;
}

int substep_count(double horizon, double dt) {
  if (!(dt > 0.0) || !(horizon >= dt)) {
    throw std::invalid_argument("substep_count: need horizon >= dt > 0");
  }
  return std::max(1, static_cast<int>(std::ceil(horizon / dt - 1e-9)));
}

VehicleState integrate(const VehicleState& state, const ControlInput& u, double horizon,
                       double dt, const EgoParams& ego) {
  const int n = substep_count(horizon, dt);
  const double h = horizon / n;
  VehicleState s = state;
  for (int i = 0; i < n; ++i) s = step(s, u, h, ego);
  return s;
}

std::vector<VehicleState> rollout(const VehicleState& state, const ControlInput& u,
                                  double horizon, double dt, const EgoParams& ego) {
  const int n = substep_count(horizon, dt);
  const double h = horizon / n;
  std::vector<VehicleState> out;
  out.reserve(n + 1);
  out.push_back(state);
  for (int i = 0; i < n; ++i) out.push_back(step(out.back(), u, h, ego));
  return out;
}

std::vector<ControlInput> control_grid(const EgoParams& ego, int steering_count,
                                       std::span<const double> speed_fractions) {
  static constexpr std::array<double, 2> kDefaultFractions{0.5, 1.0};
  if (speed_fractions.empty()) speed_fractions = kDefaultFractions;
  if (steering_count < 1) throw std::invalid_argument("control_grid: steering_count < 1");

  std::vector<ControlInput> grid;
  grid.reserve(steering_count * speed_fractions.size());
  // (k - mid) / mid is exactly antisymmetric, so mirrored candidates negate exactly.
  const double mid = 0.5 * (steering_count - 1);
  for (const double frac : speed_fractions) {
    for (int k = 0; k < steering_count; ++k) {
      const double delta = steering_count == 1 ? 0.0 : ego.delta_max * ((k - mid) / mid);
      grid.push_back({delta, frac * ego.v_max});
    }
  }
  return grid;
}

Extension steer_toward(const VehicleState& from, const Point2& target,
                       std::span<const ControlInput> candidates, const EgoParams& ego,
                       double horizon, double dt) {
  if (candidates.empty()) throw std::invalid_argument("steer_toward: no candidates");
  Extension best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const VehicleState end = integrate(from, candidates[i], horizon, dt, ego);
    const double d = (end.position() - target).norm();
    const bool better =
        d < best_dist ||
        (d == best_dist && std::abs(candidates[i].delta) < std::abs(best.control.delta));
    if (better) {
      best = {end, candidates[i], i};
      best_dist = d;
    }
  }
  return best;
}

}  // namespace prrtc
