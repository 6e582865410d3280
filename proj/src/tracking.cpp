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

#include "prrtc/tracking.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace prrtc {

namespace {

constexpr double kSpeedSoftening = 0.1;
constexpr double kMaxStartOffset = 2.0;
// Projection search window around the previous arc length, in meters.
constexpr double kWindowBehind = 2.0;
constexpr double kWindowAhead = 10.0;

std::size_t segment_at(const SmoothPath& path, double s) {
  const auto& al = path.arc_length;
  const auto it = std::upper_bound(al.begin(), al.end(), s);
  const auto idx = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, it - al.begin() - 1));
  return std::min(idx, path.size() - 2);
}

// Curvature is read at the reference progress, which keeps J quadratic in v.
Eigen::VectorXd speed_profile_from(const SmoothPath& path, double s0, double speed,
                                   const MpcParams& params);

}  // namespace

PathProjection project(const SmoothPath& path, const Point2& p,
                       std::optional<std::pair<double, double>> window) {
  if (path.empty()) throw std::invalid_argument("project: empty path");
  PathProjection best;
  best.point = path.samples.front();
  if (path.size() == 1) {
    best.lateral = 0.0;
    return best;
  }
  double best_d2 = std::numeric_limits<double>::infinity();
  bool found = false;
  for (int pass = 0; pass < 2 && !found; ++pass) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (pass == 0 && window &&
          (path.arc_length[i + 1] < window->first || path.arc_length[i] > window->second)) {
        continue;
      }
      const Point2& a = path.samples[i];
      const Point2& b = path.samples[i + 1];
      const Point2 ab = b - a;
      const double len2 = ab.squaredNorm();
      if (len2 == 0.0) continue;
      const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
      const Point2 q = a + t * ab;
      const double d2 = (p - q).squaredNorm();
      if (d2 < best_d2) {
        best_d2 = d2;
        found = true;
        const double len = std::sqrt(len2);
        best.segment = i;
        best.s = path.arc_length[i] + t * len;
        best.point = q;
        best.heading = std::atan2(ab.y(), ab.x());
        best.lateral = cross<double>(ab / len, p - q);
      }
    }
  }
  return best;
}

Point2 point_at(const SmoothPath& path, double s) {
  if (path.empty()) throw std::invalid_argument("point_at: empty path");
  if (path.size() == 1 || s <= 0.0) return path.samples.front();
  if (s >= path.length()) return path.samples.back();
  const std::size_t i = segment_at(path, s);
  const double span = path.arc_length[i + 1] - path.arc_length[i];
  const double t = span > 0 ? (s - path.arc_length[i]) / span : 0.0;
  return path.samples[i] + t * (path.samples[i + 1] - path.samples[i]);
}

double curvature_at(const SmoothPath& path, double s) {
  if (path.empty()) throw std::invalid_argument("curvature_at: empty path");
  if (path.size() == 1 || s <= 0.0) return path.curvature.front();
  if (s >= path.length()) return path.curvature.back();
  const std::size_t i = segment_at(path, s);
  const double span = path.arc_length[i + 1] - path.arc_length[i];
  const double t = span > 0 ? (s - path.arc_length[i]) / span : 0.0;
  return (1.0 - t) * path.curvature[i] + t * path.curvature[i + 1];
}

double stanley_law(double heading_error, double offset, double v, double gain,
                   double delta_max) {
  const double delta = heading_error + std::atan2(gain * offset, v + kSpeedSoftening);
  return std::clamp(delta, -delta_max, delta_max);
}

double stanley_steer(const VehicleState& state, const SmoothPath& path, double gain,
                     const EgoParams& ego, std::optional<std::pair<double, double>> window) {
  const Point2 front(state.px + ego.wheelbase * std::cos(state.psi),
                     state.py + ego.wheelbase * std::sin(state.psi));
  const PathProjection proj = project(path, front, window);
  const double heading_error = wrap_angle(proj.heading - state.psi);
  return stanley_law(heading_error, -proj.lateral, state.v, gain, ego.delta_max);
}

Eigen::VectorXd solve_speed_profile(const Eigen::VectorXd& curvature, double v_ref,
                                    const MpcParams& params) {
  const int np = params.prediction_horizon;
  const int nc = params.control_horizon;
  if (nc < 1 || np < nc) throw std::invalid_argument("mpc: need 1 <= Nc <= Np");
  if (!(params.dt > 0)) throw std::invalid_argument("mpc: dt must be > 0");
  if (curvature.size() < nc) throw std::invalid_argument("mpc: curvature shorter than Nc");
  const double vmax = params.v_max;

  // Progress after j steps is dt * (A v)_j; speeds past Nc repeat v_Nc.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(np, nc);
  for (int j = 0; j < np; ++j) {
    for (int k = 0; k <= j; ++k) A(j, std::min(k, nc - 1)) += 1.0;
  }
  Eigen::VectorXd b(np);
  for (int j = 0; j < np; ++j) b[j] = (j + 1) * v_ref;

  const double pos_scale = params.w_position * params.dt * params.dt;
  Eigen::VectorXd diag(nc);
  for (int m = 0; m < nc; ++m) {
    diag[m] = params.w_curvature * std::abs(curvature[m]) + params.w_speed;
  }
  // J(v) = 1/2 v'Hv + g'v + const
  const Eigen::MatrixXd H =
      2.0 * (pos_scale * A.transpose() * A + Eigen::MatrixXd(diag.asDiagonal()));
  const Eigen::VectorXd g =
      -2.0 * (pos_scale * A.transpose() * b + Eigen::VectorXd::Constant(nc, params.w_speed * vmax));

  Eigen::VectorXd v = Eigen::VectorXd::Constant(nc, std::clamp(v_ref, 0.0, vmax));
  for (int sweep = 0; sweep < params.max_sweeps; ++sweep) {
    double max_change = 0.0;
    for (int m = 0; m < nc; ++m) {
      const double grad = H.row(m).dot(v) + g[m];
      double next;
      if (H(m, m) > 0.0) {
        next = std::clamp(v[m] - grad / H(m, m), 0.0, vmax);
      } else {
        next = grad > 0.0 ? 0.0 : (grad < 0.0 ? vmax : v[m]);
      }
      max_change = std::max(max_change, std::abs(next - v[m]));
      v[m] = next;
    }
    if (max_change < params.tolerance) break;
  }
  return v;
}

namespace {

Eigen::VectorXd speed_profile_from(const SmoothPath& path, double s0, double speed,
                                   const MpcParams& params) {
  const double v_ref = std::clamp(speed, 0.0, params.v_max);
  Eigen::VectorXd curvature(params.prediction_horizon);
  for (int j = 0; j < params.prediction_horizon; ++j) {
    curvature[j] = std::abs(curvature_at(path, s0 + params.dt * (j + 1) * v_ref));
  }
  return solve_speed_profile(curvature, v_ref, params);
}

}  // namespace

Eigen::VectorXd mpc_speed(const VehicleState& state, const SmoothPath& path,
                          const MpcParams& params) {
  if (path.empty()) throw std::invalid_argument("mpc_speed: empty path");
  return speed_profile_from(path, project(path, state.position()).s, state.v, params);
}

TrackResult track(const SmoothPath& path, const VehicleState& start, const EgoParams& ego,
                  const MpcParams& mpc, double stanley_gain) {
  if (path.empty()) throw std::invalid_argument("track: empty path");
  TrackResult result;
  result.trajectory.push_back({0.0, start, ControlInput{}});
  const double length = path.length();
  if (length == 0.0) {
    result.reached = true;
    return result;
  }
  if ((start.position() - path.samples.front()).norm() > kMaxStartOffset) {
    throw std::invalid_argument("track: start is more than 2 m from the path head");
  }

  const Point2 end = path.samples.back();
  if ((start.position() - end).norm() <= ego.goal_radius) {
    result.reached = true;
    return result;
  }

  MpcParams speed_params = mpc;
  speed_params.v_max = std::min(mpc.v_max, ego.v_max);
  const double time_cap = 3.0 * length / (0.25 * ego.v_max);
  const long max_steps = static_cast<long>(std::ceil(time_cap / mpc.dt));

  VehicleState state = start;
  double s_front = project(path, start.position()).s + ego.wheelbase;
  double s_rear = 0.0;
  for (long k = 1; k <= max_steps; ++k) {
    const double delta = stanley_steer(state, path, stanley_gain, ego,
                                       std::make_pair(s_front - kWindowBehind, s_front + kWindowAhead));
    const PathProjection rear =
        project(path, state.position(), std::make_pair(s_rear - kWindowBehind, s_rear + kWindowAhead));
    s_rear = rear.s;

    const double v_cmd =
        std::clamp(speed_profile_from(path, s_rear, state.v, speed_params)[0], 0.0, ego.v_max);

    const ControlInput u{delta, v_cmd};
    state = step(state, u, mpc.dt, ego);
    result.trajectory.push_back({static_cast<double>(k) * mpc.dt, state, u});

    const Point2 front(state.px + ego.wheelbase * std::cos(state.psi),
                       state.py + ego.wheelbase * std::sin(state.psi));
    s_front = project(path, front, std::make_pair(s_front - kWindowBehind, s_front + kWindowAhead)).s;
    if ((state.position() - end).norm() <= ego.goal_radius) {
      result.reached = true;
      break;
    }
  }
  return result;
}

}  // namespace prrtc
