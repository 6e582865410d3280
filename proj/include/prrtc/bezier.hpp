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
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "prrtc/geometry.hpp"

namespace prrtc {

/// Maximum number of control points fitted by a single Bezier curve.
inline constexpr std::size_t kMaxBezierNodes = 25;

template <typename Scalar>
Scalar binomial(int n, int k) {
  if (k < 0 || k > n) return Scalar(0);
  k = std::min(k, n - k);
  Scalar c(1);
  for (int j = 1; j <= k; ++j) c = c * Scalar(n - k + j) / Scalar(j);
  return std::round(c);
}

/// Bernstein basis polynomial C(n, i) (1 - t)^(n - i) t^i.
template <typename Scalar>
Scalar bernstein(int n, int i, Scalar t) {
  if (n < 0 || i < 0 || i > n) throw std::invalid_argument("bernstein: need 0 <= i <= n");
  if (t < Scalar(0) || t > Scalar(1)) throw std::invalid_argument("bernstein: t outside [0, 1]");
  return binomial<Scalar>(n, i) * std::pow(Scalar(1) - t, n - i) * std::pow(t, i);
}

/// P(t) = sum_i B_i^n(t) P_i with n = ctrl.size() - 1.
template <typename Scalar>
Vec2<Scalar> bezier_point(const std::vector<Vec2<Scalar>>& ctrl, Scalar t) {
  if (ctrl.empty()) throw std::invalid_argument("bezier_point: no control points");
  const int n = static_cast<int>(ctrl.size()) - 1;
  if (t <= Scalar(0)) return ctrl.front();
  if (t >= Scalar(1)) return ctrl.back();
  Vec2<Scalar> p = Vec2<Scalar>::Zero();
  for (int i = 0; i <= n; ++i) p += bernstein<Scalar>(n, i, t) * ctrl[i];
  return p;
}

/// Sampled curve with cumulative arc length and signed curvature per sample.
struct SmoothPath {
  Polyline samples;
  std::vector<double> arc_length;
  std::vector<double> curvature;

  /// Fills arc length and three-point (Menger) curvature for the given samples.
  static SmoothPath from_samples(Polyline samples);

  double length() const { return arc_length.empty() ? 0.0 : arc_length.back(); }
  bool empty() const { return samples.empty(); }
  std::size_t size() const { return samples.size(); }
};

/// ceil(polyline length / 0.2 m), at least 20.
int default_sample_count(const Polyline& polygon);

/// Samples the Bezier curve of `polygon` at `num_samples` uniform parameters.
SmoothPath bezier_path(const Polyline& polygon, int num_samples);

/// Splits a control polygon at its middle node until no piece exceeds `max_nodes`.
/// Neighbouring pieces share the split node.
std::vector<Polyline> split_for_degree(const Polyline& polygon,
                                       std::size_t max_nodes = kMaxBezierNodes);

/// One Bezier per segment (after degree splitting), joined end to end with the
/// shared endpoints deduplicated. Segments must share endpoints.
SmoothPath connect_and_smooth(const std::vector<Polyline>& segments,
                              std::optional<int> samples_per_segment = std::nullopt);

}  // namespace prrtc
