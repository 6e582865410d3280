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

#include "prrtc/bezier.hpp"

#include <algorithm>

namespace prrtc {

namespace {

double menger_curvature(const Point2& a, const Point2& b, const Point2& c) {
  const double ab = (b - a).norm();
  const double bc = (c - b).norm();
  const double ca = (a - c).norm();
  const double denom = ab * bc * ca;
  if (denom <= 1e-15) return 0.0;
  return 2.0 * cross<double>(b - a, c - b) / denom;
}

}  // namespace

SmoothPath SmoothPath::from_samples(Polyline samples) {
  SmoothPath path;
  path.samples = std::move(samples);
  const std::size_t n = path.samples.size();
  path.arc_length.assign(n, 0.0);
  path.curvature.assign(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    path.arc_length[i] =
        path.arc_length[i - 1] + (path.samples[i] - path.samples[i - 1]).norm();
  }
  if (n >= 3) {
    for (std::size_t i = 1; i + 1 < n; ++i) {
      path.curvature[i] =
          menger_curvature(path.samples[i - 1], path.samples[i], path.samples[i + 1]);
    }
    path.curvature.front() = path.curvature[1];
    path.curvature.back() = path.curvature[n - 2];
  }
  return path;
}

int default_sample_count(const Polyline& polygon) {
  const double len = polyline_length(polygon);
  return std::max(20, static_cast<int>(std::ceil(len / 0.2)));
}

SmoothPath bezier_path(const Polyline& polygon, int num_samples) {
  if (polygon.size() < 2) throw std::invalid_argument("bezier_path: need at least 2 points");
  if (num_samples < 2) throw std::invalid_argument("bezier_path: need at least 2 samples");
  Polyline samples;
  samples.reserve(num_samples);
  for (int k = 0; k < num_samples; ++k) {
    const double t = static_cast<double>(k) / (num_samples - 1);
    samples.push_back(bezier_point(polygon, t));
  }
  samples.front() = polygon.front();
  samples.back() = polygon.back();
  return SmoothPath::from_samples(std::move(samples));
}

std::vector<Polyline> split_for_degree(const Polyline& polygon, std::size_t max_nodes) {
  if (max_nodes < 2) throw std::invalid_argument("split_for_degree: max_nodes < 2");
  if (polygon.size() <= max_nodes) return {polygon};
  const std::size_t mid = polygon.size() / 2;
  Polyline head(polygon.begin(), polygon.begin() + mid + 1);
  Polyline tail(polygon.begin() + mid, polygon.end());
  auto out = split_for_degree(head, max_nodes);
  auto rest = split_for_degree(tail, max_nodes);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

SmoothPath connect_and_smooth(const std::vector<Polyline>& segments,
                              std::optional<int> samples_per_segment) {
  if (segments.empty()) throw std::invalid_argument("connect_and_smooth: no segments");
  Polyline joined;
  for (const auto& segment : segments) {
    if (segment.empty()) throw std::invalid_argument("connect_and_smooth: empty segment");
    if (segment.size() == 1) {
      if (joined.empty()) joined.push_back(segment.front());
      continue;
    }
    for (const auto& piece : split_for_degree(segment)) {
      const int n = samples_per_segment.value_or(default_sample_count(piece));
      const SmoothPath curve = bezier_path(piece, n);
      auto first = curve.samples.begin();
      if (!joined.empty() && (joined.back() - curve.samples.front()).norm() < 1e-12) ++first;
      joined.insert(joined.end(), first, curve.samples.end());
    }
  }
  return SmoothPath::from_samples(std::move(joined));
}

}  // namespace prrtc
