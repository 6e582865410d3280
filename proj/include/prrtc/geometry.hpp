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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace prrtc {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

using Point2 = Vec2<double>;
using Polyline = std::vector<Point2>;

template <typename Scalar>
constexpr Scalar kPi = std::numbers::pi_v<Scalar>;

template <typename Scalar>
Scalar cross(const Vec2<Scalar>& a, const Vec2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Wraps an angle into (-pi, pi].
template <typename Scalar>
Scalar wrap_angle(Scalar a) {
  a = std::remainder(a, Scalar(2) * kPi<Scalar>);
  if (a <= -kPi<Scalar>) a += Scalar(2) * kPi<Scalar>;
  return a;
}

template <typename Scalar>
Vec2<Scalar> closest_point_on_segment(const Vec2<Scalar>& p, const Vec2<Scalar>& a,
                                      const Vec2<Scalar>& b) {
  const Vec2<Scalar> ab = b - a;
  const Scalar len2 = ab.squaredNorm();
  if (len2 == Scalar(0)) return a;
  const Scalar t = std::clamp((p - a).dot(ab) / len2, Scalar(0), Scalar(1));
  return a + t * ab;
}

template <typename Scalar>
Scalar point_segment_distance(const Vec2<Scalar>& p, const Vec2<Scalar>& a,
                              const Vec2<Scalar>& b) {
  return (p - closest_point_on_segment(p, a, b)).norm();
}

/// Closed-segment intersection test, including collinear overlap.
template <typename Scalar>
bool segments_intersect(const Vec2<Scalar>& a, const Vec2<Scalar>& b,
                        const Vec2<Scalar>& c, const Vec2<Scalar>& d) {
  const auto orient = [](const Vec2<Scalar>& p, const Vec2<Scalar>& q,
                         const Vec2<Scalar>& r) {
    const Scalar v = cross<Scalar>(q - p, r - p);
    return (v > Scalar(0)) - (v < Scalar(0));
  };
  const auto on_segment = [](const Vec2<Scalar>& p, const Vec2<Scalar>& q,
                             const Vec2<Scalar>& r) {
    return std::min(p.x(), r.x()) <= q.x() && q.x() <= std::max(p.x(), r.x()) &&
           std::min(p.y(), r.y()) <= q.y() && q.y() <= std::max(p.y(), r.y());
  };
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, c, b)) return true;
  if (o2 == 0 && on_segment(a, d, b)) return true;
  if (o3 == 0 && on_segment(c, a, d)) return true;
  if (o4 == 0 && on_segment(c, b, d)) return true;
  return false;
}

template <typename Scalar>
Scalar segment_segment_distance(const Vec2<Scalar>& a, const Vec2<Scalar>& b,
                                const Vec2<Scalar>& c, const Vec2<Scalar>& d) {
  if (segments_intersect(a, b, c, d)) return Scalar(0);
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

/// Even-odd rule; points exactly on the boundary may land on either side.
template <typename Scalar>
bool point_in_polygon(const Vec2<Scalar>& p, const std::vector<Vec2<Scalar>>& poly) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2<Scalar>& vi = poly[i];
    const Vec2<Scalar>& vj = poly[j];
    if ((vi.y() > p.y()) != (vj.y() > p.y())) {
      const Scalar x = vj.x() + (p.y() - vj.y()) * (vi.x() - vj.x()) / (vi.y() - vj.y());
      if (p.x() < x) inside = !inside;
    }
  }
  return inside;
}

template <typename Scalar>
Scalar point_boundary_distance(const Vec2<Scalar>& p, const std::vector<Vec2<Scalar>>& poly) {
  Scalar best = std::numeric_limits<Scalar>::infinity();
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, point_segment_distance(p, poly[i], poly[(i + 1) % n]));
  }
  return best;
}

/// Distance from a point to a filled polygon: zero inside.
template <typename Scalar>
Scalar point_polygon_distance(const Vec2<Scalar>& p, const std::vector<Vec2<Scalar>>& poly) {
  if (point_in_polygon(p, poly)) return Scalar(0);
  return point_boundary_distance(p, poly);
}

/// Distance from a segment to a filled polygon: zero when they overlap.
template <typename Scalar>
Scalar segment_polygon_distance(const Vec2<Scalar>& a, const Vec2<Scalar>& b,
                                const std::vector<Vec2<Scalar>>& poly) {
  if (point_in_polygon(a, poly) || point_in_polygon(b, poly)) return Scalar(0);
  Scalar best = std::numeric_limits<Scalar>::infinity();
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, segment_segment_distance(a, b, poly[i], poly[(i + 1) % n]));
    if (best == Scalar(0)) break;
  }
  return best;
}

/// Intersection of the infinite lines p1 + s*d1 and p2 + t*d2. Returns false
/// when the lines are parallel to within `eps` (relative to |d1||d2|).
template <typename Scalar>
bool line_intersection(const Vec2<Scalar>& p1, const Vec2<Scalar>& d1, const Vec2<Scalar>& p2,
                       const Vec2<Scalar>& d2, Vec2<Scalar>& out,
                       Scalar eps = Scalar(1e-12)) {
  const Scalar denom = cross<Scalar>(d1, d2);
  if (std::abs(denom) <= eps * d1.norm() * d2.norm()) return false;
  const Scalar s = cross<Scalar>(p2 - p1, d2) / denom;
  out = p1 + s * d1;
  return true;
}

template <typename Scalar>
Scalar polyline_length(const std::vector<Vec2<Scalar>>& pts) {
  Scalar len = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) len += (pts[i] - pts[i - 1]).norm();
  return len;
}

}  // namespace prrtc
