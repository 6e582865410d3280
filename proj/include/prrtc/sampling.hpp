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

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "prrtc/geometry.hpp"
#include "prrtc/world.hpp"

namespace prrtc {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one engine draw. Unlike
/// std::uniform_real_distribution this is identical across standard libraries.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Position probability map: a normalized weight per grid cell, sampled by
/// inverse CDF. Cells are stored row-major (index = iy * nx + ix).
class PositionProbabilityMap {
 public:
  /// Wraps explicit non-negative weights (normalized on construction). The
  /// sampled region is the full grid.
  static PositionProbabilityMap from_weights(const Point2& origin, double cell_size, int nx,
                                             int ny, const Eigen::VectorXd& weights);

  const Point2& origin() const { return origin_; }
  double cell_size() const { return cell_size_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int cell_count() const { return nx_ * ny_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  const Eigen::VectorXd& cumulative() const { return cumulative_; }
  double weight(int ix, int iy) const { return weights_[iy * nx_ + ix]; }

  /// Flat index of the cell containing `p` (clamped to the grid).
  int cell_index(const Point2& p) const;
  Point2 cell_center(int index) const;

  /// Draws a point: a cell by inverse CDF, then uniformly within the cell
  /// (clipped to the map extent).
  Point2 sample(Rng& rng) const;

  /// Weight grid as CSV: ny rows of nx comma-separated values.
  void write_csv(std::ostream& os) const;

 private:
  friend PositionProbabilityMap generate_ppm(const Point2&, double, double, const Bounds&,
                                             const std::vector<Obstacle>&, double);
  PositionProbabilityMap(const Point2& origin, double cell_size, int nx, int ny,
                         const Point2& extent_max, Eigen::VectorXd raw);

  Point2 origin_;
  double cell_size_;
  int nx_;
  int ny_;
  Point2 extent_max_;
  Eigen::VectorXd weights_;
  Eigen::VectorXd cumulative_;
};

/// Goal-biased map over `bounds`: each free cell gets 1 + lambda * exp(-d^2 / (2 (sigma D)^2))
/// with d the cell-center distance to the goal and D the bounds diagonal; cells whose
/// centers fall inside an obstacle get zero. Throws when no free cell remains.
PositionProbabilityMap generate_ppm(const Point2& goal, double lambda, double sigma,
                                    const Bounds& bounds, const std::vector<Obstacle>& obstacles,
                                    double cell_size);

inline Point2 sample(const PositionProbabilityMap& ppm, Rng& rng) { return ppm.sample(rng); }

}  // namespace prrtc
