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

#include "prrtc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace prrtc {

PositionProbabilityMap::PositionProbabilityMap(const Point2& origin, double cell_size, int nx,
                                               int ny, const Point2& extent_max,
                                               Eigen::VectorXd raw)
    : origin_(origin),
      cell_size_(cell_size),
      nx_(nx),
      ny_(ny),
      extent_max_(extent_max),
      weights_(std::move(raw)) {
  if (!(cell_size > 0) || nx < 1 || ny < 1) {
    throw std::invalid_argument("PositionProbabilityMap: invalid grid");
  }
  if (weights_.size() != static_cast<Eigen::Index>(nx) * ny) {
    throw std::invalid_argument("PositionProbabilityMap: weight count does not match grid");
  }
  if ((weights_.array() < 0).any() || !weights_.allFinite()) {
    throw std::invalid_argument("PositionProbabilityMap: weights must be finite and >= 0");
  }
  const double total = weights_.sum();
  if (!(total > 0)) throw std::invalid_argument("PositionProbabilityMap: no free space");
  weights_ /= total;

  cumulative_.resize(weights_.size());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    acc += weights_[i];
    cumulative_[i] = std::min(acc, 1.0);
  }
  // Pin the tail to exactly 1 so every draw in [0, 1) lands on a cell; trailing
  // zero-weight cells keep their (equal) predecessor value and are never chosen.
  Eigen::Index last = weights_.size() - 1;
  while (last > 0 && weights_[last] == 0.0) --last;
  for (Eigen::Index i = last; i < cumulative_.size(); ++i) cumulative_[i] = 1.0;
}

PositionProbabilityMap PositionProbabilityMap::from_weights(const Point2& origin,
                                                            double cell_size, int nx, int ny,
                                                            const Eigen::VectorXd& weights) {
  const Point2 extent = origin + Point2(nx * cell_size, ny * cell_size);
  return PositionProbabilityMap(origin, cell_size, nx, ny, extent, weights);
}

int PositionProbabilityMap::cell_index(const Point2& p) const {
  const int ix = std::clamp(static_cast<int>(std::floor((p.x() - origin_.x()) / cell_size_)), 0,
                            nx_ - 1);
  const int iy = std::clamp(static_cast<int>(std::floor((p.y() - origin_.y()) / cell_size_)), 0,
                            ny_ - 1);
  return iy * nx_ + ix;
}

Point2 PositionProbabilityMap::cell_center(int index) const {
  const int ix = index % nx_;
  const int iy = index / nx_;
  const double x0 = origin_.x() + ix * cell_size_;
  const double y0 = origin_.y() + iy * cell_size_;
  const double x1 = std::min(x0 + cell_size_, extent_max_.x());
  const double y1 = std::min(y0 + cell_size_, extent_max_.y());
  return {0.5 * (x0 + x1), 0.5 * (y0 + y1)};
}

Point2 PositionProbabilityMap::sample(Rng& rng) const {
  const double u = uniform01(rng);
  const auto* begin = cumulative_.data();
  const auto* end = begin + cumulative_.size();
  const auto index = static_cast<int>(std::upper_bound(begin, end, u) - begin);
  const int ix = index % nx_;
  const int iy = index / nx_;
  const double x0 = origin_.x() + ix * cell_size_;
  const double y0 = origin_.y() + iy * cell_size_;
  const double w = std::min(x0 + cell_size_, extent_max_.x()) - x0;
  const double h = std::min(y0 + cell_size_, extent_max_.y()) - y0;
  const double fx = uniform01(rng);
  const double fy = uniform01(rng);
  return {x0 + fx * w, y0 + fy * h};
}

void PositionProbabilityMap::write_csv(std::ostream& os) const {
  char buf[32];
  for (int iy = 0; iy < ny_; ++iy) {
    for (int ix = 0; ix < nx_; ++ix) {
      std::snprintf(buf, sizeof(buf), "%.9e", weight(ix, iy));
      if (ix > 0) os << ',';
      os << buf;
    }
    os << '\n';
  }
}

PositionProbabilityMap generate_ppm(const Point2& goal, double lambda, double sigma,
                                    const Bounds& bounds, const std::vector<Obstacle>& obstacles,
                                    double cell_size) {
  if (!(cell_size > 0)) throw std::invalid_argument("generate_ppm: cell_size must be > 0");
  if (!(lambda >= 0)) throw std::invalid_argument("generate_ppm: lambda must be >= 0");
  if (!(sigma > 0)) throw std::invalid_argument("generate_ppm: sigma must be > 0");
  if (!bounds.contains(goal)) throw std::invalid_argument("generate_ppm: goal outside bounds");

  const int nx = std::max(1, static_cast<int>(std::ceil(bounds.width() / cell_size - 1e-9)));
  const int ny = std::max(1, static_cast<int>(std::ceil(bounds.height() / cell_size - 1e-9)));
  const Point2 origin(bounds.xmin, bounds.ymin);
  const Point2 extent(bounds.xmax, bounds.ymax);
  const double spread = sigma * bounds.diagonal();
  const double inv_two_var = 1.0 / (2.0 * spread * spread);

  Eigen::VectorXd raw(static_cast<Eigen::Index>(nx) * ny);
  for (int iy = 0; iy < ny; ++iy) {
    const double y0 = origin.y() + iy * cell_size;
    const double cy = 0.5 * (y0 + std::min(y0 + cell_size, extent.y()));
    for (int ix = 0; ix < nx; ++ix) {
      const double x0 = origin.x() + ix * cell_size;
      const double cx = 0.5 * (x0 + std::min(x0 + cell_size, extent.x()));
      const Point2 c(cx, cy);
      bool occupied = false;
      for (const auto& o : obstacles) {
        if (point_in_polygon(c, o.outline)) {
          occupied = true;
          break;
        }
      }
      raw[iy * nx + ix] =
          occupied ? 0.0 : 1.0 + lambda * std::exp(-(c - goal).squaredNorm() * inv_two_var);
    }
  }
  if (!(raw.sum() > 0)) throw std::invalid_argument("generate_ppm: no free space");
  return PositionProbabilityMap(origin, cell_size, nx, ny, extent, std::move(raw));
}

}  // namespace prrtc
