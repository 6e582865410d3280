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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "prrtc/harness.hpp"

namespace prrtc {

namespace {

constexpr const char* kTrajectoryHeader = "t,px,py,psi,v,delta,v_cmd";

}  // namespace

void export_trajectory_csv(const Trajectory& trajectory, const std::filesystem::path& path) {
  if (trajectory.empty()) throw std::invalid_argument("export_trajectory_csv: empty trajectory");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << kTrajectoryHeader << '\n';
  char buf[256];
  for (const auto& r : trajectory) {
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", r.t, r.state.px,
                  r.state.py, r.state.psi, r.state.v, r.control.delta, r.control.v_cmd);
    out << buf;
  }
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Trajectory read_trajectory_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kTrajectoryHeader) {
    throw std::invalid_argument(path.string() + ": missing trajectory header");
  }
  Trajectory out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    TrajectoryRecord r;
    char tail = 0;
    const int n = std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf,%lf%c", &r.t, &r.state.px,
                              &r.state.py, &r.state.psi, &r.state.v, &r.control.delta,
                              &r.control.v_cmd, &tail);
    if (n != 7) throw std::invalid_argument(path.string() + ": malformed row '" + line + "'");
    out.push_back(r);
  }
  return out;
}

}  // namespace prrtc
