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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "prrtc/connect.hpp"
#include "prrtc/tracking.hpp"
#include "prrtc/world.hpp"

namespace prrtc {

enum class Method { rrt, prrt, prrt_connect };

const char* to_string(Method method);
Method method_from_string(const std::string& name);
/// Comma-separated list, e.g. "rrt,prrt,prrt_connect". Duplicates are rejected.
std::vector<Method> parse_methods(const std::string& list);

/// Tunables shared by the CLI subcommands.
struct RunSettings {
  ConnectParams planner;
  MpcParams mpc;
  double stanley_gain = 2.5;
};

/// Settings with the planner goal radius and MPC speed cap taken from the scenario's ego.
RunSettings settings_for(const Scenario& scenario);

/// Applies one "key=value" override. Keys: lambda, sigma, N, extension_horizon, dt,
/// goal_radius, cell_size, count_rejected, outline_spacing, max_depth, Np, Nc,
/// mpc_dt, w1, w2, w3, v_max, stanley_gain. Throws std::invalid_argument.
void apply_override(RunSettings& settings, const std::string& key_value);

struct BenchmarkConfig {
  std::filesystem::path scenario_path;
  std::vector<Method> methods{Method::rrt, Method::prrt, Method::prrt_connect};
  int trials = 100;
  std::uint64_t base_seed = 0;
  // rrt runs these with lambda forced to 0; prrt and prrt_connect use them as given.
  ConnectParams params;
};

/// Planner parameters a method runs with.
PlannerParams method_params(Method method, const ConnectParams& params);

struct TrialResult {
  Method method = Method::rrt;
  int trial = 0;
  bool success = false;
  long iterations = 0;  // counted on failures too
  double ms = 0.0;
};

struct MethodStats {
  Method method = Method::rrt;
  int trials = 0;
  int successes = 0;
  // Over successful trials only; NaN when there are none.
  double mean_iterations = 0.0;
  double std_iterations = 0.0;  // sample standard deviation
  double mean_ms = 0.0;
  double success_rate() const { return trials > 0 ? double(successes) / trials : 0.0; }
};

struct BenchmarkStats {
  std::vector<MethodStats> methods;  // in config order
  std::vector<TrialResult> trials;   // method-major, then trial index
};

/// Trial k seeds every method with base_seed + k. rrt and prrt plan with all
/// obstacles known in one tree; prrt_connect runs the tree-repair planner.
BenchmarkStats run_benchmark(const BenchmarkConfig& config);
BenchmarkStats run_benchmark(const Scenario& scenario, const BenchmarkConfig& config);

/// Columns: method,mean_iters,std_iters,success_rate,mean_ms. Wall time varies
/// between runs, so mean_ms is left blank unless `with_timing` is set.
void write_stats_csv(std::ostream& os, const BenchmarkStats& stats, bool with_timing = false);
void write_trials_csv(std::ostream& os, const BenchmarkStats& stats, bool with_timing = false);

/// Header t,px,py,psi,v,delta,v_cmd then one row per record with 6 decimals.
/// Throws std::invalid_argument on an empty trajectory, std::runtime_error on I/O failure.
void export_trajectory_csv(const Trajectory& trajectory, const std::filesystem::path& path);
Trajectory read_trajectory_csv(const std::filesystem::path& path);

struct RenderOptions {
  double outline_spacing = 0.3;
  double pixels_per_meter = 10.0;
};

/// SVG layers, back to front: bounds, lanes, obstacles, outline points, interest
/// points with safety circles (hindering obstacles), trees (one <g class="tree">
/// each), intermediate goals, smoothed path, trajectory, start and goal.
std::string render_svg(const Scenario& scenario, const PlanResult& plan,
                       const Trajectory* trajectory = nullptr, const RenderOptions& options = {});
void render_svg(const Scenario& scenario, const PlanResult& plan, const Trajectory* trajectory,
                const std::filesystem::path& path, const RenderOptions& options = {});

}  // namespace prrtc
