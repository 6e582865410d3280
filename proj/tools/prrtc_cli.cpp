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

// prrtc: plan, track, benchmark and render from the command line.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prrtc/harness.hpp"
#include "prrtc/scenario_io.hpp"

namespace fs = std::filesystem;
using namespace prrtc;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitPlanningFailed = 2;
constexpr int kExitTrackingFailed = 3;

struct Common {
  std::string scenario;
  std::vector<std::string> params;
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--scenario", common.scenario, "scenario JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--param", common.params, "parameter override key=value (repeatable)");
}

RunSettings load_settings(const Scenario& scenario, const Common& common) {
  RunSettings settings = settings_for(scenario);
  for (const auto& kv : common.params) apply_override(settings, kv);
  return settings;
}

void write_path_csv(const SmoothPath& path, const fs::path& file) {
  std::ostringstream os;
  os << "s,x,y,curvature\n";
  char buf[160];
  for (std::size_t i = 0; i < path.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,%.6f\n", path.arc_length[i],
                  path.samples[i].x(), path.samples[i].y(), path.curvature[i]);
    os << buf;
  }
  write_text_file(file, os.str());
}

void report(const std::string& what) { std::cerr << "prrtc: " << what << '\n'; }

int run_plan(const Common& common, std::uint64_t seed, const fs::path& out, bool with_track) {
  const Scenario scenario = load_scenario(common.scenario);
  const RunSettings settings = load_settings(scenario, common);
  fs::create_directories(out);
  Rng rng(seed);
  PlanResult result;
  try {
    result = plan(scenario, settings.planner, rng);
  } catch (const PlanningError& e) {
    report(std::string("planning failed: ") + e.what());
    return kExitPlanningFailed;
  }
  write_text_file(out / "plan.json", plan_to_json(result));
  write_path_csv(result.path, out / "path.csv");
  std::cout << "iterations " << result.total_iterations << ", hindering obstacles "
            << result.hindering_ids.size() << ", path length " << result.path.length()
            << " m\n";
  if (!with_track) return 0;

  const TrackResult tracked =
      track(result.path, scenario.start, scenario.ego, settings.mpc, settings.stanley_gain);
  export_trajectory_csv(tracked.trajectory, out / "trajectory.csv");
  const auto& last = tracked.trajectory.back();
  std::cout << "tracked " << tracked.trajectory.size() << " steps, t = " << last.t << " s\n";
  if (!tracked.reached) {
    report("tracking stopped at the time cap before reaching the path end");
    return kExitTrackingFailed;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goal-biased RRT planning with tree repair, smoothing and tracking"};
  app.require_subcommand(1);

  Common plan_common;
  std::uint64_t plan_seed = 0;
  std::string plan_out;
  auto* plan_cmd = app.add_subcommand("plan", "plan a path and write plan.json and path.csv");
  add_common(plan_cmd, plan_common);
  plan_cmd->add_option("--seed", plan_seed, "random seed");
  plan_cmd->add_option("--out", plan_out, "output directory")->required();

  Common track_common;
  std::uint64_t track_seed = 0;
  std::string track_out;
  auto* track_cmd = app.add_subcommand("track", "plan, then track the path; adds trajectory.csv");
  add_common(track_cmd, track_common);
  track_cmd->add_option("--seed", track_seed, "random seed");
  track_cmd->add_option("--out", track_out, "output directory")->required();

  Common bench_common;
  int trials = 100;
  std::uint64_t bench_seed = 0;
  std::string methods = "rrt,prrt,prrt_connect";
  std::string bench_out;
  bool timing = false;
  auto* bench_cmd = app.add_subcommand("bench", "compare planners over paired-seed trials");
  add_common(bench_cmd, bench_common);
  bench_cmd->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_seed, "base seed; trial k uses seed + k");
  bench_cmd->add_option("--methods", methods, "comma-separated subset of rrt,prrt,prrt_connect");
  bench_cmd->add_option("--out", bench_out, "output directory")->required();
  bench_cmd->add_flag("--timing", timing, "fill mean_ms in stats.csv (not reproducible)");

  Common render_common;
  std::string render_plan;
  std::string render_traj;
  std::string render_out;
  auto* render_cmd = app.add_subcommand("render", "draw a scenario and plan as SVG");
  add_common(render_cmd, render_common);
  render_cmd->add_option("--plan", render_plan, "plan.json from `plan`")
      ->required()
      ->check(CLI::ExistingFile);
  render_cmd->add_option("--trajectory", render_traj, "trajectory CSV to overlay")
      ->check(CLI::ExistingFile);
  render_cmd->add_option("--out", render_out, "output SVG file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*plan_cmd) return run_plan(plan_common, plan_seed, plan_out, false);
    if (*track_cmd) return run_plan(track_common, track_seed, track_out, true);
    if (*bench_cmd) {
      const Scenario scenario = load_scenario(bench_common.scenario);
      const RunSettings settings = load_settings(scenario, bench_common);
      BenchmarkConfig config;
      config.scenario_path = bench_common.scenario;
      config.methods = parse_methods(methods);
      config.trials = trials;
      config.base_seed = bench_seed;
      config.params = settings.planner;
      const BenchmarkStats stats = run_benchmark(scenario, config);
      fs::create_directories(bench_out);
      std::ostringstream csv;
      write_stats_csv(csv, stats, timing);
      write_text_file(fs::path(bench_out) / "stats.csv", csv.str());
      std::ostringstream per_trial;
      write_trials_csv(per_trial, stats, timing);
      write_text_file(fs::path(bench_out) / "trials.csv", per_trial.str());
      std::ostringstream times;
      write_stats_csv(times, stats, true);
      write_text_file(fs::path(bench_out) / "timing.csv", times.str());
      std::cout << csv.str();
      return 0;
    }
    if (*render_cmd) {
      const Scenario scenario = load_scenario(render_common.scenario);
      const RunSettings settings = load_settings(scenario, render_common);
      const PlanResult result = load_plan(render_plan);
      std::optional<Trajectory> trajectory;
      if (!render_traj.empty()) trajectory = read_trajectory_csv(render_traj);
      RenderOptions options;
      options.outline_spacing = settings.planner.outline_spacing;
      render_svg(scenario, result, trajectory ? &*trajectory : nullptr, render_out, options);
      return 0;
    }
  } catch (const std::exception& e) {
    report(e.what());
    return kExitFailure;
  }
  return kExitFailure;
}
