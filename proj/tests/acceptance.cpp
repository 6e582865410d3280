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

// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: prrtc_acceptance [path/to/prrtc] [work_dir]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "prrtc/bezier.hpp"
#include "prrtc/connect.hpp"
#include "prrtc/harness.hpp"
#include "prrtc/sampling.hpp"
#include "prrtc/scenario_io.hpp"
#include "prrtc/tracking.hpp"
#include "prrtc/vehicle.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using namespace prrtc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// 1. Benchmark ordering on the comparison scenario.
Outcome benchmark_ordering() {
  BenchmarkConfig config;
  config.scenario_path = test::scenario_path("comparison");
  config.trials = 100;
  config.base_seed = 0;
  const auto t0 = std::chrono::steady_clock::now();
  const BenchmarkStats stats = run_benchmark(config);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double mean[3] = {NAN, NAN, NAN};
  for (const auto& m : stats.methods) mean[static_cast<int>(m.method)] = m.mean_iterations;
  const double rrt = mean[0], prrt = mean[1], conn = mean[2];
  const bool ok = conn < prrt && prrt < rrt && conn < 0.6 * rrt && secs < 120.0;
  std::ostringstream os;
  os << "mean iterations rrt " << fmt("%.1f", rrt) << ", prrt " << fmt("%.1f", prrt)
     << ", prrt_connect " << fmt("%.1f", conn) << " (ratio to rrt " << fmt("%.3f", conn / rrt)
     << ", limit 0.6), " << fmt("%.1f", secs) << " s (limit 120 s)";
  return {ok, os.str()};
}

// 2. Tangent residuals and the symmetric intermediate goals.
Outcome tangent_geometry() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  std::uniform_real_distribution<double> ur(0.01, 10.0);
  double worst_radius = 0.0, worst_perp = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Point2 o(u(rng), u(rng));
    const double r = ur(rng);
    Point2 p(u(rng), u(rng));
    while ((p - o).norm() <= 1.01 * r) p = Point2(u(rng), u(rng));
    const auto t = tangent_points(p, o, r);
    for (const Point2& T : {t.right, t.left}) {
      worst_radius = std::max(worst_radius, std::abs((T - o).norm() - r));
      worst_perp = std::max(worst_perp, std::abs((T - p).dot(T - o)));
    }
  }
  const auto g = intermediate_goals({-2, 0}, {2, 0}, {{0, 0}, 1.0});
  const double y = 2.0 / std::sqrt(3.0);
  const Point2 up(0, y), down(0, -y);
  const double goal_err = std::min(std::max((g.g1 - up).norm(), (g.g2 - down).norm()),
                                   std::max((g.g1 - down).norm(), (g.g2 - up).norm()));
  const bool ok = worst_radius < 1e-9 && worst_perp < 1e-9 && goal_err < 1e-9;
  std::ostringstream os;
  os << "max radius residual " << fmt("%.2e", worst_radius) << ", max perpendicularity residual "
     << fmt("%.2e", worst_perp) << ", symmetric goals error " << fmt("%.2e", goal_err)
     << " (limit 1e-9)";
  return {ok, os.str()};
}

// 3. Bernstein partition of unity, endpoint interpolation, convex hull containment.
Outcome bernstein_bezier() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst_sum = 0.0;
  for (int n = 0; n <= 20; ++n) {
    for (int k = 0; k < 100; ++k) {
      const double t = u01(rng);
      double sum = 0.0;
      for (int i = 0; i <= n; ++i) sum += bernstein(n, i, t);
      worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
    }
  }
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  int endpoint_misses = 0, hull_misses = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Polyline ctrl(3 + trial % 23);
    for (auto& c : ctrl) c = Point2(u(rng), u(rng));
    const SmoothPath p = bezier_path(ctrl, 80);
    endpoint_misses += p.samples.front() != ctrl.front() || p.samples.back() != ctrl.back();
    const Polyline hull = test::convex_hull(ctrl);
    for (const auto& s : p.samples) hull_misses += !test::inside_hull(s, hull, 1e-9);
  }
  const bool ok = worst_sum < 1e-12 && endpoint_misses == 0 && hull_misses == 0;
  std::ostringstream os;
  os << "max |sum - 1| " << fmt("%.2e", worst_sum) << " (limit 1e-12), endpoint misses "
     << endpoint_misses << ", hull violations " << hull_misses << " over 100 polygons";
  return {ok, os.str()};
}

// 4. Constant-steering bicycle integration against the analytic circle.
Outcome bicycle_circle() {
  EgoParams ego;
  ego.wheelbase = 2.7;
  const double delta = 0.2;
  const double radius = ego.wheelbase / std::tan(delta);
  const Point2 center(0.0, radius);
  VehicleState s{0, 0, 0, 2};
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    s = step(s, {delta, 2.0}, 0.01, ego);
    worst = std::max(worst, std::abs((s.position() - center).norm() - radius) / radius);
  }
  return {worst < 0.01, "radius " + fmt("%.4f", radius) + " m, max relative deviation " +
                            fmt("%.2e", worst) + " (limit 1e-2)"};
}

// 5. Smoothed path clearance on every bundled scenario.
Outcome safety_margin() {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(PRRTC_SCENARIO_DIR)) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  bool ok = !files.empty();
  std::ostringstream os;
  for (const auto& f : files) {
    const Scenario s = load_scenario(f);
    const RunSettings settings = settings_for(s);
    double worst = INFINITY;
    int failures = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(seed);
      try {
        const PlanResult r = plan(s, settings.planner, rng);
        worst = std::min(worst, test::sampled_clearance(r.path.samples, s.obstacles, 0.1));
      } catch (const PlanningError&) {
        ++failures;
      }
    }
    const bool good = failures == 0 && worst >= s.ego.half_width();
    ok = ok && good;
    os << (os.tellp() > 0 ? ", " : "") << s.name << " min clearance " << fmt("%.3f", worst)
       << " m";
    if (failures > 0) os << " (" << failures << " planning failures)";
  }
  os << " (need >= W/2 of each ego, 10 seeds each, 0.1 m sampling)";
  return {ok, os.str()};
}

// 6. Uniform sampler passes chi-square; peaked map has its maximum at the goal cell.
Outcome sampler_degeneration() {
  const Bounds b{0, 0, 10, 10};
  const auto uniform = generate_ppm({5, 5}, 0.0, 0.05, b, {}, 1.0);
  Rng rng(6);
  const int draws = 100000;
  std::vector<int> counts(uniform.cell_count(), 0);
  for (int i = 0; i < draws; ++i) ++counts[uniform.cell_index(uniform.sample(rng))];
  const double expected = static_cast<double>(draws) / counts.size();
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;

  const Point2 goal(7.6, 3.2);
  const auto peaked = generate_ppm(goal, 1e3, 0.05, b, {}, 1.0);
  Eigen::Index best = 0;
  peaked.weights().maxCoeff(&best);
  const bool ok = counts.size() == 100 && chi2 < test::kChiSquare99At001 &&
                  best == peaked.cell_index(goal);
  std::ostringstream os;
  os << "chi-square " << fmt("%.2f", chi2) << " (critical " << test::kChiSquare99At001
     << ", 99 dof), max weight cell " << best << " vs goal cell " << peaked.cell_index(goal);
  return {ok, os.str()};
}

// 7. Scalar MPC closed form and monotonicity in w2, w3.
Outcome mpc_scalar() {
  auto scalar = [](double w1, double w2, double w3, double vmax) {
    MpcParams p;
    p.prediction_horizon = p.control_horizon = 1;
    p.w_position = w1;
    p.w_curvature = w2;
    p.w_speed = w3;
    p.v_max = vmax;
    return p;
  };
  const double v_star =
      solve_speed_profile(Eigen::VectorXd::Constant(1, 1.0), 0.0, scalar(0, 1, 1, 4))[0];
  const double oracle = 1.0 * 4.0 / (1.0 * 1.0 + 1.0);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const MpcParams p = scalar(2.0 * u(rng), 2.0 * u(rng), 0.05 + u(rng), 1.0 + 4.0 * u(rng));
    const Eigen::VectorXd K = Eigen::VectorXd::Constant(1, u(rng));
    const double v_ref = p.v_max * u(rng);
    const double base = solve_speed_profile(K, v_ref, p)[0];
    MpcParams w3_up = p;
    w3_up.w_speed *= 1.0 + 2.0 * u(rng);
    MpcParams w2_up = p;
    w2_up.w_curvature *= 1.0 + 2.0 * u(rng);
    violations += solve_speed_profile(K, v_ref, w3_up)[0] < base - 1e-9;
    violations += solve_speed_profile(K, v_ref, w2_up)[0] > base + 1e-9;
  }
  const bool ok = std::abs(v_star - oracle) < 1e-6 && violations == 0;
  return {ok, "v* " + fmt("%.9f", v_star) + " vs 2 (limit 1e-6), monotonicity violations " +
                  std::to_string(violations) + " over 100 random configurations"};
}

double replay_error(const Trajectory& traj, const EgoParams& ego, double dt) {
  double worst = 0.0;
  VehicleState s = traj.front().state;
  for (std::size_t k = 1; k < traj.size(); ++k) {
    s = step(s, traj[k].control, dt, ego);
    const VehicleState& r = traj[k].state;
    worst = std::max({worst, std::abs(s.px - r.px), std::abs(s.py - r.py),
                      std::abs(s.psi - r.psi), std::abs(s.v - r.v)});
  }
  return worst;
}

// 8. Straight-line tracking accuracy and trajectory replay.
Outcome closed_loop_tracking() {
  const EgoParams ego;
  Polyline pts;
  for (int i = 0; i <= 250; ++i) pts.emplace_back(0.2 * i, 0.0);
  const SmoothPath line = SmoothPath::from_samples(pts);
  const MpcParams mpc;
  const TrackResult r = track(line, {0, 0, 0, 0}, ego, mpc, 2.5);
  double cross_track = 0.0;
  for (const auto& rec : r.trajectory) cross_track = std::max(cross_track, std::abs(rec.state.py));
  double replay = replay_error(r.trajectory, ego, mpc.dt);

  // Replay also on a tracked plan with turns.
  const Scenario s = load_scenario(test::scenario_path("left_turn"));
  Rng rng(8);
  const PlanResult planned = plan(s, settings_for(s).planner, rng);
  const TrackResult turned = track(planned.path, s.start, s.ego, settings_for(s).mpc, 2.5);
  replay = std::max(replay, replay_error(turned.trajectory, s.ego, mpc.dt));

  const bool ok = r.reached && turned.reached && cross_track < 0.1 && replay <= 1e-9;
  std::ostringstream os;
  os << "50 m line reached " << (r.reached ? "yes" : "no") << ", max cross-track "
     << fmt("%.4f", cross_track) << " m (limit 0.1), replay error " << fmt("%.2e", replay)
     << " (limit 1e-9)";
  return {ok, os.str()};
}

int run(const std::string& command) { return std::system(command.c_str()); }

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

// 9. Byte-identical bench stats and renders.
Outcome determinism(const fs::path& cli, const fs::path& work) {
  fs::remove_all(work);
  fs::create_directories(work);
  const fs::path scenario = test::scenario_path("comparison");
  bool ran = true;
  for (const char* tag : {"a", "b"}) {
    ran = ran && run(q(cli) + " bench --scenario " + q(scenario) + " --trials 100 --seed 17 --out " +
                     q(work / (std::string("bench_") + tag)) + " > " +
                     q(work / (std::string("bench_") + tag + ".log"))) == 0;
  }
  const fs::path left = test::scenario_path("left_turn");
  ran = ran && run(q(cli) + " track --scenario " + q(left) + " --seed 3 --out " +
                   q(work / "track") + " > " + q(work / "track.log")) == 0;
  for (const char* tag : {"a", "b"}) {
    ran = ran && run(q(cli) + " render --scenario " + q(left) + " --plan " +
                     q(work / "track" / "plan.json") + " --trajectory " +
                     q(work / "track" / "trajectory.csv") + " --out " +
                     q(work / (std::string("render_") + tag + ".svg"))) == 0;
  }
  if (!ran) return {false, "a CLI invocation failed (see " + work.string() + ")"};
  const std::string stats_a = read_text_file(work / "bench_a" / "stats.csv");
  const std::string stats_b = read_text_file(work / "bench_b" / "stats.csv");
  const std::string svg_a = read_text_file(work / "render_a.svg");
  const std::string svg_b = read_text_file(work / "render_b.svg");
  const bool ok = !stats_a.empty() && stats_a == stats_b && !svg_a.empty() && svg_a == svg_b;
  std::ostringstream os;
  os << "stats.csv " << (stats_a == stats_b ? "identical" : "differs") << " (" << stats_a.size()
     << " bytes), render " << (svg_a == svg_b ? "identical" : "differs") << " (" << svg_a.size()
     << " bytes)";
  return {ok, os.str()};
}

// Library-level fallback when no CLI path is given.
Outcome determinism_in_process() {
  BenchmarkConfig config;
  config.scenario_path = test::scenario_path("comparison");
  config.base_seed = 17;
  std::ostringstream a, b;
  write_stats_csv(a, run_benchmark(config));
  write_stats_csv(b, run_benchmark(config));
  const Scenario s = load_scenario(test::scenario_path("left_turn"));
  Rng rng(3);
  const PlanResult r = plan(s, settings_for(s).planner, rng);
  const bool ok = a.str() == b.str() && render_svg(s, r) == render_svg(s, r);
  return {ok, std::string("in-process stats and render ") + (ok ? "identical" : "differ")};
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path cli = argc > 1 ? fs::path(argv[1]) : fs::path();
  const fs::path work =
      argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "prrtc_acceptance";

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"benchmark ordering", benchmark_ordering},
      {"tangent geometry", tangent_geometry},
      {"Bernstein and Bezier", bernstein_bezier},
      {"bicycle circle", bicycle_circle},
      {"safety margin", safety_margin},
      {"sampler degeneration", sampler_degeneration},
      {"MPC scalar oracle", mpc_scalar},
      {"closed-loop tracking", closed_loop_tracking},
      {"determinism", [&] { return cli.empty() ? determinism_in_process() : determinism(cli, work); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
