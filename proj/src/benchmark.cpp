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

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "prrtc/harness.hpp"
#include "prrtc/rrt.hpp"
#include "prrtc/sampling.hpp"
#include "prrtc/scenario_io.hpp"

namespace prrtc {

const char* to_string(Method method) {
  switch (method) {
    case Method::rrt: return "rrt";
    case Method::prrt: return "prrt";
    case Method::prrt_connect: return "prrt_connect";
  }
  return "?";
}

Method method_from_string(const std::string& name) {
  if (name == "rrt") return Method::rrt;
  if (name == "prrt") return Method::prrt;
  if (name == "prrt_connect") return Method::prrt_connect;
  throw std::invalid_argument("unknown method '" + name + "'");
}

std::vector<Method> parse_methods(const std::string& list) {
  std::vector<Method> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Method m = method_from_string(item);
    if (std::find(out.begin(), out.end(), m) != out.end()) {
      throw std::invalid_argument("method '" + item + "' listed twice");
    }
    out.push_back(m);
  }
  if (out.empty()) throw std::invalid_argument("no methods given");
  return out;
}

RunSettings settings_for(const Scenario& scenario) {
  RunSettings s;
  s.planner.rrt.goal_radius = scenario.ego.goal_radius;
  s.mpc.v_max = scenario.ego.v_max;
  return s;
}

namespace {

double parse_double(const std::string& key, const std::string& text) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value)) {
    throw std::invalid_argument("parameter " + key + ": '" + text + "' is not a number");
  }
  return value;
}

int parse_int(const std::string& key, const std::string& text) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw std::invalid_argument("parameter " + key + ": '" + text + "' is not an integer");
  }
  return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "1" || text == "true") return true;
  if (text == "0" || text == "false") return false;
  throw std::invalid_argument("parameter " + key + ": '" + text + "' is not a boolean");
}

}  // namespace

void apply_override(RunSettings& s, const std::string& key_value) {
  const auto eq = key_value.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw std::invalid_argument("expected key=value, got '" + key_value + "'");
  }
  const std::string key = key_value.substr(0, eq);
  const std::string value = key_value.substr(eq + 1);
  auto num = [&] { return parse_double(key, value); };
  auto positive = [&] {
    const double v = num();
    if (!(v > 0)) throw std::invalid_argument("parameter " + key + " must be > 0");
    return v;
  };
  auto count = [&] {
    const int v = parse_int(key, value);
    if (v < 1) throw std::invalid_argument("parameter " + key + " must be >= 1");
    return v;
  };

  const std::map<std::string, std::function<void()>> setters{
      {"lambda", [&] {
         const double v = num();
         if (v < 0) throw std::invalid_argument("parameter lambda must be >= 0");
         s.planner.rrt.lambda = v;
       }},
      {"sigma", [&] { s.planner.rrt.sigma = positive(); }},
      {"N", [&] { s.planner.rrt.max_iterations = count(); }},
      {"extension_horizon", [&] { s.planner.rrt.extension_horizon = positive(); }},
      {"dt", [&] { s.planner.rrt.dt = positive(); }},
      {"goal_radius", [&] { s.planner.rrt.goal_radius = positive(); }},
      {"cell_size", [&] { s.planner.rrt.cell_size = positive(); }},
      {"count_rejected", [&] { s.planner.rrt.count_rejected = parse_bool(key, value); }},
      {"outline_spacing", [&] { s.planner.outline_spacing = positive(); }},
      {"max_depth", [&] { s.planner.max_depth = count(); }},
      {"Np", [&] { s.mpc.prediction_horizon = count(); }},
      {"Nc", [&] { s.mpc.control_horizon = count(); }},
      {"mpc_dt", [&] { s.mpc.dt = positive(); }},
      {"w1", [&] { s.mpc.w_position = num(); }},
      {"w2", [&] { s.mpc.w_curvature = num(); }},
      {"w3", [&] { s.mpc.w_speed = num(); }},
      {"v_max", [&] { s.mpc.v_max = positive(); }},
      {"stanley_gain", [&] { s.stanley_gain = positive(); }},
  };
  const auto it = setters.find(key);
  if (it == setters.end()) throw std::invalid_argument("unknown parameter '" + key + "'");
  it->second();
}

PlannerParams method_params(Method method, const ConnectParams& params) {
  PlannerParams p = params.rrt;
  if (method == Method::rrt) p.lambda = 0.0;
  return p;
}

BenchmarkStats run_benchmark(const BenchmarkConfig& config) {
  return run_benchmark(load_scenario(config.scenario_path), config);
}

BenchmarkStats run_benchmark(const Scenario& scenario, const BenchmarkConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("benchmark: trials must be >= 1");
  if (config.methods.empty()) throw std::invalid_argument("benchmark: no methods");
  validate_scenario(scenario);

  using Clock = std::chrono::steady_clock;
  BenchmarkStats stats;
  for (const Method method : config.methods) {
    const PlannerParams params = method_params(method, config.params);
    std::optional<PositionProbabilityMap> ppm;
    std::optional<PlanningContext> ctx;
    if (method != Method::prrt_connect) {
      ppm = generate_ppm(scenario.goal, params.lambda, params.sigma, scenario.bounds,
                         scenario.obstacles, params.cell_size);
      ctx = PlanningContext::make(scenario.bounds, scenario.obstacles, scenario.ego);
    }
    ConnectParams connect_params = config.params;
    connect_params.rrt = params;

    MethodStats row;
    row.method = method;
    row.trials = config.trials;
    std::vector<double> iters;
    std::vector<double> times;
    for (int k = 0; k < config.trials; ++k) {
      Rng rng(config.base_seed + static_cast<std::uint64_t>(k));
      TrialResult trial;
      trial.method = method;
      trial.trial = k;
      const auto t0 = Clock::now();
      if (method == Method::prrt_connect) {
        try {
          const PlanResult r = plan(scenario, connect_params, rng);
          trial.success = true;
          trial.iterations = r.total_iterations;
        } catch (const PlanningError& e) {
          trial.iterations = e.iterations();
        }
      } else {
        const RrtResult r = prrt(scenario.start, scenario.goal, *ppm, params, *ctx, rng);
        trial.success = r.reached();
        trial.iterations = r.iterations;
      }
      trial.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      if (trial.success) {
        iters.push_back(static_cast<double>(trial.iterations));
        times.push_back(trial.ms);
      }
      stats.trials.push_back(trial);
    }

    row.successes = static_cast<int>(iters.size());
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.mean_iterations = row.std_iterations = row.mean_ms = nan;
    if (!iters.empty()) {
      const double n = static_cast<double>(iters.size());
      double sum = 0.0;
      for (double v : iters) sum += v;
      row.mean_iterations = sum / n;
      double ss = 0.0;
      for (double v : iters) ss += (v - row.mean_iterations) * (v - row.mean_iterations);
      row.std_iterations = iters.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
      double tsum = 0.0;
      for (double v : times) tsum += v;
      row.mean_ms = tsum / n;
    }
    stats.methods.push_back(row);
  }
  return stats;
}

namespace {

std::string fixed(double v, int decimals) {
  if (!std::isfinite(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

void write_stats_csv(std::ostream& os, const BenchmarkStats& stats, bool with_timing) {
  os << "method,mean_iters,std_iters,success_rate,mean_ms\n";
  for (const auto& m : stats.methods) {
    os << to_string(m.method) << ',' << fixed(m.mean_iterations, 3) << ','
       << fixed(m.std_iterations, 3) << ',' << fixed(m.success_rate(), 4) << ','
       << (with_timing ? fixed(m.mean_ms, 3) : std::string()) << '\n';
  }
}

void write_trials_csv(std::ostream& os, const BenchmarkStats& stats, bool with_timing) {
  os << "method,trial,success,iterations,ms\n";
  for (const auto& t : stats.trials) {
    os << to_string(t.method) << ',' << t.trial << ',' << (t.success ? 1 : 0) << ','
       << t.iterations << ',' << (with_timing ? fixed(t.ms, 3) : std::string()) << '\n';
  }
}

}  // namespace prrtc
