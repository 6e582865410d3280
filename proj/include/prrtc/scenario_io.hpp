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

#include <filesystem>
#include <string>

#include "prrtc/connect.hpp"
#include "prrtc/world.hpp"

namespace prrtc {

// Scenario files are JSON:
//   { "bounds": {"xmin", "ymin", "xmax", "ymax"},
//     "start": {"x", "y", "psi", "v"}, "goal": {"x", "y"},
//     "ego": {"width", "wheelbase", "v_max", "delta_max", "goal_radius"},
//     "obstacles": [{"id", "kind", "outline": [[x, y], ...]}],
//     "lanes": [[[x, y], ...], ...] }
// "ego" and "lanes" are optional; missing ego fields take EgoParams defaults.

/// Parses and validates a scenario. Throws std::invalid_argument on bad input.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::filesystem::path& path);
std::string scenario_to_json(const Scenario& scenario);

/// Plan results round-trip through JSON so they can be rendered later.
std::string plan_to_json(const PlanResult& result);
PlanResult parse_plan(const std::string& json_text);
PlanResult load_plan(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace prrtc
