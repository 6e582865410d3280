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

#include "prrtc/scenario_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace prrtc {

using nlohmann::json;

namespace {

Point2 point_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [x, y] pair");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json point_to(const Point2& p) { return json::array({p.x(), p.y()}); }

Polyline polyline_from(const json& j) {
  Polyline out;
  for (const auto& p : j) out.push_back(point_from(p));
  return out;
}

json polyline_to(const Polyline& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(point_to(p));
  return out;
}

json state_to(const VehicleState& s) {
  return {{"x", s.px}, {"y", s.py}, {"psi", s.psi}, {"v", s.v}};
}

VehicleState state_from(const json& j) {
  return {j.at("x").get<double>(), j.at("y").get<double>(), j.value("psi", 0.0),
          j.value("v", 0.0)};
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  Scenario s;
  try {
    const json j = json::parse(json_text);
    s.name = j.value("name", std::string{});
    const auto& b = j.at("bounds");
    s.bounds = {b.at("xmin").get<double>(), b.at("ymin").get<double>(),
                b.at("xmax").get<double>(), b.at("ymax").get<double>()};
    s.start = state_from(j.at("start"));
    s.goal = {j.at("goal").at("x").get<double>(), j.at("goal").at("y").get<double>()};
    if (j.contains("ego")) {
      const auto& e = j.at("ego");
      s.ego.width = e.value("width", s.ego.width);
      s.ego.wheelbase = e.value("wheelbase", s.ego.wheelbase);
      s.ego.v_max = e.value("v_max", s.ego.v_max);
      s.ego.delta_max = e.value("delta_max", s.ego.delta_max);
      s.ego.goal_radius = e.value("goal_radius", s.ego.goal_radius);
    }
    for (const auto& o : j.at("obstacles")) {
      s.obstacles.push_back({o.at("id").get<int>(), polyline_from(o.at("outline")),
                             obstacle_kind_from_string(o.value("kind", std::string("other")))});
    }
    if (j.contains("lanes")) {
      for (const auto& lane : j.at("lanes")) s.lanes.push_back(polyline_from(lane));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("scenario: ") + e.what());
  }
  validate_scenario(s);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  return parse_scenario(read_text_file(path));
}

std::string scenario_to_json(const Scenario& s) {
  json j;
  if (!s.name.empty()) j["name"] = s.name;
  j["bounds"] = {{"xmin", s.bounds.xmin}, {"ymin", s.bounds.ymin},
                 {"xmax", s.bounds.xmax}, {"ymax", s.bounds.ymax}};
  j["start"] = state_to(s.start);
  j["goal"] = {{"x", s.goal.x()}, {"y", s.goal.y()}};
  j["ego"] = {{"width", s.ego.width},
              {"wheelbase", s.ego.wheelbase},
              {"v_max", s.ego.v_max},
              {"delta_max", s.ego.delta_max},
              {"goal_radius", s.ego.goal_radius}};
  j["obstacles"] = json::array();
  for (const auto& o : s.obstacles) {
    j["obstacles"].push_back(
        {{"id", o.id}, {"kind", to_string(o.kind)}, {"outline", polyline_to(o.outline)}});
  }
  if (!s.lanes.empty()) {
    j["lanes"] = json::array();
    for (const auto& lane : s.lanes) j["lanes"].push_back(polyline_to(lane));
  }
  return j.dump(2) + "\n";
}

std::string plan_to_json(const PlanResult& r) {
  json j;
  j["total_iterations"] = r.total_iterations;
  j["hindering_ids"] = r.hindering_ids;
  j["goals_used"] = polyline_to(r.goals_used);
  j["path"] = polyline_to(r.path.samples);
  j["segments"] = json::array();
  for (const auto& seg : r.segments) j["segments"].push_back(polyline_to(seg));
  j["trees"] = json::array();
  for (const auto& tree : r.trees) {
    json nodes = json::array();
    for (const auto& n : tree.nodes()) {
      nodes.push_back({{"id", n.id},
                       {"parent", n.parent ? json(*n.parent) : json(nullptr)},
                       {"state", state_to(n.state)},
                       {"control", {{"delta", n.control.delta}, {"v_cmd", n.control.v_cmd}}}});
    }
    j["trees"].push_back({{"nodes", std::move(nodes)}});
  }
  return j.dump(1) + "\n";
}

PlanResult parse_plan(const std::string& json_text) {
  PlanResult r;
  try {
    const json j = json::parse(json_text);
    r.total_iterations = j.at("total_iterations").get<long>();
    r.hindering_ids = j.at("hindering_ids").get<std::vector<ObstacleId>>();
    r.goals_used = polyline_from(j.at("goals_used"));
    r.path = SmoothPath::from_samples(polyline_from(j.at("path")));
    for (const auto& seg : j.value("segments", json::array())) {
      r.segments.push_back(polyline_from(seg));
    }
    for (const auto& t : j.at("trees")) {
      const auto& nodes = t.at("nodes");
      if (nodes.empty()) throw std::invalid_argument("plan: tree without nodes");
      Tree tree(state_from(nodes.at(0).at("state")));
      for (std::size_t i = 1; i < nodes.size(); ++i) {
        const auto& n = nodes[i];
        const auto& c = n.at("control");
        tree.add(state_from(n.at("state")),
                 {c.at("delta").get<double>(), c.at("v_cmd").get<double>()},
                 n.at("parent").get<NodeId>());
      }
      r.trees.push_back(std::move(tree));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("plan: ") + e.what());
  }
  return r;
}

PlanResult load_plan(const std::filesystem::path& path) { return parse_plan(read_text_file(path)); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace prrtc
