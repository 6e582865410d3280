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
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "prrtc/harness.hpp"
#include "prrtc/scenario_io.hpp"

namespace prrtc {

namespace {

// World meters to SVG pixels, y pointing up.
class Canvas {
 public:
  Canvas(const Bounds& b, double scale) : b_(b), scale_(scale) {}

  std::string x(double wx) const { return num((wx - b_.xmin) * scale_); }
  std::string y(double wy) const { return num((b_.ymax - wy) * scale_); }
  std::string len(double meters) const { return num(meters * scale_); }

  std::string points(const Polyline& pts) const {
    std::string out;
    for (const auto& p : pts) {
      if (!out.empty()) out += ' ';
      out += x(p.x()) + ',' + y(p.y());
    }
    return out;
  }

  std::string circle(const Point2& c, double r, const char* cls) const {
    return "<circle class=\"" + std::string(cls) + "\" cx=\"" + x(c.x()) + "\" cy=\"" +
           y(c.y()) + "\" r=\"" + len(r) + "\"/>\n";
  }

  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
  }

 private:
  Bounds b_;
  double scale_;
};

}  // namespace

std::string render_svg(const Scenario& scenario, const PlanResult& plan,
                       const Trajectory* trajectory, const RenderOptions& options) {
  if (!(options.pixels_per_meter > 0)) throw std::invalid_argument("render: scale must be > 0");
  const Canvas c(scenario.bounds, options.pixels_per_meter);
  const double hw = scenario.ego.half_width();
  std::ostringstream os;

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.len(scenario.bounds.width())
     << "\" height=\"" << c.len(scenario.bounds.height()) << "\">\n"
     << "<style>"
     << ".bounds{fill:#ffffff;stroke:#333333;stroke-width:1}"
     << ".lane{fill:none;stroke:#bbbbbb;stroke-width:1;stroke-dasharray:6 4}"
     << ".obstacle{fill:#888888;stroke:#222222;stroke-width:1}"
     << ".outline-point{fill:#444444}"
     << ".interest-point{fill:#d62728}"
     << ".safety-circle{fill:none;stroke:#d62728;stroke-width:0.8;stroke-opacity:0.6}"
     << ".tree path{fill:none;stroke:#1f77b4;stroke-width:0.6;stroke-opacity:0.7}"
     << ".goal-marker{fill:#ff7f0e;stroke:#000000;stroke-width:0.8}"
     << ".smooth-path{fill:none;stroke:#2ca02c;stroke-width:2}"
     << ".trajectory{fill:none;stroke:#9467bd;stroke-width:1.2;stroke-dasharray:3 2}"
     << ".start{fill:#2ca02c}.goal{fill:#d62728}"
     << "</style>\n";

  const Bounds& b = scenario.bounds;
  os << "<g id=\"bounds\">\n<rect class=\"bounds\" x=\"0.00\" y=\"0.00\" width=\""
     << c.len(b.width()) << "\" height=\"" << c.len(b.height()) << "\"/>\n</g>\n";

  os << "<g id=\"lanes\">\n";
  for (const auto& lane : scenario.lanes) {
    os << "<polyline class=\"lane\" points=\"" << c.points(lane) << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g id=\"obstacles\">\n";
  for (const auto& o : scenario.obstacles) {
    os << "<polygon class=\"obstacle\" data-id=\"" << o.id << "\" data-kind=\""
       << to_string(o.kind) << "\" points=\"" << c.points(o.outline) << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g id=\"outline-points\">\n";
  for (const auto& o : scenario.obstacles) {
    for (const auto& p : discretize_outline(o, options.outline_spacing)) {
      os << c.circle(p, 0.08, "outline-point");
    }
  }
  os << "</g>\n";

  os << "<g id=\"safety-circles\">\n";
  for (const auto id : plan.hindering_ids) {
    const Obstacle* o = find_obstacle(scenario.obstacles, id);
    if (!o) continue;
    for (const auto& p : interest_points(*o, options.outline_spacing, hw)) {
      os << c.circle(p, scenario.ego.width, "safety-circle");
      os << c.circle(p, 0.15, "interest-point");
    }
  }
  os << "</g>\n";

  os << "<g id=\"trees\">\n";
  for (const auto& tree : plan.trees) {
    os << "<g class=\"tree\"><path d=\"";
    bool first = true;
    for (const auto& n : tree.nodes()) {
      if (!n.parent) continue;
      const auto& p = tree.node(*n.parent).state;
      if (!first) os << ' ';
      first = false;
      os << 'M' << c.x(p.px) << ',' << c.y(p.py) << 'L' << c.x(n.state.px) << ','
         << c.y(n.state.py);
    }
    os << "\"/></g>\n";
  }
  os << "</g>\n";

  os << "<g id=\"intermediate-goals\">\n";
  for (const auto& g : plan.goals_used) os << c.circle(g, 0.5, "goal-marker");
  os << "</g>\n";

  os << "<g id=\"path\">\n";
  if (!plan.path.empty()) {
    os << "<polyline class=\"smooth-path\" points=\"" << c.points(plan.path.samples) << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g id=\"trajectory\">\n";
  if (trajectory && !trajectory->empty()) {
    Polyline pts;
    pts.reserve(trajectory->size());
    for (const auto& r : *trajectory) pts.push_back(r.state.position());
    os << "<polyline class=\"trajectory\" points=\"" << c.points(pts) << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g id=\"endpoints\">\n"
     << c.circle(scenario.start.position(), 0.6, "start") << c.circle(scenario.goal, 0.6, "goal")
     << "</g>\n</svg>\n";
  return os.str();
}

void render_svg(const Scenario& scenario, const PlanResult& plan, const Trajectory* trajectory,
                const std::filesystem::path& path, const RenderOptions& options) {
  write_text_file(path, render_svg(scenario, plan, trajectory, options));
}

}  // namespace prrtc
