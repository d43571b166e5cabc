#pragma once

#include <algorithm>
#include <span>
#include <sstream>
#include <string>

#include "mra/errors.hpp"
#include "mra/grid_map.hpp"
#include "mra/plan_types.hpp"

namespace mra::io {

/// SVG overlay of a 2D query: obstacles in black, expanded states as red
/// dots, the solution as a blue polyline, start as a square and goal as a
/// circle. One SVG unit per fine cell.
inline std::string render_svg(const GridMap& map, Cell start, Cell goal, std::span<const Cell> path,
                              std::span<const Expansion> expanded)
{
  if (map.dims() != 2) throw InputError("SVG rendering needs a 2D map");
  const int w = map.width();
  const int h = map.height();
  const double scale = std::max(1.0, 800.0 / std::max(w, h));

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * scale << "\" height=\""
      << h * scale << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  svg << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  svg << "<g fill=\"black\">\n";
  for (int y = 0; y < h; ++y) {
    int x = 0;
    while (x < w) {
      if (!map.blocked({x, y, 0})) {
        ++x;
        continue;
      }
      const int run_start = x;
      while (x < w && map.blocked({x, y, 0})) ++x;
      svg << "<rect x=\"" << run_start << "\" y=\"" << y << "\" width=\"" << x - run_start
          << "\" height=\"1\"/>\n";
    }
  }
  svg << "</g>\n<g fill=\"red\">\n";
  for (const auto& e : expanded)
    svg << "<circle cx=\"" << e.cell.x + 0.5 << "\" cy=\"" << e.cell.y + 0.5 << "\" r=\"0.3\"/>\n";
  svg << "</g>\n";
  if (!path.empty()) {
    svg << "<polyline fill=\"none\" stroke=\"blue\" stroke-width=\"0.4\" points=\"";
    for (std::size_t i = 0; i < path.size(); ++i)
      svg << (i ? " " : "") << path[i].x + 0.5 << ',' << path[i].y + 0.5;
    svg << "\"/>\n";
  }
  svg << "<rect x=\"" << start.x << "\" y=\"" << start.y
      << "\" width=\"1\" height=\"1\" fill=\"green\"/>\n";
  svg << "<circle cx=\"" << goal.x + 0.5 << "\" cy=\"" << goal.y + 0.5
      << "\" r=\"0.7\" fill=\"orange\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

} // namespace mra::io
