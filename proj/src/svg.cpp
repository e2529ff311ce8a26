#include "epg/svg.hpp"

#include <algorithm>
#include <sstream>

#include "epg/graph.hpp"

namespace epg {

namespace {

constexpr double kCell = 40.0;
constexpr double kMargin = 30.0;
constexpr double kLane = 5.0;
constexpr const char* kPalette[] = {"#555555", "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728"};

// Greedy lane per path so that paths sharing a grid edge never share a lane.
std::vector<int> assign_lanes(const EpgRepresentation& repr) {
  const IntersectionGraph g = derive_graph(repr);
  std::vector<int> lane(repr.paths.size(), -1);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<bool> used;
    for (std::uint32_t u : g.neighbors(v)) {
      if (lane[u] < 0) continue;
      if (std::size_t(lane[u]) >= used.size()) used.resize(lane[u] + 1, false);
      used[lane[u]] = true;
    }
    lane[v] = int(std::find(used.begin(), used.end(), false) - used.begin());
  }
  return lane;
}

}  // namespace

std::string render_svg(const EpgRepresentation& repr, std::span<const int> colors) {
  const GridSize grid = effective_grid(repr);
  const std::vector<int> lanes = assign_lanes(repr);
  const double width = 2 * kMargin + (grid.width - 1) * kCell;
  const double height = 2 * kMargin + (grid.height - 1) * kCell;
  auto px = [&](double col) { return kMargin + col * kCell; };
  auto py = [&](double row) { return height - kMargin - row * kCell; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g class=\"grid\" stroke=\"#dddddd\">\n";
  for (Coord c = 0; c < grid.width; ++c)
    out << "<line x1=\"" << px(c) << "\" y1=\"" << py(0) << "\" x2=\"" << px(c) << "\" y2=\""
        << py(grid.height - 1) << "\"/>\n";
  for (Coord r = 0; r < grid.height; ++r)
    out << "<line x1=\"" << px(0) << "\" y1=\"" << py(r) << "\" x2=\"" << px(grid.width - 1)
        << "\" y2=\"" << py(r) << "\"/>\n";
  out << "</g>\n<g class=\"paths\" fill=\"none\" stroke-width=\"3\" stroke-linecap=\"round\">\n";

  for (std::size_t i = 0; i < repr.paths.size(); ++i) {
    const EpgPath& p = repr.paths[i];
    const double off = lanes[i] * kLane;
    std::vector<std::pair<double, double>> pts;
    if (p.is_bend()) {
      pts = {{double(p.h_end()), double(p.corner().row)},
             {double(p.corner().col), double(p.corner().row)},
             {double(p.corner().col), double(p.v_end())}};
    } else if (p.kind() == PathKind::H) {
      const Segment s = *p.horizontal_segment();
      pts = {{double(s.lo), double(s.line)}, {double(s.hi), double(s.line)}};
    } else {
      const Segment s = *p.vertical_segment();
      pts = {{double(s.line), double(s.lo)}, {double(s.line), double(s.hi)}};
    }
    const int color = i < colors.size() && colors[i] >= 1 && colors[i] <= 4 ? colors[i] : 0;
    out << "<polyline class=\"path\" data-id=\"" << p.id() << "\" stroke=\"" << kPalette[color]
        << "\" points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k)
      out << (k ? " " : "") << px(pts[k].first) + off << ',' << py(pts[k].second) - off;
    out << "\"><title>path " << p.id();
    if (color) out << " color " << color;
    out << "</title></polyline>\n";
  }
  out << "</g>\n<g class=\"bends\" fill=\"black\">\n";
  for (std::size_t i = 0; i < repr.paths.size(); ++i) {
    const EpgPath& p = repr.paths[i];
    if (!p.is_bend()) continue;
    out << "<circle cx=\"" << px(p.corner().col) << "\" cy=\"" << py(p.corner().row) << "\" r=\"3\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace epg
