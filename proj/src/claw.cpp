#include "epg/claw.hpp"

#include <algorithm>
#include <stdexcept>

namespace epg {

std::string to_string(DirectionSet s) {
  std::string out;
  for (Direction d : s.to_vector()) out += to_char(d);
  return out;
}

std::vector<std::uint32_t> paths_through(const RepresentationIndex& index, GridPoint x,
                                         Direction stem) {
  const auto pair = perpendicular(stem);
  const auto a = index.cover.paths_on(edge_at(x, pair[0]));
  const auto b = index.cover.paths_on(edge_at(x, pair[1]));
  std::vector<std::uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

bool holds_edge(const EpgPath& p, const std::optional<GridEdge>& e) {
  if (!e) return false;
  const auto s = p.segment(e->orientation);
  if (!s) return false;
  const Coord line = e->orientation == Orientation::H ? e->anchor.row : e->anchor.col;
  const Coord pos = e->orientation == Orientation::H ? e->anchor.col : e->anchor.row;
  return s->line == line && s->lo <= pos && pos < s->hi;
}

}  // namespace

std::vector<std::uint32_t> paths_with_two_edges(const RepresentationIndex& index, GridPoint x,
                                                Direction stem) {
  std::vector<std::uint32_t> out = paths_through(index, x, stem);
  if (const ShapeBuckets* b = index.buckets_at(x)) {
    for (Shape s : shapes_with(stem)) {
      const auto& list = (*b)[static_cast<int>(s)];
      out.insert(out.end(), list.begin(), list.end());
    }
  }
  std::sort(out.begin(), out.end());
  const auto triple = claw_triple(stem);
  for (std::uint32_t i : out) {
    int held = 0;
    for (Direction d : triple) held += holds_edge(index.path(i), edge_at(x, d));
    if (held != 2)
      throw std::logic_error("path " + std::to_string(index.path(i).id()) + " holds " +
                             std::to_string(held) + " edges of the claw triple at " + to_string(x));
  }
  return out;
}

bool is_missing(const RepresentationIndex& index, GridPoint x, Shape shape, const ColorView& colors) {
  const ShapeBuckets* b = index.buckets_at(x);
  if (!b) return true;
  const auto& list = (*b)[static_cast<int>(shape)];
  if (list.empty()) return true;
  return std::any_of(list.begin(), list.end(), [&](std::uint32_t i) { return !colors(i).is_aa(); });
}

DirectionSet hot_stems(const RepresentationIndex& index, GridPoint x, const ColorView& colors) {
  DirectionSet hot;
  const ShapeBuckets* b = index.buckets_at(x);
  if (!b) return hot;
  const auto all_aa = [&](const auto& list) {
    return std::all_of(list.begin(), list.end(), [&](std::uint32_t i) { return colors(i).is_aa(); });
  };
  for (Direction d : kDirections) {
    const auto [s1, s2] = shapes_with(d);
    const auto& l1 = (*b)[static_cast<int>(s1)];
    const auto& l2 = (*b)[static_cast<int>(s2)];
    if (l1.empty() || l2.empty() || !all_aa(l1) || !all_aa(l2)) continue;
    const auto through = paths_through(index, x, d);
    if (!through.empty() && all_aa(through)) hot.insert(d);
  }
  return hot;
}

bool is_maximal_clique(const IntersectionGraph& graph, std::span<const std::uint32_t> members) {
  if (members.empty()) return graph.vertex_count() == 0;
  const auto pivot = *std::min_element(members.begin(), members.end(), [&](auto u, auto v) {
    return graph.neighbors(u).size() < graph.neighbors(v).size();
  });
  for (std::uint32_t w : graph.neighbors(pivot)) {
    if (std::find(members.begin(), members.end(), w) != members.end()) continue;
    if (std::all_of(members.begin(), members.end(),
                    [&](std::uint32_t m) { return m == w || graph.adjacent(m, w); }))
      return false;
  }
  return true;
}

DirectionSet exact_mono_claws(const RepresentationIndex& index, const IntersectionGraph& graph,
                              GridPoint x, const ColorView& colors) {
  DirectionSet exact;
  const DirectionSet hot = hot_stems(index, x, colors);
  for (Direction d : hot.to_vector()) {
    const auto members = paths_with_two_edges(index, x, d);
    if (members.size() >= 2 && is_maximal_clique(graph, members)) exact.insert(d);
  }
  return exact;
}

}  // namespace epg
