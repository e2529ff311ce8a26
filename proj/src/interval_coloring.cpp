#include "epg/interval_coloring.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace epg {

int final_color(PathColor c) noexcept {
  return 1 + (c.h == SegColor::b ? 2 : 0) + (c.v == SegColor::b ? 1 : 0);
}

std::string to_string(PathColor c) {
  return {c.h == SegColor::a ? 'a' : 'b', c.v == SegColor::a ? 'a' : 'b'};
}

namespace {

bool peo_less(const LineEntry& x, const LineEntry& y) {
  return std::tie(x.hi, x.lo, x.id) < std::tie(y.hi, y.lo, y.id);
}

}  // namespace

std::vector<LineEntry> peo_order(const LineInstance& line) {
  std::vector<LineEntry> out = line.entries;
  std::sort(out.begin(), out.end(), peo_less);
  return out;
}

std::vector<SegColor> color_in_peo(std::span<const LineEntry> ordered) {
  std::vector<SegColor> colors(ordered.size(), SegColor::a);
  if (ordered.empty()) return colors;
  // Every already colored entry j has hi_j >= hi_i, so it overlaps entry i
  // exactly when lo_j < hi_i. Tracking the smallest lo among b entries
  // answers "does i have a b neighbor" in O(1).
  Coord min_b_lo = std::numeric_limits<Coord>::max();
  for (std::size_t k = ordered.size() - 1; k-- > 0;) {
    if (min_b_lo >= ordered[k].hi) {
      colors[k] = SegColor::b;
      min_b_lo = std::min(min_b_lo, ordered[k].lo);
    }
  }
  return colors;
}

std::map<PathId, SegColor> color_line(const LineInstance& line) {
  const auto ordered = peo_order(line);
  const auto colors = color_in_peo(ordered);
  std::map<PathId, SegColor> out;
  for (std::size_t k = 0; k < ordered.size(); ++k) out[ordered[k].id] = colors[k];
  return out;
}

namespace {

struct Keyed {
  Orientation orientation;
  Coord line;
  LineEntry entry;
};

std::vector<Keyed> collect_sorted(const EpgRepresentation& repr) {
  std::vector<Keyed> all;
  all.reserve(repr.paths.size() * 2);
  for (std::size_t i = 0; i < repr.paths.size(); ++i) {
    const EpgPath& p = repr.paths[i];
    for (auto o : {Orientation::H, Orientation::V}) {
      if (auto s = p.segment(o)) all.push_back({o, s->line, {p.id(), s->lo, s->hi, i}});
    }
  }
  std::sort(all.begin(), all.end(), [](const Keyed& x, const Keyed& y) {
    if (x.orientation != y.orientation) return x.orientation < y.orientation;
    if (x.line != y.line) return x.line < y.line;
    return peo_less(x.entry, y.entry);
  });
  return all;
}

template <class Fn>
void for_each_line(const std::vector<Keyed>& all, Fn&& fn) {
  std::vector<LineEntry> group;
  std::size_t i = 0;
  while (i < all.size()) {
    group.clear();
    std::size_t j = i;
    while (j < all.size() && all[j].orientation == all[i].orientation && all[j].line == all[i].line)
      group.push_back(all[j++].entry);
    fn(all[i].orientation, all[i].line, std::span<const LineEntry>(group));
    i = j;
  }
}

}  // namespace

std::vector<LineInstance> line_instances(const EpgRepresentation& repr) {
  std::vector<LineInstance> out;
  for_each_line(collect_sorted(repr), [&](Orientation o, Coord line, std::span<const LineEntry> g) {
    out.push_back({o, line, {g.begin(), g.end()}});
  });
  return out;
}

std::vector<PathColor> base_coloring(const EpgRepresentation& repr) {
  std::vector<PathColor> colors(repr.paths.size(), kAA);
  for_each_line(collect_sorted(repr), [&](Orientation o, Coord, std::span<const LineEntry> g) {
    const auto seg = color_in_peo(g);
    for (std::size_t k = 0; k < g.size(); ++k) {
      PathColor& c = colors[g[k].path];
      (o == Orientation::H ? c.h : c.v) = seg[k];
    }
  });
  return colors;
}

}  // namespace epg
