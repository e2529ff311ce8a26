#pragma once

// 2-clique coloring of the segments lying on one grid line, treated as an
// interval graph, and the per-path (horizontal, vertical) color pairs built
// from it.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "epg/grid.hpp"

namespace epg {

enum class SegColor : std::uint8_t { a, b };

struct PathColor {
  SegColor h = SegColor::a;  // row component; a when the path has no horizontal segment
  SegColor v = SegColor::a;  // column component; a when the path has no vertical segment

  bool is_aa() const noexcept { return h == SegColor::a && v == SegColor::a; }
  SegColor component(Orientation o) const noexcept { return o == Orientation::H ? h : v; }
  friend bool operator==(const PathColor&, const PathColor&) = default;
};

inline constexpr PathColor kAA{SegColor::a, SegColor::a};
inline constexpr PathColor kAB{SegColor::a, SegColor::b};
inline constexpr PathColor kBA{SegColor::b, SegColor::a};
inline constexpr PathColor kBB{SegColor::b, SegColor::b};

/// (a,a)->1, (a,b)->2, (b,a)->3, (b,b)->4.
int final_color(PathColor c) noexcept;
/// "aa", "ab", "ba" or "bb".
std::string to_string(PathColor c);

struct LineEntry {
  PathId id = 0;
  Coord lo = 0;
  Coord hi = 0;
  std::size_t path = 0;  // index into repr.paths; unused for standalone lines
  friend bool operator==(const LineEntry&, const LineEntry&) = default;
};

struct LineInstance {
  Orientation orientation = Orientation::H;
  Coord line = 0;
  std::vector<LineEntry> entries;
};

/// Sorted by hi, then lo, then id. For intervals this is a perfect
/// elimination ordering: the later neighbors of each entry pairwise overlap.
std::vector<LineEntry> peo_order(const LineInstance& line);

/// Colors entries given in perfect elimination order, scanning from the last
/// one: the last gets a, every other entry gets b exactly when none of its
/// already colored neighbors got b. Returned colors are parallel to `ordered`.
std::vector<SegColor> color_in_peo(std::span<const LineEntry> ordered);

std::map<PathId, SegColor> color_line(const LineInstance& line);

/// All lines of the representation that carry at least one segment.
std::vector<LineInstance> line_instances(const EpgRepresentation& repr);

/// Base color pair of every path, parallel to repr.paths.
std::vector<PathColor> base_coloring(const EpgRepresentation& repr);

}  // namespace epg

namespace epg {

/// A pending color change for one path.
struct Recoloring {
  std::size_t path = 0;  // index into repr.paths
  PathColor color;
  friend bool operator==(const Recoloring&, const Recoloring&) = default;
};

/// Read-only view of a coloring with an optional small overlay of pending
/// changes, so a point's plan can be checked without copying the coloring.
class ColorView {
 public:
  ColorView(std::span<const PathColor> base, std::span<const Recoloring> overlay = {}) noexcept
      : base_(base), overlay_(overlay) {}
  ColorView(const std::vector<PathColor>& base) noexcept : base_(base) {}

  PathColor operator()(std::size_t path) const noexcept {
    for (const Recoloring& r : overlay_)
      if (r.path == path) return r.color;
    return base_[path];
  }

 private:
  std::span<const PathColor> base_;
  std::span<const Recoloring> overlay_;
};

}  // namespace epg
