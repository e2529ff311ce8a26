#pragma once

// Data model for single-bend paths on a rectangular grid.
//
// Coordinates: columns grow east, rows grow north. A grid edge is identified
// by its orientation and its west/south endpoint. A segment on a grid line is
// the half-open interval [lo, hi) of edge anchors, so two segments on the same
// line share a grid edge exactly when max(lo, lo') < min(hi, hi').

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace epg {

using PathId = std::int64_t;
using Coord = std::int32_t;

enum class Orientation : std::uint8_t { H, V };

struct GridPoint {
  Coord col = 0;
  Coord row = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  // Row-major, column fastest.
  friend std::strong_ordering operator<=>(const GridPoint& a, const GridPoint& b) {
    if (auto c = a.row <=> b.row; c != 0) return c;
    return a.col <=> b.col;
  }
};

struct GridSize {
  Coord width = 0;   // number of point columns, cols 0 .. width-1
  Coord height = 0;  // number of point rows, rows 0 .. height-1
  friend bool operator==(const GridSize&, const GridSize&) = default;
};

struct GridEdge {
  Orientation orientation = Orientation::H;
  GridPoint anchor;  // H spans anchor -> (col+1,row); V spans anchor -> (col,row+1)

  friend bool operator==(const GridEdge&, const GridEdge&) = default;
  friend auto operator<=>(const GridEdge& a, const GridEdge& b) {
    return a.key() <=> b.key();
  }

  /// Dense 63-bit encoding, ordered H before V, then row-major.
  std::uint64_t key() const noexcept {
    return (std::uint64_t(orientation == Orientation::V) << 62) |
           (std::uint64_t(std::uint32_t(anchor.row)) << 31) |
           std::uint64_t(std::uint32_t(anchor.col));
  }
};

struct Segment {
  Orientation orientation = Orientation::H;
  Coord line = 0;  // row for H, column for V
  Coord lo = 0;
  Coord hi = 0;

  Coord length() const noexcept { return hi - lo; }
  bool overlaps(const Segment& o) const noexcept {
    return orientation == o.orientation && line == o.line && std::max(lo, o.lo) < std::min(hi, o.hi);
  }
  bool contains(const Segment& o) const noexcept {
    return orientation == o.orientation && line == o.line && lo <= o.lo && o.hi <= hi;
  }
  /// True when both grid edges incident to the interior point `pos` lie in the segment.
  bool passes_through(Coord pos) const noexcept { return lo < pos && pos < hi; }
  GridEdge edge(Coord anchor) const noexcept {
    return orientation == Orientation::H ? GridEdge{Orientation::H, {anchor, line}}
                                         : GridEdge{Orientation::V, {line, anchor}};
  }

  friend bool operator==(const Segment&, const Segment&) = default;
};

enum class Direction : std::uint8_t { N, E, S, W };
inline constexpr std::array<Direction, 4> kDirections{Direction::N, Direction::E, Direction::S,
                                                       Direction::W};

// The two edge directions leaving a bend point: NE = vertical part goes
// north, horizontal part goes east.
enum class Shape : std::uint8_t { NE, NW, SE, SW };
inline constexpr std::array<Shape, 4> kShapes{Shape::NE, Shape::NW, Shape::SE, Shape::SW};

constexpr bool is_vertical(Direction d) noexcept { return d == Direction::N || d == Direction::S; }

constexpr Direction opposite(Direction d) noexcept {
  switch (d) {
    case Direction::N: return Direction::S;
    case Direction::E: return Direction::W;
    case Direction::S: return Direction::N;
    case Direction::W: return Direction::E;
  }
  return d;
}

constexpr Direction vertical_direction(Shape s) noexcept {
  return (s == Shape::NE || s == Shape::NW) ? Direction::N : Direction::S;
}
constexpr Direction horizontal_direction(Shape s) noexcept {
  return (s == Shape::NE || s == Shape::SE) ? Direction::E : Direction::W;
}

constexpr Shape shape_of(Direction vertical, Direction horizontal) noexcept {
  if (vertical == Direction::N) return horizontal == Direction::E ? Shape::NE : Shape::NW;
  return horizontal == Direction::E ? Shape::SE : Shape::SW;
}

constexpr Shape antipode(Shape s) noexcept {
  return shape_of(opposite(vertical_direction(s)), opposite(horizontal_direction(s)));
}

constexpr bool has_direction(Shape s, Direction d) noexcept {
  return vertical_direction(s) == d || horizontal_direction(s) == d;
}

/// The two directions perpendicular to `d`.
constexpr std::array<Direction, 2> perpendicular(Direction d) noexcept {
  return is_vertical(d) ? std::array{Direction::E, Direction::W}
                        : std::array{Direction::N, Direction::S};
}

/// The two bend shapes that contain `d`.
constexpr std::array<Shape, 2> shapes_with(Direction d) noexcept {
  const auto p = perpendicular(d);
  return is_vertical(d) ? std::array{shape_of(d, p[0]), shape_of(d, p[1])}
                        : std::array{shape_of(p[0], d), shape_of(p[1], d)};
}

/// The grid edge leaving `x` in direction `d`, if it has non-negative coordinates.
std::optional<GridEdge> edge_at(GridPoint x, Direction d) noexcept;

char to_char(Direction d) noexcept;
const char* to_string(Shape s) noexcept;
std::string to_string(GridPoint p);
std::string to_string(const GridEdge& e);

enum class PathKind : std::uint8_t { H, V, Bend };

class EpgPath {
 public:
  EpgPath() = default;

  static EpgPath horizontal(PathId id, Coord row, Coord c1, Coord c2);
  static EpgPath vertical(PathId id, Coord col, Coord r1, Coord r2);
  static EpgPath bent(PathId id, GridPoint corner, Coord h_end, Coord v_end);

  PathId id() const noexcept { return id_; }
  PathKind kind() const noexcept { return kind_; }
  bool is_bend() const noexcept { return kind_ == PathKind::Bend; }

  // Bend accessors; only meaningful when is_bend().
  GridPoint corner() const noexcept { return corner_; }
  Coord h_end() const noexcept { return h_end_; }
  Coord v_end() const noexcept { return v_end_; }
  Shape shape() const noexcept;
  /// Number of edges of the bend path's segment leaving the corner in `d`
  /// (0 if the shape does not contain `d`).
  Coord arm_length(Direction d) const noexcept;

  std::optional<Segment> horizontal_segment() const noexcept;
  std::optional<Segment> vertical_segment() const noexcept;
  std::optional<Segment> segment(Orientation o) const noexcept {
    return o == Orientation::H ? horizontal_segment() : vertical_segment();
  }

  friend bool operator==(const EpgPath&, const EpgPath&) = default;

 private:
  PathId id_ = 0;
  PathKind kind_ = PathKind::H;
  Segment straight_{};
  GridPoint corner_{};
  Coord h_end_ = 0;
  Coord v_end_ = 0;
};

struct EpgRepresentation {
  std::optional<GridSize> grid;
  std::vector<EpgPath> paths;

  friend bool operator==(const EpgRepresentation&, const EpgRepresentation&) = default;
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::size_t path_index, const std::string& what)
      : std::runtime_error(what), path_index_(path_index) {}
  std::size_t path_index() const noexcept { return path_index_; }

 private:
  std::size_t path_index_;
};

/// Throws ValidationError on duplicate ids, negative ids or coordinates,
/// empty or reversed segments, and coordinates outside declared bounds.
void validate(const EpgRepresentation& repr);

/// Bounding grid: the declared one, or the smallest grid holding every path.
GridSize effective_grid(const EpgRepresentation& repr);

/// H edges first, each group in ascending anchor order. The H and V parts
/// of a bend path are disjoint.
std::vector<GridEdge> grid_edges_of(const EpgPath& path);

/// Paths covering each grid edge, stored as one sorted flat array.
class EdgeCover {
 public:
  explicit EdgeCover(const EpgRepresentation& repr);

  /// Indices into repr.paths, ascending.
  std::span<const std::uint32_t> paths_on(const GridEdge& e) const noexcept;
  std::span<const std::uint32_t> paths_on(std::optional<GridEdge> e) const noexcept {
    return e ? paths_on(*e) : std::span<const std::uint32_t>{};
  }

  /// Visits every covered edge with its cover set, in ascending edge order.
  template <class Fn>
  void for_each_edge(Fn&& fn) const {
    std::size_t i = 0;
    while (i < keys_.size()) {
      std::size_t j = i;
      while (j < keys_.size() && keys_[j] == keys_[i]) ++j;
      fn(keys_[i], std::span<const std::uint32_t>(paths_.data() + i, j - i));
      i = j;
    }
  }

  static GridEdge decode(std::uint64_t key) noexcept;

 private:
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> paths_;
};

/// Bend paths grouped by bend point and shape (indexed by Shape); each list
/// holds indices into repr.paths ordered by path id.
using ShapeBuckets = std::array<std::vector<std::uint32_t>, 4>;
using BendIndex = std::map<GridPoint, ShapeBuckets>;

BendIndex bend_index(const EpgRepresentation& repr);

/// Lookup structures shared by the per-point analysis and the recoloring.
/// Holds a reference; the representation must outlive it.
struct RepresentationIndex {
  explicit RepresentationIndex(const EpgRepresentation& r)
      : repr(&r), cover(r), bends(bend_index(r)) {}

  const EpgRepresentation* repr;
  EdgeCover cover;
  BendIndex bends;

  const EpgPath& path(std::size_t i) const { return repr->paths[i]; }
  const ShapeBuckets* buckets_at(GridPoint x) const {
    auto it = bends.find(x);
    return it == bends.end() ? nullptr : &it->second;
  }
};

}  // namespace epg
