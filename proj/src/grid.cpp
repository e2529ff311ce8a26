#include "epg/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

namespace epg {

std::optional<GridEdge> edge_at(GridPoint x, Direction d) noexcept {
  switch (d) {
    case Direction::N: return GridEdge{Orientation::V, x};
    case Direction::E: return GridEdge{Orientation::H, x};
    case Direction::S:
      if (x.row == 0) return std::nullopt;
      return GridEdge{Orientation::V, {x.col, x.row - 1}};
    case Direction::W:
      if (x.col == 0) return std::nullopt;
      return GridEdge{Orientation::H, {x.col - 1, x.row}};
  }
  return std::nullopt;
}

char to_char(Direction d) noexcept {
  static constexpr char kNames[] = {'N', 'E', 'S', 'W'};
  return kNames[static_cast<int>(d)];
}

const char* to_string(Shape s) noexcept {
  static constexpr const char* kNames[] = {"NE", "NW", "SE", "SW"};
  return kNames[static_cast<int>(s)];
}

std::string to_string(GridPoint p) {
  return "(" + std::to_string(p.col) + "," + std::to_string(p.row) + ")";
}

std::string to_string(const GridEdge& e) {
  return (e.orientation == Orientation::H ? "H" : "V") + to_string(e.anchor);
}

EpgPath EpgPath::horizontal(PathId id, Coord row, Coord c1, Coord c2) {
  EpgPath p;
  p.id_ = id;
  p.kind_ = PathKind::H;
  p.straight_ = Segment{Orientation::H, row, c1, c2};
  return p;
}

EpgPath EpgPath::vertical(PathId id, Coord col, Coord r1, Coord r2) {
  EpgPath p;
  p.id_ = id;
  p.kind_ = PathKind::V;
  p.straight_ = Segment{Orientation::V, col, r1, r2};
  return p;
}

EpgPath EpgPath::bent(PathId id, GridPoint corner, Coord h_end, Coord v_end) {
  EpgPath p;
  p.id_ = id;
  p.kind_ = PathKind::Bend;
  p.corner_ = corner;
  p.h_end_ = h_end;
  p.v_end_ = v_end;
  return p;
}

Shape EpgPath::shape() const noexcept {
  return shape_of(v_end_ > corner_.row ? Direction::N : Direction::S,
                  h_end_ > corner_.col ? Direction::E : Direction::W);
}

Coord EpgPath::arm_length(Direction d) const noexcept {
  if (!is_bend() || !has_direction(shape(), d)) return 0;
  return is_vertical(d) ? std::abs(v_end_ - corner_.row) : std::abs(h_end_ - corner_.col);
}

std::optional<Segment> EpgPath::horizontal_segment() const noexcept {
  switch (kind_) {
    case PathKind::H: return straight_;
    case PathKind::V: return std::nullopt;
    case PathKind::Bend:
      return Segment{Orientation::H, corner_.row, std::min(h_end_, corner_.col),
                     std::max(h_end_, corner_.col)};
  }
  return std::nullopt;
}

std::optional<Segment> EpgPath::vertical_segment() const noexcept {
  switch (kind_) {
    case PathKind::H: return std::nullopt;
    case PathKind::V: return straight_;
    case PathKind::Bend:
      return Segment{Orientation::V, corner_.col, std::min(v_end_, corner_.row),
                     std::max(v_end_, corner_.row)};
  }
  return std::nullopt;
}

namespace {

void check_point(std::size_t i, const EpgPath& p, Coord col, Coord row,
                 const std::optional<GridSize>& grid) {
  if (col < 0 || row < 0)
    throw ValidationError(i, "path " + std::to_string(p.id()) + ": negative coordinate");
  if (grid && (col >= grid->width || row >= grid->height))
    throw ValidationError(i, "path " + std::to_string(p.id()) + ": coordinate (" +
                                 std::to_string(col) + "," + std::to_string(row) +
                                 ") out of bounds");
}

}  // namespace

void validate(const EpgRepresentation& repr) {
  if (repr.grid && (repr.grid->width <= 0 || repr.grid->height <= 0))
    throw ValidationError(0, "grid dimensions must be positive");
  std::unordered_set<PathId> seen;
  seen.reserve(repr.paths.size());
  for (std::size_t i = 0; i < repr.paths.size(); ++i) {
    const EpgPath& p = repr.paths[i];
    const std::string who = "path " + std::to_string(p.id());
    if (p.id() < 0) throw ValidationError(i, who + ": negative id");
    if (!seen.insert(p.id()).second) throw ValidationError(i, who + ": duplicate id");
    if (p.is_bend()) {
      if (p.h_end() == p.corner().col || p.v_end() == p.corner().row)
        throw ValidationError(i, who + ": empty segment");
      check_point(i, p, p.corner().col, p.corner().row, repr.grid);
      check_point(i, p, p.h_end(), p.corner().row, repr.grid);
      check_point(i, p, p.corner().col, p.v_end(), repr.grid);
    } else {
      const Segment s = *p.segment(p.kind() == PathKind::H ? Orientation::H : Orientation::V);
      if (s.lo == s.hi) throw ValidationError(i, who + ": empty segment");
      if (s.lo > s.hi) throw ValidationError(i, who + ": reversed segment");
      const bool h = s.orientation == Orientation::H;
      check_point(i, p, h ? s.lo : s.line, h ? s.line : s.lo, repr.grid);
      check_point(i, p, h ? s.hi : s.line, h ? s.line : s.hi, repr.grid);
    }
  }
}

GridSize effective_grid(const EpgRepresentation& repr) {
  if (repr.grid) return *repr.grid;
  GridSize g{1, 1};
  for (const EpgPath& p : repr.paths) {
    for (auto o : {Orientation::H, Orientation::V}) {
      if (auto s = p.segment(o)) {
        if (o == Orientation::H) {
          g.width = std::max(g.width, s->hi + 1);
          g.height = std::max(g.height, s->line + 1);
        } else {
          g.width = std::max(g.width, s->line + 1);
          g.height = std::max(g.height, s->hi + 1);
        }
      }
    }
  }
  return g;
}

std::vector<GridEdge> grid_edges_of(const EpgPath& path) {
  std::vector<GridEdge> out;
  for (auto o : {Orientation::H, Orientation::V}) {
    if (auto s = path.segment(o)) {
      for (Coord a = s->lo; a < s->hi; ++a) out.push_back(s->edge(a));
    }
  }
  return out;
}

EdgeCover::EdgeCover(const EpgRepresentation& repr) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> entries;
  std::size_t total = 0;
  for (const EpgPath& p : repr.paths) {
    if (auto s = p.horizontal_segment()) total += s->length();
    if (auto s = p.vertical_segment()) total += s->length();
  }
  entries.reserve(total);
  for (std::uint32_t i = 0; i < repr.paths.size(); ++i) {
    for (auto o : {Orientation::H, Orientation::V}) {
      if (auto s = repr.paths[i].segment(o)) {
        for (Coord a = s->lo; a < s->hi; ++a) entries.emplace_back(s->edge(a).key(), i);
      }
    }
  }
  std::sort(entries.begin(), entries.end());
  keys_.reserve(entries.size());
  paths_.reserve(entries.size());
  for (const auto& [k, i] : entries) {
    keys_.push_back(k);
    paths_.push_back(i);
  }
}

std::span<const std::uint32_t> EdgeCover::paths_on(const GridEdge& e) const noexcept {
  const auto [lo, hi] = std::equal_range(keys_.begin(), keys_.end(), e.key());
  return {paths_.data() + (lo - keys_.begin()), static_cast<std::size_t>(hi - lo)};
}

GridEdge EdgeCover::decode(std::uint64_t key) noexcept {
  constexpr std::uint64_t kMask = (std::uint64_t(1) << 31) - 1;
  return GridEdge{(key >> 62) ? Orientation::V : Orientation::H,
                  {Coord(key & kMask), Coord((key >> 31) & kMask)}};
}

BendIndex bend_index(const EpgRepresentation& repr) {
  BendIndex index;
  for (std::uint32_t i = 0; i < repr.paths.size(); ++i) {
    const EpgPath& p = repr.paths[i];
    if (p.is_bend()) index[p.corner()][static_cast<int>(p.shape())].push_back(i);
  }
  for (auto& [x, buckets] : index) {
    for (auto& list : buckets) {
      std::sort(list.begin(), list.end(), [&](std::uint32_t a, std::uint32_t b) {
        return repr.paths[a].id() < repr.paths[b].id();
      });
    }
  }
  return index;
}

}  // namespace epg
