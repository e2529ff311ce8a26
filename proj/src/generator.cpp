#include "epg/generator.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace epg {

namespace {

void check_params(const GenParams& p) {
  if (p.p_horizontal < 0 || p.p_vertical < 0 || p.p_bend < 0 ||
      std::abs(p.p_horizontal + p.p_vertical + p.p_bend - 1.0) > 1e-9)
    throw GeneratorError("kind probabilities must be non-negative and sum to 1");
  if (p.max_length < 1) throw GeneratorError("max_length must be at least 1");
  if (p.p_hotspot < 0 || p.p_hotspot > 1) throw GeneratorError("p_hotspot must lie in [0,1]");
  if (p.max_bends_per_point < 1) throw GeneratorError("max_bends_per_point must be at least 1");
  if (p.paths > 0 && (p.width < 2 || p.height < 2))
    throw GeneratorError("grid " + std::to_string(p.width) + "x" + std::to_string(p.height) +
                         " too small for a path of length 1");
}

class Builder {
 public:
  explicit Builder(const GenParams& p) : p_(p), rng_(p.seed) {}

  EpgRepresentation build() {
    check_params(p_);
    EpgRepresentation repr;
    repr.grid = GridSize{p_.width, p_.height};
    if (p_.preset == Preset::clustered && p_.paths > 0) pick_hotspots();
    for (std::size_t i = 0; i < p_.paths; ++i) repr.paths.push_back(make_path(PathId(i + 1)));
    return repr;
  }

 private:
  Coord length_within(Coord room) {
    return 1 + Coord(rng_.below(std::uint64_t(std::min(p_.max_length, room))));
  }

  PathKind pick_kind() {
    const double r = rng_.unit();
    if (r < p_.p_horizontal) return PathKind::H;
    if (r < p_.p_horizontal + p_.p_vertical) return PathKind::V;
    return PathKind::Bend;
  }

  // Straight segment on `line` of the given extent covering or touching `through`.
  std::pair<Coord, Coord> interval_at(Coord extent, Coord through) {
    const Coord len = length_within(extent - 1);
    const Coord lo_min = std::max<Coord>(0, through - len);
    const Coord lo_max = std::min<Coord>(through, extent - 1 - len);
    const Coord lo = lo_min + Coord(rng_.below(std::uint64_t(lo_max - lo_min + 1)));
    return {lo, lo + len};
  }

  EpgPath straight(PathId id, PathKind kind, GridPoint at) {
    if (kind == PathKind::H) {
      const auto [lo, hi] = interval_at(p_.width, at.col);
      return EpgPath::horizontal(id, at.row, lo, hi);
    }
    const auto [lo, hi] = interval_at(p_.height, at.row);
    return EpgPath::vertical(id, at.col, lo, hi);
  }

  Coord arm_end(Coord origin, Coord extent) {
    const Coord up_room = extent - 1 - origin;
    const Coord down_room = origin;
    const bool up = down_room == 0 || (up_room > 0 && rng_.below(2) == 0);
    return up ? origin + length_within(up_room) : origin - length_within(down_room);
  }

  EpgPath bent(PathId id, GridPoint corner) {
    const Coord h_end = arm_end(corner.col, p_.width);
    const Coord v_end = arm_end(corner.row, p_.height);
    ++bends_at_[corner];
    return EpgPath::bent(id, corner, h_end, v_end);
  }

  GridPoint random_point() {
    return {Coord(rng_.below(std::uint64_t(p_.width))), Coord(rng_.below(std::uint64_t(p_.height)))};
  }

  bool bend_allowed(GridPoint x) const {
    auto it = bends_at_.find(x);
    return it == bends_at_.end() || it->second < p_.max_bends_per_point;
  }

  void pick_hotspots() {
    const std::size_t k = p_.hotspots ? p_.hotspots : std::max<std::size_t>(1, p_.paths / 20);
    const bool interior = p_.width >= 3 && p_.height >= 3;
    for (std::size_t i = 0; i < k; ++i) {
      if (interior) {
        hotspots_.push_back({1 + Coord(rng_.below(std::uint64_t(p_.width - 2))),
                             1 + Coord(rng_.below(std::uint64_t(p_.height - 2)))});
      } else {
        hotspots_.push_back(random_point());
      }
    }
  }

  EpgPath make_path(PathId id) {
    const PathKind kind = pick_kind();
    GridPoint at;
    if (!hotspots_.empty() && rng_.unit() < p_.p_hotspot) {
      at = hotspots_[rng_.below(hotspots_.size())];
    } else {
      at = random_point();
    }
    if (kind != PathKind::Bend) return straight(id, kind, at);
    for (int attempt = 0; attempt < 8 && !bend_allowed(at); ++attempt) at = random_point();
    if (!bend_allowed(at)) return straight(id, rng_.below(2) ? PathKind::H : PathKind::V, at);
    return bent(id, at);
  }

  const GenParams& p_;
  SplitMix64 rng_;
  std::vector<GridPoint> hotspots_;
  std::map<GridPoint, int> bends_at_;
};

}  // namespace

EpgRepresentation random_instance(const GenParams& params) { return Builder(params).build(); }

GenParams scaling_params(std::size_t n, std::uint64_t seed) {
  GenParams p;
  p.paths = n;
  const Coord side = std::max<Coord>(8, Coord(std::ceil(3.0 * std::sqrt(double(n)))));
  p.width = side;
  p.height = side;
  p.max_length = 8;
  p.seed = seed;
  p.preset = Preset::clustered;
  p.max_bends_per_point = 8;
  return p;
}

EpgRepresentation sun3_instance() {
  EpgRepresentation r;
  r.paths = {
      EpgPath::vertical(1, 2, 3, 5),
      EpgPath::bent(2, {2, 2}, 0, 4),
      EpgPath::bent(3, {2, 2}, 4, 4),
      EpgPath::horizontal(4, 2, 2, 4),
      EpgPath::horizontal(5, 2, 1, 3),
      EpgPath::horizontal(6, 2, 0, 2),
  };
  return r;
}

EpgRepresentation cycle_instance(int n) {
  if (n < 3) throw GeneratorError("cycle_instance needs n >= 3");
  EpgRepresentation r;
  if (n == 3) {
    // Claw triangle: NW and NE bends at (1,1) plus a straight path through it.
    r.paths = {EpgPath::bent(1, {1, 1}, 0, 2), EpgPath::bent(2, {1, 1}, 2, 2),
               EpgPath::horizontal(3, 1, 0, 2)};
    return r;
  }
  // Rectangle boundary of perimeter 2n; arc i covers loop edges 2i..2i+2.
  const Coord w = n / 2;
  const Coord h = n - w;
  std::vector<GridPoint> loop;
  for (Coord c = 0; c < w; ++c) loop.push_back({c, 0});
  for (Coord y = 0; y < h; ++y) loop.push_back({w, y});
  for (Coord c = w; c > 0; --c) loop.push_back({c, h});
  for (Coord y = h; y > 0; --y) loop.push_back({0, y});
  const std::size_t perimeter = loop.size();
  for (int i = 0; i < n; ++i) {
    std::array<GridPoint, 4> pts;
    for (std::size_t k = 0; k < 4; ++k) pts[k] = loop[(2 * std::size_t(i) + k) % perimeter];
    const GridPoint a = pts.front();
    const GridPoint b = pts.back();
    const PathId id = i + 1;
    if (a.row == b.row && std::all_of(pts.begin(), pts.end(), [&](GridPoint p) { return p.row == a.row; })) {
      r.paths.push_back(EpgPath::horizontal(id, a.row, std::min(a.col, b.col), std::max(a.col, b.col)));
    } else if (a.col == b.col && std::all_of(pts.begin(), pts.end(), [&](GridPoint p) { return p.col == a.col; })) {
      r.paths.push_back(EpgPath::vertical(id, a.col, std::min(a.row, b.row), std::max(a.row, b.row)));
    } else {
      GridPoint corner = pts[1];
      for (std::size_t k = 1; k + 1 < pts.size(); ++k) {
        const bool straight = (pts[k - 1].row == pts[k].row && pts[k].row == pts[k + 1].row) ||
                              (pts[k - 1].col == pts[k].col && pts[k].col == pts[k + 1].col);
        if (!straight) corner = pts[k];
      }
      const bool a_on_row = a.row == corner.row;
      r.paths.push_back(EpgPath::bent(id, corner, a_on_row ? a.col : b.col, a_on_row ? b.row : a.row));
    }
  }
  return r;
}

}  // namespace epg
