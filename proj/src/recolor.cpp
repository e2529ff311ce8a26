#include "epg/recolor.hpp"

#include <algorithm>
#include <tuple>

namespace epg {

const char* to_string(RecolorCase c) noexcept {
  static constexpr const char* kNames[] = {"1",  "2A", "2B", "2C", "3A", "3B"};
  return kNames[static_cast<int>(c)];
}

std::size_t RecolorStats::case_total(int top_level) const noexcept {
  switch (top_level) {
    case 1: return cases[0];
    case 2: return cases[1] + cases[2] + cases[3];
    case 3: return cases[4] + cases[5];
    default: return 0;
  }
}

std::size_t RecolorStats::violations() const noexcept {
  std::size_t n = 0;
  for (auto v : rule_violations) n += v;
  return n;
}

RecolorStats& RecolorStats::operator+=(const RecolorStats& o) noexcept {
  for (std::size_t i = 0; i < cases.size(); ++i) cases[i] += o.cases[i];
  for (std::size_t i = 0; i < rule_violations.size(); ++i) rule_violations[i] += o.rule_violations[i];
  hot_points += o.hot_points;
  rule_checks += o.rule_checks;
  return *this;
}

namespace {

struct Move {
  std::uint32_t path;
  Direction arm;  // the arm whose component is flipped to b
};

const std::vector<std::uint32_t>& bucket(const ShapeBuckets& b, Shape s) {
  return b[static_cast<int>(s)];
}

class PointPlanner {
 public:
  PointPlanner(const RepresentationIndex& index, GridPoint x, std::span<const PathColor> base)
      : index_(index), x_(x), base_(base), buckets_(*index.buckets_at(x)) {}

  PointPlan plan(DirectionSet hot, RecolorStats* stats) {
    int missing_count = 0;
    Shape missing_shape = Shape::NE;
    for (Shape s : kShapes) {
      if (is_missing(index_, x_, s, ColorView(base_))) {
        ++missing_count;
        missing_shape = s;
      }
    }
    std::vector<Move> moves;
    RecolorCase which;
    if (missing_count >= 2) {
      which = case_one(hot, moves);
    } else if (missing_count == 1) {
      which = case_two(antipode(missing_shape), moves);
    } else {
      which = case_three(moves);
    }
    PointPlan out{x_, which, {}};
    for (const Move& m : moves) {
      PathColor c = base_[m.path];
      (is_vertical(m.arm) ? c.v : c.h) = SegColor::b;
      out.moves.push_back({m.path, c});
    }
    check_rules(moves, out.moves, stats);
    if (stats) {
      ++stats->cases[static_cast<int>(which)];
      ++stats->hot_points;
    }
    return out;
  }

 private:
  Coord arm(std::uint32_t p, Direction d) const { return index_.path(p).arm_length(d); }
  PathId id(std::uint32_t p) const { return index_.path(p).id(); }

  // Another bend path at x whose arm in `d` contains the arm of `p` in `d`.
  bool arm_contained(std::uint32_t p, Direction d) const {
    for (Shape s : shapes_with(d)) {
      for (std::uint32_t q : bucket(buckets_, s))
        if (q != p && arm(q, d) >= arm(p, d)) return true;
    }
    return false;
  }

  RecolorCase case_one(DirectionSet hot, std::vector<Move>& moves) const {
    // Both shapes of a hot stem are non-missing, so with at most two
    // non-missing shapes only one stem can be hot.
    if (hot.size() != 1)
      throw RuleViolation(4, "case 1 at " + to_string(x_) + " with hot stems " + to_string(hot));
    const Direction d = hot.to_vector().front();
    std::optional<std::uint32_t> best;
    for (Shape s : shapes_with(d)) {
      for (std::uint32_t p : bucket(buckets_, s)) {
        if (!best || std::make_tuple(arm(p, d), id(p)) < std::make_tuple(arm(*best, d), id(*best)))
          best = p;
      }
    }
    moves.push_back({*best, d});
    return RecolorCase::one;
  }

  // The two shapes sharing exactly one direction with `reference`; each
  // gets that shared arm flipped.
  void flank_pair(Shape reference, std::vector<Move>& moves) const {
    const Direction v = vertical_direction(reference);
    const Direction h = horizontal_direction(reference);
    moves.push_back({bucket(buckets_, shape_of(v, opposite(h))).front(), v});
    moves.push_back({bucket(buckets_, shape_of(opposite(v), h)).front(), h});
  }

  // First path of shape `reference` (by id) with a contained horizontal arm,
  // else one with a contained vertical arm.
  std::optional<Move> contained_arm(Shape reference) const {
    for (Direction d : {horizontal_direction(reference), vertical_direction(reference)}) {
      for (std::uint32_t p : bucket(buckets_, reference))
        if (arm_contained(p, d)) return Move{p, d};
    }
    return std::nullopt;
  }

  RecolorCase case_two(Shape reference, std::vector<Move>& moves) const {
    if (auto m = contained_arm(reference)) {
      moves.push_back(*m);
      return is_vertical(m->arm) ? RecolorCase::two_vertical : RecolorCase::two_horizontal;
    }
    flank_pair(reference, moves);
    return RecolorCase::two_pair;
  }

  RecolorCase case_three(std::vector<Move>& moves) const {
    // Shortest arm among all bend paths at x; ties by H before V, then id.
    std::optional<Move> shortest;
    auto key = [&](const Move& m) {
      return std::make_tuple(arm(m.path, m.arm), is_vertical(m.arm), id(m.path));
    };
    for (Shape s : kShapes) {
      for (std::uint32_t p : bucket(buckets_, s)) {
        for (Direction d : {horizontal_direction(s), vertical_direction(s)}) {
          const Move m{p, d};
          if (!shortest || key(m) < key(*shortest)) shortest = m;
        }
      }
    }
    const Shape reference = antipode(index_.path(shortest->path).shape());
    if (auto m = contained_arm(reference)) {
      moves.push_back(*m);
      moves.push_back(*shortest);
      return RecolorCase::three_contained;
    }
    flank_pair(reference, moves);
    return RecolorCase::three_pair;
  }

  void fail(int rule, const std::string& what, RecolorStats* stats) const {
    if (stats) ++stats->rule_violations[rule - 1];
    throw RuleViolation(rule, "rule " + std::to_string(rule) + " violated at " + to_string(x_) + ": " + what);
  }

  void check_rules(const std::vector<Move>& moves, const std::vector<Recoloring>& changes,
                   RecolorStats* stats) const {
    if (stats) stats->rule_checks += 4;
    // (I) recolored paths were (a,a) and become (a,b) or (b,a).
    for (const Recoloring& r : changes) {
      if (!base_[r.path].is_aa() || !(r.color == kAB || r.color == kBA))
        fail(1, "path " + std::to_string(id(r.path)) + " recolored to " + to_string(r.color), stats);
    }
    // (II) every flipped arm lies inside an a-colored arm of another bend path at x.
    for (const Move& m : moves) {
      const Orientation o = is_vertical(m.arm) ? Orientation::V : Orientation::H;
      bool witnessed = false;
      for (Shape s : shapes_with(m.arm)) {
        for (std::uint32_t q : bucket(buckets_, s)) {
          if (q != m.path && arm(q, m.arm) >= arm(m.path, m.arm) &&
              base_[q].component(o) == SegColor::a)
            witnessed = true;
        }
      }
      if (!witnessed) fail(2, "no witness for path " + std::to_string(id(m.path)), stats);
    }
    // (III) two recolored paths share only x.
    if (changes.size() > 2) fail(3, "more than two paths recolored", stats);
    if (changes.size() == 2) {
      const Shape s0 = index_.path(changes[0].path).shape();
      const Shape s1 = index_.path(changes[1].path).shape();
      if (antipode(s0) != s1) fail(3, "recolored shapes are not antipodal", stats);
    }
    // (IV) no hot stem remains at x.
    const DirectionSet after = hot_stems(index_, x_, ColorView(base_, changes));
    if (!after.empty()) fail(4, "stems " + to_string(after) + " still hot", stats);
  }

  const RepresentationIndex& index_;
  GridPoint x_;
  std::span<const PathColor> base_;
  const ShapeBuckets& buckets_;
};

}  // namespace

PointPlan plan_point(const RepresentationIndex& index, GridPoint x, std::span<const PathColor> base,
                     DirectionSet hot, RecolorStats* stats) {
  if (hot.empty() || !index.buckets_at(x))
    throw std::invalid_argument("plan_point requires a point with hot stems");
  return PointPlanner(index, x, base).plan(hot, stats);
}

RecoloringPlan plan_recolorings(const RepresentationIndex& index, std::span<const PathColor> base,
                                RecolorStats* stats) {
  RecoloringPlan plan;
  std::vector<bool> touched(base.size(), false);
  for (const auto& [x, buckets] : index.bends) {
    const DirectionSet hot = hot_stems(index, x, ColorView(base));
    if (hot.empty()) continue;
    for (const Recoloring& r : plan_point(index, x, base, hot, stats).moves) {
      if (touched[r.path])
        throw std::logic_error("path " + std::to_string(index.path(r.path).id()) + " recolored twice");
      touched[r.path] = true;
      plan.push_back(r);
    }
  }
  return plan;
}

std::vector<PathColor> apply_plan(std::span<const PathColor> base, const RecoloringPlan& plan,
                                  ApplyOrder order) {
  std::vector<PathColor> out(base.begin(), base.end());
  if (order == ApplyOrder::forward) {
    for (const Recoloring& r : plan) out[r.path] = r.color;
  } else {
    for (auto it = plan.rbegin(); it != plan.rend(); ++it) out[it->path] = it->color;
  }
  return out;
}

std::vector<int> finalize(std::span<const PathColor> pairs) {
  std::vector<int> out;
  out.reserve(pairs.size());
  for (PathColor c : pairs) out.push_back(final_color(c));
  return out;
}

CliqueColoring clique_color(const EpgRepresentation& repr) {
  validate(repr);
  CliqueColoring result;
  const RepresentationIndex index(repr);
  result.base = base_coloring(repr);
  result.plan = plan_recolorings(index, result.base, &result.stats);
  result.pairs = apply_plan(result.base, result.plan);
  result.colors = finalize(result.pairs);
  return result;
}

}  // namespace epg
