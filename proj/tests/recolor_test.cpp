#include <doctest.h>

#include <set>

#include "epg/generator.hpp"
#include "epg/recolor.hpp"
#include "epg/verify.hpp"

using namespace epg;

namespace {

constexpr GridPoint kX{5, 5};

struct Fixture {
  EpgRepresentation repr;
  std::vector<PathColor> base;

  explicit Fixture(std::vector<EpgPath> paths) {
    repr.paths = std::move(paths);
    base.assign(repr.paths.size(), kAA);
  }

  PointPlan plan(RecolorStats* stats = nullptr) const {
    const RepresentationIndex index(repr);
    return plan_point(index, kX, base, hot_stems(index, kX, base), stats);
  }

  std::vector<std::pair<PathId, PathColor>> moves(RecolorStats* stats = nullptr) const {
    std::vector<std::pair<PathId, PathColor>> out;
    for (const auto& m : plan(stats).moves) out.push_back({repr.paths[m.path].id(), m.color});
    return out;
  }
};

using Moves = std::vector<std::pair<PathId, PathColor>>;

std::vector<EpgRepresentation> suite(std::size_t count, std::uint64_t salt) {
  std::vector<EpgRepresentation> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    SplitMix64 meta(i ^ salt);
    GenParams p;
    p.paths = 1 + meta.below(150);
    p.width = 6 + Coord(meta.below(30));
    p.height = 6 + Coord(meta.below(30));
    p.max_length = 1 + Coord(meta.below(8));
    p.preset = i % 4 ? Preset::clustered : Preset::uniform;
    p.seed = meta.next();
    out.push_back(random_instance(p));
  }
  return out;
}

}  // namespace

TEST_CASE("case 1: the shortest arm along the hot stem is flipped") {
  const Fixture f({EpgPath::bent(10, kX, 3, 8), EpgPath::bent(11, kX, 7, 6), EpgPath::horizontal(12, 5, 2, 9)});
  RecolorStats stats;
  CHECK(f.plan().rule_case == RecolorCase::one);
  CHECK(f.moves(&stats) == Moves{{11, kAB}});
  CHECK(stats.case_total(1) == 1);
  CHECK(stats.rule_checks == 4);
  CHECK(stats.violations() == 0);
}

TEST_CASE("case 1 along a horizontal stem flips the horizontal component") {
  // NE and SE bends with a vertical path through x: hot stem E.
  const Fixture f({EpgPath::bent(1, kX, 9, 7), EpgPath::bent(2, kX, 6, 2), EpgPath::vertical(3, 5, 1, 9)});
  CHECK(f.moves() == Moves{{2, kBA}});
}

TEST_CASE("case 2A: contained horizontal arm") {
  const Fixture f({EpgPath::bent(20, kX, 4, 7), EpgPath::bent(21, kX, 2, 3), EpgPath::bent(22, kX, 7, 6),
                   EpgPath::horizontal(23, 5, 3, 8)});
  CHECK(f.plan().rule_case == RecolorCase::two_horizontal);
  CHECK(f.moves() == Moves{{20, kBA}});
}

TEST_CASE("case 2B: contained vertical arm") {
  const Fixture f({EpgPath::bent(20, kX, 2, 6), EpgPath::bent(21, kX, 3, 3), EpgPath::bent(22, kX, 7, 7),
                   EpgPath::horizontal(23, 5, 1, 8)});
  CHECK(f.plan().rule_case == RecolorCase::two_vertical);
  CHECK(f.moves() == Moves{{20, kAB}});
}

TEST_CASE("case 2C: dominant path, flanking shapes flipped") {
  const Fixture f({EpgPath::bent(20, kX, 2, 8), EpgPath::bent(21, kX, 3, 4), EpgPath::bent(22, kX, 6, 7),
                   EpgPath::horizontal(23, 5, 1, 8)});
  CHECK(f.plan().rule_case == RecolorCase::two_pair);
  CHECK(f.moves() == Moves{{22, kAB}, {21, kBA}});
}

TEST_CASE("case 3A: contained arm plus the shortest-arm path") {
  const Fixture f({EpgPath::bent(30, kX, 3, 7), EpgPath::bent(31, kX, 6, 3), EpgPath::bent(32, kX, 8, 8),
                   EpgPath::bent(33, kX, 2, 2), EpgPath::horizontal(34, 5, 2, 8)});
  CHECK(f.plan().rule_case == RecolorCase::three_contained);
  CHECK(f.moves() == Moves{{30, kBA}, {31, kBA}});
}

TEST_CASE("case 3B: dominant antipode, flanking shapes flipped, shortest untouched") {
  const Fixture f({EpgPath::bent(30, kX, 1, 9), EpgPath::bent(31, kX, 6, 3), EpgPath::bent(32, kX, 8, 7),
                   EpgPath::bent(33, kX, 3, 2), EpgPath::horizontal(34, 5, 2, 8)});
  CHECK(f.plan().rule_case == RecolorCase::three_pair);
  CHECK(f.moves() == Moves{{32, kAB}, {33, kBA}});
}

TEST_CASE("plan_point rejects points without hot stems") {
  const auto r = sun3_instance();
  const RepresentationIndex index(r);
  CHECK_THROWS_AS(plan_point(index, {2, 2}, base_coloring(r), DirectionSet{}), std::invalid_argument);
}

TEST_CASE("plan_recolorings") {
  const auto sun = sun3_instance();
  const RepresentationIndex sun_index(sun);
  CHECK(plan_recolorings(sun_index, base_coloring(sun)).empty());

  // The case 1 configuration plus an unrelated point whose stems are cold.
  Fixture f({EpgPath::bent(10, kX, 3, 8), EpgPath::bent(11, kX, 7, 6), EpgPath::horizontal(12, 5, 2, 9),
             EpgPath::bent(13, {1, 1}, 3, 3)});
  const RepresentationIndex index(f.repr);
  RecolorStats stats;
  const auto plan = plan_recolorings(index, f.base, &stats);
  REQUIRE(plan.size() == 1);
  CHECK(f.repr.paths[plan[0].path].id() == 11);
  CHECK(plan[0].color == kAB);
  CHECK(stats.hot_points == 1);
}

TEST_CASE("clique_color: fixtures") {
  EpgRepresentation lone;
  lone.paths = {EpgPath::horizontal(7, 0, 0, 2)};
  CHECK(clique_color(lone).colors == std::vector<int>{1});

  const auto sun = clique_color(sun3_instance());
  CHECK(sun.colors == std::vector<int>{1, 1, 4, 1, 1, 3});
  CHECK(sun.plan.empty());

  for (int n : {5, 7}) {
    const auto r = cycle_instance(n);
    const auto c = clique_color(r);
    CHECK(std::set<int>(c.colors.begin(), c.colors.end()).size() >= 3);
    CHECK(verify_coloring(r, std::span<const int>(c.colors)).valid);
  }
}

TEST_CASE("recoloring rules hold on random instances") {
  RecolorStats total;
  for (const auto& r : suite(400, 0xabc)) {
    const RepresentationIndex index(r);
    const auto base = base_coloring(r);
    RecolorStats stats;
    const auto plan = plan_recolorings(index, base, &stats);
    total += stats;
    CHECK(stats.violations() == 0);

    std::size_t bends = 0;
    for (const auto& p : r.paths) bends += p.is_bend();
    REQUIRE(plan.size() <= bends);

    std::set<std::size_t> seen;
    for (const auto& m : plan) {
      REQUIRE(seen.insert(m.path).second);
      REQUIRE(r.paths[m.path].is_bend());
      REQUIRE(base[m.path] == kAA);
      REQUIRE((m.color == kAB || m.color == kBA));
    }

    const auto after = apply_plan(base, plan);
    const auto g = derive_graph(r);
    for (const auto& [x, buckets] : index.bends) {
      REQUIRE(hot_stems(index, x, after).empty());
      REQUIRE(exact_mono_claws(index, g, x, after).empty());
    }
  }
  CHECK(total.hot_points > 0);
  CHECK(total.case_total(1) > 0);
  CHECK(total.case_total(2) > 0);
}

TEST_CASE("partial plans never enlarge a hot-stem set") {
  SplitMix64 rng(3);
  for (const auto& r : suite(200, 0x77)) {
    const RepresentationIndex index(r);
    const auto base = base_coloring(r);
    const auto plan = plan_recolorings(index, base);
    if (plan.empty()) continue;
    RecoloringPlan subset;
    for (const auto& m : plan)
      if (rng.below(2)) subset.push_back(m);
    const auto partial = apply_plan(base, subset);
    for (const auto& [x, buckets] : index.bends) {
      const auto before = hot_stems(index, x, base);
      for (Direction d : hot_stems(index, x, partial).to_vector()) REQUIRE(before.contains(d));
    }
  }
}

TEST_CASE("forward and reverse application agree") {
  for (const auto& r : suite(100, 0x55)) {
    const RepresentationIndex index(r);
    const auto base = base_coloring(r);
    const auto plan = plan_recolorings(index, base);
    CHECK(apply_plan(base, plan, ApplyOrder::forward) == apply_plan(base, plan, ApplyOrder::reverse));
  }
}
