#include <doctest.h>

#include "epg/generator.hpp"
#include "epg/graph.hpp"
#include "epg/io.hpp"
#include "oracles.hpp"

using namespace epg;

namespace {

std::vector<GridEdge> edges(std::initializer_list<std::tuple<char, Coord, Coord>> list) {
  std::vector<GridEdge> out;
  for (auto [o, c, r] : list) out.push_back({o == 'H' ? Orientation::H : Orientation::V, {c, r}});
  return out;
}

EpgRepresentation two(EpgPath a, EpgPath b) {
  EpgRepresentation r;
  r.paths = {a, b};
  return r;
}

}  // namespace

TEST_CASE("shapes: antipode is an involution and pairs NE/SW, NW/SE") {
  CHECK(antipode(Shape::NE) == Shape::SW);
  CHECK(antipode(Shape::NW) == Shape::SE);
  for (Shape s : kShapes) CHECK(antipode(antipode(s)) == s);
  CHECK(shapes_with(Direction::N) == std::array{Shape::NE, Shape::NW});
  CHECK(shapes_with(Direction::W) == std::array{Shape::NW, Shape::SW});
  CHECK(!edge_at({0, 0}, Direction::S));
  CHECK(!edge_at({0, 3}, Direction::W));
  CHECK(*edge_at({2, 2}, Direction::S) == GridEdge{Orientation::V, {2, 1}});
}

TEST_CASE("parse_representation: straight and bend paths") {
  const auto r = parse_representation(R"({"paths":[{"id":1,"kind":"H","row":0,"c1":0,"c2":3}]})");
  REQUIRE(r.paths.size() == 1);
  CHECK(*r.paths[0].horizontal_segment() == Segment{Orientation::H, 0, 0, 3});
  CHECK(!r.paths[0].vertical_segment());

  const auto b = parse_representation(
      R"({"paths":[{"id":2,"kind":"bend","corner":[2,2],"h_end":0,"v_end":4}]})");
  const EpgPath& p = b.paths[0];
  CHECK(p.shape() == Shape::NW);
  CHECK(*p.horizontal_segment() == Segment{Orientation::H, 2, 0, 2});
  CHECK(*p.vertical_segment() == Segment{Orientation::V, 2, 2, 4});
}

TEST_CASE("parse_representation: errors") {
  auto message = [](const char* text) {
    try {
      parse_representation(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"({"paths":[{"id":3,"kind":"H","row":0,"c1":5,"c2":5}]})").find("empty segment") !=
        std::string::npos);
  CHECK(message(R"({"paths":[{"id":3,"kind":"bend","corner":[1,1],"h_end":1,"v_end":4}]})")
            .find("empty segment") != std::string::npos);
  CHECK(message(R"({"paths":[{"id":1,"kind":"H","row":0,"c1":0,"c2":1},{"id":1,"kind":"V","col":0,"r1":0,"r2":1}]})")
            .find("duplicate id") != std::string::npos);
  CHECK(message(R"({"grid":{"width":3,"height":3},"paths":[{"id":1,"kind":"H","row":0,"c1":0,"c2":3}]})")
            .find("out of bounds") != std::string::npos);
  CHECK(message(R"({"paths":[{"id":1,"kind":"H","row":-1,"c1":0,"c2":3}]})").find("negative") !=
        std::string::npos);
  CHECK(message(R"({"paths":[{"id":1,"kind":"Z"}]})").find("unknown kind") != std::string::npos);

  try {
    parse_representation(R"({"paths":[ {"id":1,,}]})");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.where() == ParseError::Where::byte);
    CHECK(e.position() == 20);  // 1-based offset of the second comma
  }
  try {
    parse_representation(R"({"paths":[{"id":1,"kind":"H","row":0,"c1":0,"c2":1},{"id":2,"kind":"H","row":0,"c1":4,"c2":2}]})");
    FAIL("expected a reversed segment");
  } catch (const ParseError& e) {
    CHECK(e.where() == ParseError::Where::path_entry);
    CHECK(e.position() == 1);
  }
}

TEST_CASE("serialize_representation: canonical form") {
  CHECK(serialize_representation(EpgRepresentation{}) == R"({"paths":[]})");
  EpgRepresentation r;
  r.paths = {EpgPath::bent(2, {2, 2}, 0, 4)};
  CHECK(serialize_representation(r) ==
        R"({"paths":[{"id":2,"kind":"bend","corner":[2,2],"h_end":0,"v_end":4}]})");

  const std::string once = serialize_representation(parse_representation(serialize_representation(sun3_instance())));
  CHECK(serialize_representation(parse_representation(once)) == once);
}

TEST_CASE("serialize then parse is the identity on generated instances") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenParams p;
    p.paths = 40;
    p.width = 20;
    p.height = 15;
    p.seed = seed;
    p.preset = seed % 2 ? Preset::clustered : Preset::uniform;
    const auto r = random_instance(p);
    CHECK(parse_representation(serialize_representation(r)) == r);
  }
}

TEST_CASE("grid_edges_of") {
  CHECK(grid_edges_of(EpgPath::horizontal(1, 0, 0, 3)) == edges({{'H', 0, 0}, {'H', 1, 0}, {'H', 2, 0}}));
  CHECK(grid_edges_of(EpgPath::bent(2, {2, 2}, 0, 4)) ==
        edges({{'H', 0, 2}, {'H', 1, 2}, {'V', 2, 2}, {'V', 2, 3}}));
  CHECK(grid_edges_of(EpgPath::vertical(3, 5, 1, 2)) == edges({{'V', 5, 1}}));
}

TEST_CASE("derive_graph: overlap versus point touch") {
  CHECK(derive_graph(two(EpgPath::horizontal(1, 0, 0, 3), EpgPath::horizontal(2, 0, 2, 5))).adjacent(0, 1));
  CHECK(!derive_graph(two(EpgPath::horizontal(1, 0, 0, 2), EpgPath::horizontal(2, 0, 2, 5))).adjacent(0, 1));
  // Crossing at a point, and an L meeting a straight path end to end.
  CHECK(!derive_graph(two(EpgPath::horizontal(1, 2, 0, 4), EpgPath::vertical(2, 2, 0, 4))).adjacent(0, 1));
  CHECK(!derive_graph(two(EpgPath::bent(1, {2, 2}, 0, 4), EpgPath::bent(2, {2, 2}, 4, 0))).adjacent(0, 1));
}

TEST_CASE("derive_graph: 3-sun fixture") {
  const auto g = derive_graph(sun3_instance());
  auto adj = [&](PathId a, PathId b) { return g.adjacent(std::size_t(a - 1), std::size_t(b - 1)); };
  CHECK(adj(2, 3));
  CHECK(adj(3, 5));
  CHECK(adj(2, 5));
  std::vector<std::size_t> degree;
  for (std::size_t v = 0; v < 6; ++v) degree.push_back(g.neighbors(v).size());
  CHECK(degree == std::vector<std::size_t>{2, 4, 4, 2, 4, 2});
  CHECK(adj(1, 2));
  CHECK(adj(1, 3));
  CHECK(adj(4, 3));
  CHECK(adj(4, 5));
  CHECK(adj(6, 2));
  CHECK(adj(6, 5));
  CHECK(g.edge_count() == 9);
  CHECK(to_dot(g).find("2 -- 3;") != std::string::npos);
}

TEST_CASE("derive_graph matches pairwise edge-set intersection") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenParams p;
    p.paths = 1 + seed % 60;
    p.width = 6 + seed % 12;
    p.height = 6 + (seed / 3) % 12;
    p.max_length = 1 + seed % 6;
    p.seed = seed;
    p.preset = seed % 2 ? Preset::clustered : Preset::uniform;
    const auto r = random_instance(p);
    const auto g = derive_graph(r);
    const auto expected = oracle::adjacency(r);
    for (std::size_t u = 0; u < r.paths.size(); ++u) {
      CHECK(!g.adjacent(u, u));
      for (std::size_t v = 0; v < r.paths.size(); ++v) {
        REQUIRE(g.adjacent(u, v) == expected[u][v]);
        REQUIRE(g.adjacent(u, v) == g.adjacent(v, u));
      }
    }
  }
}

TEST_CASE("point-touching pairs are never adjacent") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const Coord row = Coord(rng.below(10));
    const Coord mid = 1 + Coord(rng.below(10));
    const Coord left = mid - 1 - Coord(rng.below(std::uint64_t(mid)));
    const Coord right = mid + 1 + Coord(rng.below(5));
    // Collinear end-to-end, and an L whose corner touches the straight end.
    const auto a = EpgPath::horizontal(1, row, left, mid);
    const auto b = EpgPath::horizontal(2, row, mid, right);
    const auto c = EpgPath::bent(3, {mid, row}, right, row + 1 + Coord(rng.below(4)));
    const auto d = EpgPath::vertical(4, mid, row, row + 3);
    EpgRepresentation r;
    r.paths = {a, b, c, d};
    const auto g = derive_graph(r);
    CHECK(!g.adjacent(0, 1));
    CHECK(!g.adjacent(0, 2));
    CHECK(!g.adjacent(0, 3));
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 3));
  }
}

TEST_CASE("bend_index") {
  CHECK(bend_index(two(EpgPath::horizontal(1, 0, 0, 1), EpgPath::vertical(2, 0, 0, 1))).empty());

  const auto sun = sun3_instance();
  const auto idx = bend_index(sun);
  REQUIRE(idx.size() == 1);
  const auto& buckets = idx.at(GridPoint{2, 2});
  CHECK(buckets[int(Shape::NW)] == std::vector<std::uint32_t>{1});  // path id 2
  CHECK(buckets[int(Shape::NE)] == std::vector<std::uint32_t>{2});  // path id 3
  CHECK(buckets[int(Shape::SE)].empty());
  CHECK(buckets[int(Shape::SW)].empty());

  EpgRepresentation r;
  r.paths = {EpgPath::bent(9, {1, 1}, 3, 3), EpgPath::bent(4, {1, 1}, 2, 4)};
  const auto twin = bend_index(r).at(GridPoint{1, 1})[int(Shape::NE)];
  REQUIRE(twin.size() == 2);
  CHECK(r.paths[twin[0]].id() == 4);
  CHECK(r.paths[twin[1]].id() == 9);
}
