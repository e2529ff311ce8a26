#pragma once

// Structural predicates evaluated at a single grid point x: which paths hold
// two edges of a claw triple, which bend shapes are "missing", and which
// stems may center a claw clique colored (a,a).

#include <array>
#include <bit>
#include <initializer_list>
#include <string>
#include <cstdint>
#include <vector>

#include "epg/graph.hpp"
#include "epg/grid.hpp"
#include "epg/interval_coloring.hpp"

namespace epg {

/// A grid point and the stem direction of the edge triple
/// {stem} + perpendicular(stem).
struct ClawStem {
  GridPoint center;
  Direction stem = Direction::N;
  friend bool operator==(const ClawStem&, const ClawStem&) = default;
};

constexpr std::array<Direction, 3> claw_triple(Direction stem) noexcept {
  const auto p = perpendicular(stem);
  return {stem, p[0], p[1]};
}

class DirectionSet {
 public:
  constexpr DirectionSet() = default;
  constexpr DirectionSet(std::initializer_list<Direction> ds) {
    for (Direction d : ds) insert(d);
  }
  constexpr void insert(Direction d) noexcept { bits_ |= std::uint8_t(1u << unsigned(d)); }
  constexpr bool contains(Direction d) const noexcept { return bits_ & (1u << unsigned(d)); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  std::vector<Direction> to_vector() const {
    std::vector<Direction> out;
    for (Direction d : kDirections)
      if (contains(d)) out.push_back(d);
    return out;
  }
  friend constexpr bool operator==(DirectionSet, DirectionSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

std::string to_string(DirectionSet s);

/// Paths containing both edges at x perpendicular to `stem` (straight paths
/// through x, or bend paths bending elsewhere). Ascending path index.
std::vector<std::uint32_t> paths_through(const RepresentationIndex& index, GridPoint x,
                                         Direction stem);

/// Paths holding exactly two edges of the triple of (x, stem): bend paths at
/// x whose shape contains `stem`, plus paths_through(x, stem). Ascending path
/// index. Throws std::logic_error if some path holds all three.
std::vector<std::uint32_t> paths_with_two_edges(const RepresentationIndex& index, GridPoint x,
                                                Direction stem);

/// A shape is missing at x when no path of that shape bends at x, or some
/// path of that shape bending at x is not colored (a,a).
bool is_missing(const RepresentationIndex& index, GridPoint x, Shape shape, const ColorView& colors);

/// Stems d at x where both bend shapes of the triple occur at x, the
/// straight pair is covered, and every path holding two edges of the triple
/// is (a,a). Over-approximates the stems of monocolored (a,a) claw cliques.
DirectionSet hot_stems(const RepresentationIndex& index, GridPoint x, const ColorView& colors);

/// Hot stems whose two-edge path set is a maximal clique of `graph` with at
/// least two members. Diagnostic; always a subset of hot_stems.
DirectionSet exact_mono_claws(const RepresentationIndex& index, const IntersectionGraph& graph,
                              GridPoint x, const ColorView& colors);

/// True when no vertex outside `members` is adjacent to every member.
bool is_maximal_clique(const IntersectionGraph& graph, std::span<const std::uint32_t> members);

}  // namespace epg
