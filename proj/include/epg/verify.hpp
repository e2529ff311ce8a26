#pragma once

// Independent checks of a clique coloring. Maximal cliques are enumerated
// twice: from the representation (every maximal clique is the cover set of a
// grid edge or the two-edge path set of a claw triple) and from the abstract
// graph by Bron-Kerbosch with pivoting.

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "epg/claw.hpp"
#include "epg/graph.hpp"
#include "epg/grid.hpp"

namespace epg {

enum class CliqueKind : std::uint8_t { edge, claw };

struct CliqueReport {
  std::vector<PathId> members;          // ascending ids
  std::vector<std::uint32_t> vertices;  // ascending path indices
  CliqueKind kind = CliqueKind::edge;
  GridEdge edge_witness;   // kind == edge
  ClawStem claw_witness;   // kind == claw
};

std::string to_string(const CliqueReport& c);

/// Maximal cliques of size >= 2, sorted by member ids.
std::vector<CliqueReport> enumerate_cliques_repr(const EpgRepresentation& repr,
                                                 const IntersectionGraph& graph);

class OracleBoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kOracleVertexBound = 200;

/// Maximal cliques of size >= 2 as sorted id sets, sorted. Exponential in
/// the worst case; refuses graphs with more than `vertex_bound` vertices.
std::vector<std::vector<PathId>> enumerate_cliques_graph(const IntersectionGraph& graph,
                                                         std::size_t vertex_bound = kOracleVertexBound);

struct Violation {
  std::vector<PathId> clique;
  int color = 0;
};

struct VerificationReport {
  bool valid = false;
  bool colors_in_range = false;
  std::vector<Violation> violations;
  bool class4_independent = false;
  std::size_t clique_count = 0;
  bool oracle_checked = false;  // graph small enough for the Bron-Kerbosch cross-check
  bool oracle_agrees = false;   // both enumerations produced the same family
};

/// `colors` is parallel to repr.paths.
VerificationReport verify_coloring(const EpgRepresentation& repr, std::span<const int> colors);

/// Throws std::invalid_argument if some path id has no color.
VerificationReport verify_coloring(const EpgRepresentation& repr, const std::map<PathId, int>& colors);

}  // namespace epg
