#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "epg/grid.hpp"

namespace epg {

/// Edge-intersection graph. Vertex i is repr.paths[i]; neighbor lists are sorted.
class IntersectionGraph {
 public:
  IntersectionGraph() = default;
  IntersectionGraph(std::vector<PathId> ids, std::vector<std::vector<std::uint32_t>> adjacency);

  std::size_t vertex_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  PathId id(std::size_t v) const { return ids_[v]; }
  std::span<const PathId> ids() const noexcept { return ids_; }
  std::span<const std::uint32_t> neighbors(std::size_t v) const { return adjacency_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const;

 private:
  std::vector<PathId> ids_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Buckets paths per grid edge; cost is proportional to the sum of squared
/// cover sizes, never an all-pairs scan.
IntersectionGraph derive_graph(const EpgRepresentation& repr);
IntersectionGraph derive_graph(const EpgRepresentation& repr, const EdgeCover& cover);

/// Graphviz export: one `u -- v` line per adjacency, labeled by path id.
std::string to_dot(const IntersectionGraph& graph);

}  // namespace epg
