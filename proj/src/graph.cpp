#include "epg/graph.hpp"

#include <algorithm>

namespace epg {

IntersectionGraph::IntersectionGraph(std::vector<PathId> ids,
                                     std::vector<std::vector<std::uint32_t>> adjacency)
    : ids_(std::move(ids)), adjacency_(std::move(adjacency)) {
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

bool IntersectionGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), static_cast<std::uint32_t>(v));
}

IntersectionGraph derive_graph(const EpgRepresentation& repr) {
  return derive_graph(repr, EdgeCover(repr));
}

IntersectionGraph derive_graph(const EpgRepresentation& repr, const EdgeCover& cover) {
  std::vector<std::vector<std::uint32_t>> adjacency(repr.paths.size());
  cover.for_each_edge([&](std::uint64_t, std::span<const std::uint32_t> on_edge) {
    for (std::size_t i = 0; i < on_edge.size(); ++i) {
      for (std::size_t j = i + 1; j < on_edge.size(); ++j) {
        adjacency[on_edge[i]].push_back(on_edge[j]);
        adjacency[on_edge[j]].push_back(on_edge[i]);
      }
    }
  });
  std::vector<PathId> ids;
  ids.reserve(repr.paths.size());
  for (const EpgPath& p : repr.paths) ids.push_back(p.id());
  return IntersectionGraph(std::move(ids), std::move(adjacency));
}

std::string to_dot(const IntersectionGraph& graph) {
  std::string out = "graph G {\n";
  for (std::size_t v = 0; v < graph.vertex_count(); ++v)
    out += "  " + std::to_string(graph.id(v)) + ";\n";
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    for (std::uint32_t v : graph.neighbors(u)) {
      if (u < v) out += "  " + std::to_string(graph.id(u)) + " -- " + std::to_string(graph.id(v)) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace epg
