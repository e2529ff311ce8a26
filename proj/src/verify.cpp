#include "epg/verify.hpp"

#include <algorithm>
#include <set>

namespace epg {

std::string to_string(const CliqueReport& c) {
  std::string out = c.kind == CliqueKind::edge ? "edge" : "claw";
  out += " {";
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c.members[i]);
  }
  out += "}";
  if (c.kind == CliqueKind::edge) {
    out += " edge=" + to_string(c.edge_witness);
  } else {
    out += " center=" + to_string(c.claw_witness.center) + " stem=" + to_char(c.claw_witness.stem);
  }
  return out;
}

namespace {

using Vertices = std::vector<std::uint32_t>;

}  // namespace

std::vector<CliqueReport> enumerate_cliques_repr(const EpgRepresentation& repr,
                                                 const IntersectionGraph& graph) {
  const EdgeCover cover(repr);
  std::map<Vertices, CliqueReport> candidates;

  cover.for_each_edge([&](std::uint64_t key, std::span<const std::uint32_t> on_edge) {
    if (on_edge.size() < 2) return;
    Vertices v(on_edge.begin(), on_edge.end());
    CliqueReport r;
    r.kind = CliqueKind::edge;
    r.edge_witness = EdgeCover::decode(key);
    candidates.try_emplace(std::move(v), std::move(r));
  });

  // Claw candidates: counted directly from the covers of the three edges,
  // without the bend-shape bookkeeping used by the recoloring.
  std::set<GridPoint> bend_points;
  for (const EpgPath& p : repr.paths)
    if (p.is_bend()) bend_points.insert(p.corner());
  for (GridPoint x : bend_points) {
    for (Direction stem : kDirections) {
      const auto triple = claw_triple(stem);
      std::array<std::span<const std::uint32_t>, 3> covers;
      for (int k = 0; k < 3; ++k) covers[k] = cover.paths_on(edge_at(x, triple[k]));
      std::map<std::uint32_t, unsigned> held;  // path -> bitmask of held triple edges
      for (int k = 0; k < 3; ++k)
        for (std::uint32_t p : covers[k]) held[p] |= 1u << k;
      bool pair_covered[8] = {};
      Vertices members;
      for (const auto& [p, mask] : held) {
        if (std::popcount(mask) >= 2) {
          members.push_back(p);
          pair_covered[mask] = true;
        }
      }
      if (!(pair_covered[0b011] && pair_covered[0b101] && pair_covered[0b110])) continue;
      CliqueReport r;
      r.kind = CliqueKind::claw;
      r.claw_witness = {x, stem};
      candidates.try_emplace(std::move(members), std::move(r));
    }
  }

  std::vector<CliqueReport> out;
  for (auto& [vertices, report] : candidates) {
    if (!is_maximal_clique(graph, vertices)) continue;
    report.vertices = vertices;
    for (std::uint32_t v : vertices) report.members.push_back(graph.id(v));
    std::sort(report.members.begin(), report.members.end());
    out.push_back(std::move(report));
  }
  std::sort(out.begin(), out.end(),
            [](const CliqueReport& a, const CliqueReport& b) { return a.members < b.members; });
  return out;
}

namespace {

// Bron-Kerbosch with Tomita pivoting over sorted vertex vectors.
class BronKerbosch {
 public:
  explicit BronKerbosch(const IntersectionGraph& g) : g_(g) {}

  void run() {
    Vertices all(g_.vertex_count());
    for (std::uint32_t v = 0; v < all.size(); ++v) all[v] = v;
    Vertices r;
    expand(r, all, {});
  }

  std::vector<Vertices> cliques;

 private:
  Vertices restrict(const Vertices& set, std::uint32_t v) const {
    const auto nb = g_.neighbors(v);
    Vertices out;
    std::set_intersection(set.begin(), set.end(), nb.begin(), nb.end(), std::back_inserter(out));
    return out;
  }

  void expand(Vertices& r, Vertices p, Vertices x) {
    if (p.empty()) {
      if (x.empty() && r.size() >= 2) {
        Vertices c = r;
        std::sort(c.begin(), c.end());
        cliques.push_back(std::move(c));
      }
      return;
    }
    std::uint32_t pivot = p.front();
    std::size_t best = 0;
    for (const Vertices* s : {&p, &x}) {
      for (std::uint32_t u : *s) {
        const std::size_t n = restrict(p, u).size();
        if (n >= best) {
          best = n;
          pivot = u;
        }
      }
    }
    const Vertices pivot_nb = restrict(p, pivot);
    Vertices branch;
    std::set_difference(p.begin(), p.end(), pivot_nb.begin(), pivot_nb.end(), std::back_inserter(branch));
    for (std::uint32_t v : branch) {
      r.push_back(v);
      expand(r, restrict(p, v), restrict(x, v));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  const IntersectionGraph& g_;
};

}  // namespace

std::vector<std::vector<PathId>> enumerate_cliques_graph(const IntersectionGraph& graph,
                                                         std::size_t vertex_bound) {
  if (graph.vertex_count() > vertex_bound)
    throw OracleBoundExceeded("clique oracle refuses " + std::to_string(graph.vertex_count()) +
                              " vertices (bound " + std::to_string(vertex_bound) + ")");
  BronKerbosch bk(graph);
  bk.run();
  std::vector<std::vector<PathId>> out;
  out.reserve(bk.cliques.size());
  for (const Vertices& c : bk.cliques) {
    std::vector<PathId> ids;
    for (std::uint32_t v : c) ids.push_back(graph.id(v));
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport verify_coloring(const EpgRepresentation& repr, std::span<const int> colors) {
  if (colors.size() != repr.paths.size())
    throw std::invalid_argument("coloring size does not match the number of paths");
  VerificationReport report;
  report.colors_in_range =
      std::all_of(colors.begin(), colors.end(), [](int c) { return c >= 1 && c <= 4; });

  const IntersectionGraph graph = derive_graph(repr);
  const auto cliques = enumerate_cliques_repr(repr, graph);
  std::set<std::vector<PathId>> family;
  for (const CliqueReport& c : cliques) family.insert(c.members);
  report.clique_count = family.size();

  std::map<PathId, int> color_of;
  for (std::size_t i = 0; i < repr.paths.size(); ++i) color_of[repr.paths[i].id()] = colors[i];

  auto all_cliques = family;
  if (graph.vertex_count() <= kOracleVertexBound) {
    const auto oracle = enumerate_cliques_graph(graph);
    report.oracle_checked = true;
    report.oracle_agrees = std::set<std::vector<PathId>>(oracle.begin(), oracle.end()) == family;
    all_cliques.insert(oracle.begin(), oracle.end());
  }
  for (const auto& members : all_cliques) {
    const int first = color_of[members.front()];
    if (std::all_of(members.begin(), members.end(), [&](PathId id) { return color_of[id] == first; }))
      report.violations.push_back({members, first});
  }

  report.class4_independent = true;
  for (std::size_t u = 0; u < graph.vertex_count() && report.class4_independent; ++u) {
    if (colors[u] != 4) continue;
    for (std::uint32_t v : graph.neighbors(u)) {
      if (colors[v] == 4) {
        report.class4_independent = false;
        break;
      }
    }
  }
  report.valid = report.colors_in_range && report.violations.empty();
  return report;
}

VerificationReport verify_coloring(const EpgRepresentation& repr, const std::map<PathId, int>& colors) {
  std::vector<int> dense;
  dense.reserve(repr.paths.size());
  for (const EpgPath& p : repr.paths) {
    auto it = colors.find(p.id());
    if (it == colors.end()) throw std::invalid_argument("no color for path " + std::to_string(p.id()));
    dense.push_back(it->second);
  }
  return verify_coloring(repr, dense);
}

}  // namespace epg
