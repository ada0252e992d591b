#pragma once

#include <algorithm>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "phylorient/families.hpp"
#include "phylorient/graph.hpp"

namespace testing {

using namespace phylorient;

inline UndirectedNetwork make_net(std::vector<std::string> leaves, std::vector<std::pair<std::string, std::string>> edges,
                                  ValidationOptions options = {}) {
  return UndirectedNetwork::from_raw({{}, std::move(leaves), std::move(edges)}, options);
}

inline DirectedNetwork make_dag(std::string root, std::vector<std::string> leaves,
                                std::vector<std::pair<std::string, std::string>> arcs) {
  return DirectedNetwork::from_raw({{}, std::move(leaves), std::move(root), std::move(arcs)});
}

/// Directed network from arcs expressed in N_rho ids (as produced by the oracle).
inline DirectedNetwork dag_from_arcs(const UndirectedNetwork& net, Edge root_edge, std::span<const Arc> arcs) {
  const RootedGraph g = insert_root(net, root_edge);
  RawDigraph raw;
  raw.vertices = g.names.all();
  raw.root = g.names[g.root];
  for (VertexId x : net.leaves()) raw.leaves.push_back(net.name(x));
  for (const Arc& a : arcs) raw.arcs.emplace_back(g.names[a.tail], g.names[a.head]);
  return DirectedNetwork::from_raw(raw, net.options());
}

/// All-pairs shortest paths by Floyd-Warshall; independent of the BFS code.
inline std::vector<std::vector<std::size_t>> floyd_warshall(const UndirectedNetwork& net) {
  const std::size_t n = net.vertex_count();
  const std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : net.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Binary networks with edge count 2|X| - 3 + 3r at most `max_edges`, cycling
/// through leaf counts and ranks. Deterministic.
inline std::vector<UndirectedNetwork> random_corpus(std::size_t count, std::size_t max_edges, std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (std::size_t leaves = 3; 2 * leaves - 3 <= max_edges; ++leaves)
    for (std::size_t rank = 0; 2 * leaves - 3 + 3 * rank <= max_edges; ++rank) shapes.emplace_back(leaves, rank);
  std::vector<UndirectedNetwork> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto [leaves, rank] = shapes[i % shapes.size()];
    out.push_back(random_binary_network(seed + i, leaves, rank));
  }
  return out;
}

/// Every subset of `pool` of the given size, in lexicographic order.
inline std::vector<std::vector<VertexId>> subsets(const std::vector<VertexId>& pool, std::size_t size) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> current;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (current.size() == size) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<VertexId> internal_vertices(const UndirectedNetwork& net) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    if (!net.is_leaf(v)) out.push_back(v);
  return out;
}

inline bool independent(const UndirectedNetwork& net, const std::vector<VertexId>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (net.has_edge(Edge::make(set[i], set[j]))) return false;
  return true;
}

}  // namespace testing
