#include "phylorient/conditions.hpp"

#include <algorithm>
#include <map>

namespace phylorient {

bool is_tree_child(const DirectedNetwork& net) {
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    const auto kids = net.children(v);
    if (kids.empty()) continue;
    if (std::none_of(kids.begin(), kids.end(), [&](VertexId c) { return net.in_degree(c) == 1; })) return false;
  }
  return true;
}

bool is_tree_child(std::size_t vertex_count, std::span<const Arc> arcs) {
  std::vector<unsigned> indeg(vertex_count, 0);
  for (const Arc& a : arcs) ++indeg[a.head];
  // 0 = no children seen, 1 = only reticulation children, 2 = has a tree child.
  std::vector<char> state(vertex_count, 0);
  for (const Arc& a : arcs) {
    char& s = state[a.tail];
    if (indeg[a.head] == 1)
      s = 2;
    else if (s == 0)
      s = 1;
  }
  return std::find(state.begin(), state.end(), char{1}) == state.end();
}

bool check_edge_bound(const UndirectedNetwork& net) {
  return 6 + net.edge_count() <= 5 * net.leaf_count();
}

bool check_leaf_distance(const UndirectedNetwork& net) {
  // Each leaf's only neighbor is its attachment point; pairs at distance 2 share
  // it, pairs at distance 3 have adjacent attachment points.
  std::vector<int> leaves_at(net.vertex_count(), 0);
  for (VertexId x : net.leaves()) ++leaves_at[net.neighbors(x)[0]];
  for (VertexId x : net.leaves()) {
    const VertexId p = net.neighbors(x)[0];
    if (net.is_leaf(p)) continue;  // two-vertex network, the pair is at distance 1
    if (leaves_at[p] >= 2) return true;
    for (VertexId q : net.neighbors(p))
      if (q != x && leaves_at[q] > 0 && !net.is_leaf(q)) return true;
  }
  return false;
}

std::vector<LeafPair> find_cherries(const DirectedNetwork& net) {
  std::map<VertexId, std::vector<VertexId>> by_parent;
  for (VertexId x : net.leaves()) by_parent[net.parents(x)[0]].push_back(x);
  std::vector<LeafPair> out;
  for (const auto& [parent, kids] : by_parent)
    for (std::size_t i = 0; i < kids.size(); ++i)
      for (std::size_t j = i + 1; j < kids.size(); ++j) out.emplace_back(kids[i], kids[j]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LeafPair> find_reticulated_cherries(const DirectedNetwork& net) {
  const RootedGraph g = underlying_graph(net);
  std::vector<LeafPair> out;
  for (VertexId x : net.leaves()) {
    for (VertexId p : g.adjacency[x]) {
      if (net.is_leaf(p)) continue;
      for (VertexId q : g.adjacency[p]) {
        if (q == x || net.is_leaf(q)) continue;
        for (VertexId y : g.adjacency[q]) {
          if (y == p || !net.is_leaf(y) || y <= x) continue;
          if (net.is_reticulation(p) != net.is_reticulation(q)) out.emplace_back(x, y);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool root_has_tree_child(const DirectedNetwork& net) {
  const auto kids = net.children(net.root());
  return std::any_of(kids.begin(), kids.end(), [&](VertexId c) { return net.in_degree(c) == 1; });
}

ConditionReport condition_report(const UndirectedNetwork& net) {
  ConditionReport report;
  report.leaf_count = net.leaf_count();
  report.edge_count = net.edge_count();
  report.vertex_count = net.vertex_count();
  report.reticulation_count = circuit_rank(net);
  report.edge_bound_ok = check_edge_bound(net);
  report.leaf_distance_ok = check_leaf_distance(net);

  const long long bound = 5 * static_cast<long long>(net.leaf_count()) - 6;
  report.details.push_back("edge_bound: |E| = " + std::to_string(net.edge_count()) +
                           (report.edge_bound_ok ? " <= " : " > ") + "5|X| - 6 = " + std::to_string(bound));
  report.details.push_back(std::string("leaf_distance: ") +
                           (report.leaf_distance_ok ? "some leaf pair at distance 2 or 3"
                                                    : "no leaf pair at distance 2 or 3"));
  report.details.push_back("reticulation_count: |E| - |V| + 1 = " + std::to_string(report.reticulation_count));
  if (!report.edge_bound_ok) report.failures.emplace_back("edge_bound");
  if (!report.leaf_distance_ok) report.failures.emplace_back("leaf_distance");
  return report;
}

}  // namespace phylorient
