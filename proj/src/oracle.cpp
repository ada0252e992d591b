#include "phylorient/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <queue>
#include <vector>

#include "phylorient/conditions.hpp"

namespace phylorient {

namespace {

struct Bounds {
  unsigned max_in;
  unsigned max_out;
};

// Depth-first enumeration over edge directions with per-vertex in/out caps. When
// every vertex's in + out equals its degree and neither cap is exceeded, the
// degree pattern is exact, so only acyclicity is left to check at the leaves.
class ArcEnumerator {
 public:
  ArcEnumerator(const RootedGraph& g, std::vector<Bounds> bounds) : g_(g), bounds_(std::move(bounds)) {
    // BFS edge order from the root so caps bite early.
    std::vector<char> seen_edge(g.edge_count(), 0);
    std::vector<char> seen_vertex(g.vertex_count(), 0);
    std::queue<VertexId> queue;
    queue.push(g.root);
    seen_vertex[g.root] = 1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (VertexId w : g.adjacency[v]) {
        const Edge e = Edge::make(v, w);
        const auto id = static_cast<std::size_t>(std::lower_bound(g.edges.begin(), g.edges.end(), e) - g.edges.begin());
        if (!seen_edge[id]) {
          seen_edge[id] = 1;
          order_.push_back(e);
        }
        if (!seen_vertex[w]) {
          seen_vertex[w] = 1;
          queue.push(w);
        }
      }
    }
    in_.assign(g.vertex_count(), 0);
    out_.assign(g.vertex_count(), 0);
  }

  void run(const std::function<void(std::span<const Arc>)>& visit) {
    visit_ = &visit;
    arcs_.clear();
    step(0);
  }

 private:
  void step(std::size_t i) {
    if (i == order_.size()) {
      if (acyclic()) (*visit_)(arcs_);
      return;
    }
    const Edge e = order_[i];
    try_arc({e.u, e.v}, i);
    try_arc({e.v, e.u}, i);
  }

  void try_arc(Arc a, std::size_t i) {
    if (out_[a.tail] + 1 > bounds_[a.tail].max_out || in_[a.head] + 1 > bounds_[a.head].max_in) return;
    ++out_[a.tail];
    ++in_[a.head];
    arcs_.push_back(a);
    step(i + 1);
    arcs_.pop_back();
    --out_[a.tail];
    --in_[a.head];
  }

  bool acyclic() const {
    const std::size_t n = g_.vertex_count();
    std::vector<std::vector<VertexId>> kids(n);
    std::vector<unsigned> pending(n, 0);
    for (const Arc& a : arcs_) {
      kids[a.tail].push_back(a.head);
      ++pending[a.head];
    }
    std::vector<VertexId> ready;
    for (VertexId v = 0; v < n; ++v)
      if (pending[v] == 0) ready.push_back(v);
    std::size_t popped = 0;
    while (!ready.empty()) {
      const VertexId v = ready.back();
      ready.pop_back();
      ++popped;
      for (VertexId w : kids[v])
        if (--pending[w] == 0) ready.push_back(w);
    }
    return popped == n;
  }

  const RootedGraph& g_;
  std::vector<Bounds> bounds_;
  std::vector<Edge> order_;
  std::vector<unsigned> in_;
  std::vector<unsigned> out_;
  std::vector<Arc> arcs_;
  const std::function<void(std::span<const Arc>)>* visit_ = nullptr;
};

}  // namespace

void for_each_binary_orientation(const UndirectedNetwork& net, Edge root_edge,
                                 const std::function<void(std::span<const Arc>)>& visit) {
  const RootedGraph g = insert_root(net, root_edge);
  std::vector<Bounds> bounds(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto deg = static_cast<unsigned>(g.adjacency[v].size());
    if (v == g.root)
      bounds[v] = {0, 2};
    else if (deg == 1)
      bounds[v] = {1, 0};
    else if (deg == 3)
      bounds[v] = {2, 2};
    else
      bounds[v] = {0, 0};  // not binary: nothing to enumerate
  }
  ArcEnumerator(g, std::move(bounds)).run(visit);
}

std::size_t count_constrained_orientations(const UndirectedNetwork& net, const OrientationConstraints& c) {
  const RootedGraph g = insert_root(net, c.root_edge);
  std::vector<Bounds> bounds(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto deg = static_cast<unsigned>(g.adjacency[v].size());
    if (v == g.root)
      bounds[v] = {0, 2};
    else
      bounds[v] = {c.in_degree[v], deg >= c.in_degree[v] ? deg - c.in_degree[v] : 0};
  }
  std::size_t count = 0;
  ArcEnumerator(g, std::move(bounds)).run([&](std::span<const Arc>) { ++count; });
  return count;
}

SolverReport brute_force_tree_child(const UndirectedNetwork& net) {
  const auto start = std::chrono::steady_clock::now();
  if (net.edge_count() > kBruteForceMaxEdges)
    throw SizeGuardExceeded("brute-force oracle edge count", double(net.edge_count()), double(kBruteForceMaxEdges));
  SolverReport report;
  const VertexId root = static_cast<VertexId>(net.vertex_count());
  for (const Edge& e : net.edges()) {
    ++report.roots_tried;
    std::optional<std::vector<VertexId>> best;
    std::vector<Arc> best_arcs;
    for_each_binary_orientation(net, e, [&](std::span<const Arc> arcs) {
      ++report.reticulation_sets_tried;
      if (!is_tree_child(net.vertex_count() + 1, arcs)) {
        ++report.pruned_by["not_tree_child"];
        return;
      }
      std::vector<unsigned> indeg(net.vertex_count() + 1, 0);
      for (const Arc& a : arcs) ++indeg[a.head];
      std::vector<VertexId> reticulations;
      for (VertexId v = 0; v < net.vertex_count(); ++v)
        if (indeg[v] == 2) reticulations.push_back(v);
      if (!best || reticulations < *best) {
        best = std::move(reticulations);
        best_arcs.assign(arcs.begin(), arcs.end());
      }
    });
    if (!best) continue;
    report.outcome = Outcome::Orientable;
    report.root_edge = e;
    report.reticulations = *best;
    RawDigraph raw;
    const RootedGraph g = insert_root(net, e);
    raw.vertices = g.names.all();
    raw.root = g.names[root];
    for (VertexId x : net.leaves()) raw.leaves.push_back(net.name(x));
    for (const Arc& a : best_arcs) raw.arcs.emplace_back(g.names[a.tail], g.names[a.head]);
    report.solution = DirectedNetwork::from_raw(raw, net.options());
    break;
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace phylorient
