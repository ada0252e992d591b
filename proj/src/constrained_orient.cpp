#include "phylorient/constrained_orient.hpp"

#include <algorithm>
#include <numeric>

namespace phylorient {

OrientationConstraints reticulation_constraints(const UndirectedNetwork& net, Edge root_edge,
                                                std::span<const VertexId> reticulations) {
  OrientationConstraints c{Edge::make(root_edge.u, root_edge.v), std::vector<unsigned>(net.vertex_count(), 1)};
  for (VertexId v : reticulations) {
    if (v >= net.vertex_count()) throw NetworkError(ErrorKind::UnknownVertex, "reticulation id out of range");
    c.in_degree[v] = 2;
  }
  return c;
}

void validate_constraints(const UndirectedNetwork& net, const OrientationConstraints& c) {
  if (!net.has_edge(c.root_edge)) throw NetworkError(ErrorKind::EdgeNotFound, "root edge is not an edge of the network");
  if (c.in_degree.size() != net.vertex_count())
    throw NetworkError(ErrorKind::InvalidParameter, "in-degree map must cover every vertex");
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    // A non-leaf with every edge incoming would be a sink that is not a leaf.
    const std::size_t cap = net.is_leaf(v) ? 1 : net.degree(v) - 1;
    if (c.in_degree[v] < 1 || c.in_degree[v] > cap)
      throw NetworkError(ErrorKind::InvalidParameter,
                         "desired in-degree of '" + net.name(v) + "' must lie in [1, " + std::to_string(cap) + "]",
                         net.name(v), c.in_degree[v]);
  }
}

bool check_degree_sum(const UndirectedNetwork& net, const OrientationConstraints& c) {
  const std::size_t sum = std::accumulate(c.in_degree.begin(), c.in_degree.end(), std::size_t{0});
  return sum == net.edge_count() + 1;
}

RootedOrienter::RootedOrienter(const UndirectedNetwork& net, Edge root_edge)
    : rooted_(insert_root(net, root_edge)) {
  const std::size_t n = rooted_.vertex_count();
  offset_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + rooted_.adjacency[v].size();
  incident_vertex_.resize(offset_[n]);
  incident_edge_.resize(offset_[n]);
  std::vector<std::size_t> cursor(offset_.begin(), offset_.end() - 1);
  for (std::size_t id = 0; id < rooted_.edges.size(); ++id) {
    const Edge& e = rooted_.edges[id];
    incident_vertex_[cursor[e.u]] = e.v;
    incident_edge_[cursor[e.u]++] = id;
    incident_vertex_[cursor[e.v]] = e.u;
    incident_edge_[cursor[e.v]++] = id;
  }
  need_.resize(n);
  received_.resize(n);
  fired_.resize(n);
  oriented_.resize(rooted_.edges.size());
  queue_.reserve(n);
  arcs_.reserve(rooted_.edges.size());
}

bool RootedOrienter::propagate(std::span<const unsigned> in_degree) {
  const std::size_t n = rooted_.vertex_count();
  std::copy(in_degree.begin(), in_degree.end(), need_.begin());
  need_[rooted_.root] = 0;
  std::fill(received_.begin(), received_.end(), 0u);
  std::fill(fired_.begin(), fired_.end(), char{0});
  std::fill(oriented_.begin(), oriented_.end(), char{0});
  arcs_.clear();
  queue_.clear();

  bool overfull = false;
  queue_.push_back(rooted_.root);
  fired_[rooted_.root] = 1;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const VertexId v = queue_[head];
    for (std::size_t slot = offset_[v]; slot < offset_[v + 1]; ++slot) {
      const std::size_t id = incident_edge_[slot];
      if (oriented_[id]) continue;
      oriented_[id] = 1;
      const VertexId w = incident_vertex_[slot];
      arcs_.push_back({v, w});
      // An arc into a vertex that already fired means two fired vertices both
      // want this edge outgoing; propagation continues so the frontier is exact.
      if (++received_[w] > need_[w]) overfull = true;
      if (!fired_[w] && received_[w] == need_[w]) {
        fired_[w] = 1;
        queue_.push_back(w);
      }
    }
  }
  return !overfull && queue_.size() == n && arcs_.size() == rooted_.edges.size();
}

std::optional<DegreeCutWitness> RootedOrienter::stalled_cut() const {
  // V' = unfired vertices with at least one incoming arc; E' = those arcs. Every
  // edge between fired and unfired vertices was oriented by its fired end, so
  // removing E' cuts the unfired side off from the root, and each v in V' has
  // received fewer than its desired in-degree.
  DegreeCutWitness witness;
  for (std::size_t id = 0; id < rooted_.edges.size(); ++id) {
    const Edge& e = rooted_.edges[id];
    if (!oriented_[id] || fired_[e.u] == fired_[e.v]) continue;
    witness.cut_edges.push_back(e);
  }
  if (witness.cut_edges.empty()) return std::nullopt;
  for (VertexId v = 0; v < rooted_.vertex_count(); ++v)
    if (!fired_[v] && received_[v] > 0) witness.cut_vertices.push_back(v);
  return witness;
}

DirectedNetwork to_directed(const RootedOrienter& orienter, const UndirectedNetwork& net) {
  const RootedGraph& rooted = orienter.rooted();
  RawDigraph raw;
  raw.vertices = rooted.names.all();
  raw.root = rooted.names[rooted.root];
  for (VertexId v : net.leaves()) raw.leaves.push_back(net.name(v));
  raw.arcs.reserve(orienter.arcs().size());
  for (const Arc& a : orienter.arcs()) raw.arcs.emplace_back(rooted.names[a.tail], rooted.names[a.head]);
  return DirectedNetwork::from_raw(raw, net.options());
}

OrientResult orient(const UndirectedNetwork& net, const OrientationConstraints& c) {
  validate_constraints(net, c);
  if (!check_degree_sum(net, c)) return Infeasible{InfeasibleReason::DegreeSumMismatch, std::nullopt};
  RootedOrienter orienter(net, c.root_edge);
  if (orienter.propagate(c.in_degree)) {
    // from_raw re-checks acyclicity and the degree pattern.
    return to_directed(orienter, net);
  }
  auto witness = orienter.stalled_cut();
  if (witness && is_degree_cut(net, c, *witness)) return Infeasible{InfeasibleReason::DegreeCut, std::move(witness)};
  return Infeasible{InfeasibleReason::UnverifiedCut, std::move(witness)};
}

std::optional<DegreeCutWitness> find_degree_cut(const UndirectedNetwork& net, const OrientationConstraints& c) {
  validate_constraints(net, c);
  RootedOrienter orienter(net, c.root_edge);
  if (orienter.propagate(c.in_degree)) return std::nullopt;
  auto witness = orienter.stalled_cut();
  if (witness && !is_degree_cut(net, c, *witness)) return std::nullopt;
  return witness;
}

bool is_degree_cut(const UndirectedNetwork& net, const OrientationConstraints& c, const DegreeCutWitness& witness) {
  const RootedGraph rooted = insert_root(net, c.root_edge);
  const std::size_t n = rooted.vertex_count();
  if (witness.cut_vertices.empty() || witness.cut_edges.empty()) return false;

  std::vector<char> in_cut(n, 0);
  for (VertexId v : witness.cut_vertices) {
    if (v >= n || v == rooted.root || in_cut[v]) return false;
    in_cut[v] = 1;
  }
  std::vector<Edge> cut_edges = witness.cut_edges;
  for (Edge& e : cut_edges) e = Edge::make(e.u, e.v);
  std::sort(cut_edges.begin(), cut_edges.end());
  if (std::adjacent_find(cut_edges.begin(), cut_edges.end()) != cut_edges.end()) return false;

  std::vector<unsigned> incident(n, 0);
  for (const Edge& e : cut_edges) {
    if (!std::binary_search(rooted.edges.begin(), rooted.edges.end(), e)) return false;
    // Condition 3: exactly one endpoint in V'.
    if (in_cut[e.u] + in_cut[e.v] != 1) return false;
    ++incident[in_cut[e.u] ? e.u : e.v];
  }
  // Condition 4.
  for (VertexId v : witness.cut_vertices)
    if (incident[v] < 1 || incident[v] + 1 > c.in_degree[v]) return false;

  // Conditions 1 and 2: components of N_rho minus E'.
  std::vector<char> reached(n, 0);
  std::vector<VertexId> stack{rooted.root};
  reached[rooted.root] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : rooted.adjacency[v]) {
      if (reached[w] || std::binary_search(cut_edges.begin(), cut_edges.end(), Edge::make(v, w))) continue;
      reached[w] = 1;
      ++count;
      stack.push_back(w);
    }
  }
  if (count == n) return false;
  for (VertexId v : witness.cut_vertices)
    if (reached[v]) return false;
  return true;
}

bool verify_orientation(const DirectedNetwork& oriented, const UndirectedNetwork& net,
                        const OrientationConstraints& c) {
  if (!net.has_edge(c.root_edge) || c.in_degree.size() != net.vertex_count()) return false;
  if (oriented.vertex_count() != net.vertex_count() + 1 || oriented.arc_count() != net.edge_count() + 1) return false;

  // Map every vertex of N onto the directed network by name; the one left over is the root.
  std::vector<VertexId> image(net.vertex_count());
  std::vector<char> used(oriented.vertex_count(), 0);
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    auto w = oriented.find(net.name(v));
    if (!w || *w == oriented.root()) return false;
    image[v] = *w;
    used[*w] = 1;
  }
  const VertexId root = oriented.root();
  if (used[root]) return false;

  for (VertexId v = 0; v < net.vertex_count(); ++v)
    if (oriented.in_degree(image[v]) != c.in_degree[v]) return false;

  auto kids = oriented.children(root);
  if (oriented.in_degree(root) != 0 || kids.size() != 2) return false;
  const Edge expected_root{std::min(image[c.root_edge.u], image[c.root_edge.v]),
                           std::max(image[c.root_edge.u], image[c.root_edge.v])};
  if (Edge::make(kids[0], kids[1]) != expected_root) return false;

  std::vector<Edge> expected;
  for (const Edge& e : net.edges())
    if (e != c.root_edge) expected.push_back(Edge::make(image[e.u], image[e.v]));
  std::vector<Edge> actual;
  for (const Arc& a : oriented.arcs())
    if (a.tail != root) actual.push_back(Edge::make(a.tail, a.head));
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  if (expected != actual) return false;

  // DirectedNetwork construction already rejects cycles; recheck independently.
  std::vector<std::size_t> pending(oriented.vertex_count());
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < oriented.vertex_count(); ++v) {
    pending[v] = oriented.in_degree(v);
    if (pending[v] == 0) ready.push_back(v);
  }
  std::size_t popped = 0;
  while (!ready.empty()) {
    const VertexId v = ready.back();
    ready.pop_back();
    ++popped;
    for (VertexId w : oriented.children(v))
      if (--pending[w] == 0) ready.push_back(w);
  }
  return popped == oriented.vertex_count();
}

}  // namespace phylorient
