#include "phylorient/graph.hpp"

#include <algorithm>
#include <queue>

namespace phylorient {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::HasLoop: return "HasLoop";
    case ErrorKind::HasParallelEdge: return "HasParallelEdge";
    case ErrorKind::DegreeViolation: return "DegreeViolation";
    case ErrorKind::UnlabeledDegreeOneVertex: return "UnlabeledDegreeOneVertex";
    case ErrorKind::TooFewLeaves: return "TooFewLeaves";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::EdgeNotFound: return "EdgeNotFound";
    case ErrorKind::Cyclic: return "Cyclic";
    case ErrorKind::RootViolation: return "RootViolation";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
  }
  return "Unknown";
}

NetworkError::NetworkError(ErrorKind kind, std::string message, std::string vertex, std::size_t degree)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      vertex_(std::move(vertex)),
      degree_(degree) {}

VertexNames::VertexNames(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (VertexId v = 0; v < names_.size(); ++v) index_.emplace(names_[v], v);
}

std::optional<VertexId> VertexNames::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string VertexNames::unused(std::string_view base) const {
  std::string candidate(base);
  for (std::size_t i = 1; find(candidate); ++i) candidate = std::string(base) + "_" + std::to_string(i);
  return candidate;
}

namespace {

// First-seen id assignment shared by both raw formats.
class NameInterner {
 public:
  VertexId intern(const std::string& name) {
    if (name.empty()) throw NetworkError(ErrorKind::UnknownVertex, "empty vertex name");
    auto [it, inserted] = index_.emplace(name, static_cast<VertexId>(names_.size()));
    if (inserted) names_.push_back(name);
    return it->second;
  }
  std::vector<std::string> release() { return std::move(names_); }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
};

void mark_labels(const std::vector<std::string>& leaves, NameInterner& interner, std::vector<VertexId>& label_ids) {
  for (const auto& name : leaves) {
    const auto before = interner.size();
    const VertexId id = interner.intern(name);
    if (interner.size() == before && std::find(label_ids.begin(), label_ids.end(), id) != label_ids.end())
      throw NetworkError(ErrorKind::DuplicateLabel, "leaf '" + name + "' listed twice", name);
    label_ids.push_back(id);
  }
}

bool connected(const std::vector<std::vector<VertexId>>& adjacency) {
  if (adjacency.empty()) return true;
  std::vector<bool> seen(adjacency.size(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == adjacency.size();
}

}  // namespace

UndirectedNetwork UndirectedNetwork::from_raw(const RawGraph& raw, ValidationOptions options) {
  NameInterner interner;
  for (const auto& name : raw.vertices) interner.intern(name);
  std::vector<VertexId> label_ids;
  mark_labels(raw.leaves, interner, label_ids);

  std::vector<Edge> edges;
  edges.reserve(raw.edges.size());
  for (const auto& [a, b] : raw.edges) {
    const VertexId u = interner.intern(a);
    const VertexId v = interner.intern(b);
    if (u == v) throw NetworkError(ErrorKind::HasLoop, "loop at '" + a + "'", a);
    edges.push_back(Edge::make(u, v));
  }

  UndirectedNetwork net;
  net.names_ = VertexNames(interner.release());
  const std::size_t n = net.names_.size();
  if (n == 0) throw NetworkError(ErrorKind::Empty, "network has no vertices");

  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw NetworkError(ErrorKind::HasParallelEdge,
                       "parallel edges between '" + net.names_[dup->u] + "' and '" + net.names_[dup->v] + "'",
                       net.names_[dup->u]);

  net.adjacency_.assign(n, {});
  for (const Edge& e : edges) {
    net.adjacency_[e.u].push_back(e.v);
    net.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : net.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  net.edges_ = std::move(edges);

  if (!connected(net.adjacency_)) throw NetworkError(ErrorKind::Disconnected, "network is not connected");

  std::vector<bool> labeled(n, false);
  for (VertexId id : label_ids) labeled[id] = true;

  bool binary = true;
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t deg = net.adjacency_[v].size();
    const std::string& name = net.names_[v];
    if (labeled[v]) {
      if (deg != 1)
        throw NetworkError(ErrorKind::DegreeViolation,
                           "leaf '" + name + "' has degree " + std::to_string(deg), name, deg);
      net.leaves_.push_back(v);
      continue;
    }
    if (deg == 1)
      throw NetworkError(ErrorKind::UnlabeledDegreeOneVertex, "vertex '" + name + "' has degree 1 but is not a leaf",
                         name, deg);
    if (deg < 3)
      throw NetworkError(ErrorKind::DegreeViolation, "vertex '" + name + "' has degree " + std::to_string(deg), name,
                         deg);
    if (deg != 3) binary = false;
  }
  if (options.require_binary && !binary)
    throw NetworkError(ErrorKind::DegreeViolation, "network is not binary");
  const std::size_t min_leaves = options.allow_single_leaf ? 1 : 2;
  if (net.leaves_.size() < min_leaves)
    throw NetworkError(ErrorKind::TooFewLeaves,
                       "network has " + std::to_string(net.leaves_.size()) + " leaves, needs at least " +
                           std::to_string(min_leaves));
  net.binary_ = binary;
  net.options_ = options;
  return net;
}

bool UndirectedNetwork::has_edge(Edge e) const { return edge_index(e).has_value(); }

std::optional<std::size_t> UndirectedNetwork::edge_index(Edge e) const {
  e = Edge::make(e.u, e.v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Edge UndirectedNetwork::edge_between(std::string_view a, std::string_view b) const {
  auto u = find(a);
  if (!u) throw NetworkError(ErrorKind::UnknownVertex, "no vertex named '" + std::string(a) + "'", std::string(a));
  auto v = find(b);
  if (!v) throw NetworkError(ErrorKind::UnknownVertex, "no vertex named '" + std::string(b) + "'", std::string(b));
  const Edge e = Edge::make(*u, *v);
  if (!has_edge(e))
    throw NetworkError(ErrorKind::EdgeNotFound, "no edge between '" + std::string(a) + "' and '" + std::string(b) + "'");
  return e;
}

RawGraph UndirectedNetwork::to_raw() const {
  RawGraph raw;
  raw.vertices = names_.all();
  for (VertexId v : leaves_) raw.leaves.push_back(names_[v]);
  for (const Edge& e : edges_) raw.edges.emplace_back(names_[e.u], names_[e.v]);
  return raw;
}

DirectedNetwork DirectedNetwork::from_raw(const RawDigraph& raw, ValidationOptions options) {
  NameInterner interner;
  for (const auto& name : raw.vertices) interner.intern(name);
  if (raw.root.empty()) throw NetworkError(ErrorKind::RootViolation, "no root given");
  std::vector<VertexId> label_ids;
  mark_labels(raw.leaves, interner, label_ids);
  const VertexId root = interner.intern(raw.root);

  std::vector<Arc> arcs;
  arcs.reserve(raw.arcs.size());
  for (const auto& [a, b] : raw.arcs) {
    const VertexId u = interner.intern(a);
    const VertexId v = interner.intern(b);
    if (u == v) throw NetworkError(ErrorKind::HasLoop, "loop at '" + a + "'", a);
    arcs.push_back({u, v});
  }

  DirectedNetwork net;
  net.names_ = VertexNames(interner.release());
  const std::size_t n = net.names_.size();

  std::vector<Edge> keys;
  keys.reserve(arcs.size());
  for (const Arc& a : arcs) keys.push_back(Edge::make(a.tail, a.head));
  std::sort(keys.begin(), keys.end());
  if (auto dup = std::adjacent_find(keys.begin(), keys.end()); dup != keys.end())
    throw NetworkError(ErrorKind::HasParallelEdge,
                       "parallel arcs between '" + net.names_[dup->u] + "' and '" + net.names_[dup->v] + "'",
                       net.names_[dup->u]);

  std::sort(arcs.begin(), arcs.end());
  net.children_.assign(n, {});
  net.parents_.assign(n, {});
  for (const Arc& a : arcs) {
    net.children_[a.tail].push_back(a.head);
    net.parents_[a.head].push_back(a.tail);
  }
  for (auto& p : net.parents_) std::sort(p.begin(), p.end());
  net.arcs_ = std::move(arcs);
  net.root_ = root;

  if (net.in_degree(root) != 0 || net.out_degree(root) != 2)
    throw NetworkError(ErrorKind::RootViolation,
                       "root '" + raw.root + "' must have in-degree 0 and out-degree 2", raw.root);

  std::vector<bool> labeled(n, false);
  for (VertexId id : label_ids) labeled[id] = true;

  bool binary = true;
  for (VertexId v = 0; v < n; ++v) {
    if (v == root) continue;
    const std::string& name = net.names_[v];
    const std::size_t in = net.in_degree(v);
    const std::size_t out = net.out_degree(v);
    if (in == 0)
      throw NetworkError(ErrorKind::RootViolation, "vertex '" + name + "' has no parent", name);
    if (labeled[v]) {
      if (in != 1 || out != 0)
        throw NetworkError(ErrorKind::DegreeViolation, "leaf '" + name + "' must have in-degree 1 and out-degree 0",
                           name, in + out);
      net.leaves_.push_back(v);
      continue;
    }
    if (out == 0)
      throw NetworkError(ErrorKind::UnlabeledDegreeOneVertex, "vertex '" + name + "' has no children but is not a leaf",
                         name, in);
    if (in + out < 3)
      throw NetworkError(ErrorKind::DegreeViolation, "vertex '" + name + "' has degree " + std::to_string(in + out),
                         name, in + out);
    if (!((in == 1 && out == 2) || (in == 2 && out == 1))) binary = false;
  }
  if (options.require_binary && !binary) throw NetworkError(ErrorKind::DegreeViolation, "network is not binary");
  const std::size_t min_leaves = options.allow_single_leaf ? 1 : 2;
  if (net.leaves_.size() < min_leaves)
    throw NetworkError(ErrorKind::TooFewLeaves, "network has " + std::to_string(net.leaves_.size()) + " leaves");

  // Kahn's algorithm; every vertex must be popped.
  std::vector<std::size_t> pending(n);
  for (VertexId v = 0; v < n; ++v) pending[v] = net.in_degree(v);
  std::vector<VertexId> ready{root};
  std::size_t popped = 0;
  while (!ready.empty()) {
    const VertexId v = ready.back();
    ready.pop_back();
    ++popped;
    for (VertexId c : net.children_[v])
      if (--pending[c] == 0) ready.push_back(c);
  }
  if (popped != n) {
    // Every non-root vertex has a parent, so anything unpopped lies on or below a cycle.
    throw NetworkError(ErrorKind::Cyclic, "network contains a directed cycle");
  }
  net.binary_ = binary;
  return net;
}

std::vector<VertexId> DirectedNetwork::reticulations() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (is_reticulation(v)) out.push_back(v);
  return out;
}

RawDigraph DirectedNetwork::to_raw() const {
  RawDigraph raw;
  raw.vertices = names_.all();
  raw.root = names_[root_];
  for (VertexId v : leaves_) raw.leaves.push_back(names_[v]);
  for (const Arc& a : arcs_) raw.arcs.emplace_back(names_[a.tail], names_[a.head]);
  return raw;
}

UndirectedNetwork validate_undirected(const RawGraph& raw, ValidationOptions options) {
  return UndirectedNetwork::from_raw(raw, options);
}

std::vector<std::vector<std::size_t>> leaf_distances(const UndirectedNetwork& net) {
  const auto& leaves = net.leaves();
  std::vector<std::vector<std::size_t>> out(leaves.size(), std::vector<std::size_t>(leaves.size(), 0));
  std::vector<std::size_t> dist(net.vertex_count());
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    std::queue<VertexId> queue;
    dist[leaves[i]] = 0;
    queue.push(leaves[i]);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (VertexId w : net.neighbors(v)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[v] + 1;
          queue.push(w);
        }
      }
    }
    for (std::size_t j = 0; j < leaves.size(); ++j) out[i][j] = dist[leaves[j]];
  }
  return out;
}

RootedGraph insert_root(const UndirectedNetwork& net, Edge e) {
  e = Edge::make(e.u, e.v);
  if (!net.has_edge(e)) throw NetworkError(ErrorKind::EdgeNotFound, "root edge is not an edge of the network");
  RootedGraph rooted;
  auto names = net.names().all();
  const auto root = static_cast<VertexId>(names.size());
  names.push_back(net.names().unused("rho"));
  rooted.names = VertexNames(std::move(names));
  rooted.root = root;
  rooted.root_edge = e;
  rooted.adjacency.assign(net.vertex_count() + 1, {});
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    auto& nbrs = rooted.adjacency[v];
    for (VertexId w : net.neighbors(v)) nbrs.push_back(e.touches(v) && w == e.other(v) ? root : w);
    std::sort(nbrs.begin(), nbrs.end());
  }
  rooted.adjacency[root] = {e.u, e.v};
  for (const Edge& f : net.edges())
    if (f != e) rooted.edges.push_back(f);
  rooted.edges.push_back({e.u, root});
  rooted.edges.push_back({e.v, root});
  std::sort(rooted.edges.begin(), rooted.edges.end());
  return rooted;
}

UndirectedNetwork contract_root(const RootedGraph& rooted, ValidationOptions options) {
  RawGraph raw;
  for (VertexId v = 0; v < rooted.vertex_count(); ++v) {
    if (v == rooted.root) continue;
    raw.vertices.push_back(rooted.names[v]);
    if (rooted.adjacency[v].size() == 1) raw.leaves.push_back(rooted.names[v]);
  }
  for (const Edge& e : rooted.edges)
    if (!e.touches(rooted.root)) raw.edges.emplace_back(rooted.names[e.u], rooted.names[e.v]);
  const auto& nbrs = rooted.adjacency[rooted.root];
  if (nbrs.size() != 2) throw NetworkError(ErrorKind::RootViolation, "root must have degree 2");
  raw.edges.emplace_back(rooted.names[nbrs[0]], rooted.names[nbrs[1]]);
  // A leaf adjacent to the root still has degree 1 after contraction.
  return UndirectedNetwork::from_raw(raw, options);
}

UndirectedNetwork attach_leaf(const UndirectedNetwork& net, Edge e, std::string_view label) {
  e = Edge::make(e.u, e.v);
  if (!net.has_edge(e)) throw NetworkError(ErrorKind::EdgeNotFound, "host edge is not an edge of the network");
  if (label.empty() || net.find(label))
    throw NetworkError(ErrorKind::DuplicateLabel, "label '" + std::string(label) + "' already in use",
                       std::string(label));
  RawGraph raw = net.to_raw();
  std::string parent = net.names().unused("p_" + std::string(label));
  if (parent == label) parent += "_";
  raw.vertices.push_back(parent);
  raw.vertices.emplace_back(label);
  raw.leaves.emplace_back(label);
  std::erase(raw.edges, std::pair{net.name(e.u), net.name(e.v)});
  raw.edges.emplace_back(net.name(e.u), parent);
  raw.edges.emplace_back(parent, net.name(e.v));
  raw.edges.emplace_back(parent, std::string(label));
  return UndirectedNetwork::from_raw(raw, net.options());
}

std::size_t circuit_rank(const UndirectedNetwork& net) { return net.edge_count() + 1 - net.vertex_count(); }

NetworkStats network_stats(const DirectedNetwork& net) {
  NetworkStats stats;
  stats.n_vertices = net.vertex_count();
  stats.n_arcs = net.arc_count();
  stats.n_leaves = net.leaves().size();
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (v == net.root() || net.is_leaf(v)) continue;
    if (net.is_reticulation(v))
      ++stats.n_reticulations;
    else
      ++stats.n_tree_vertices;
  }
  if (net.is_binary()) {
    const auto x = static_cast<long long>(stats.n_leaves);
    const auto r = static_cast<long long>(stats.n_reticulations);
    const auto t = static_cast<long long>(stats.n_tree_vertices);
    if (t != x + r - 2 || static_cast<long long>(stats.n_vertices) != 2 * t + 3 ||
        static_cast<long long>(stats.n_arcs) != 3 * r + 2 * x - 2)
      throw std::logic_error("binary network violates the vertex/arc counting identities");
  }
  return stats;
}

RootedGraph underlying_graph(const DirectedNetwork& net) {
  RootedGraph g;
  g.names = net.names();
  g.root = net.root();
  g.adjacency.assign(net.vertex_count(), {});
  for (const Arc& a : net.arcs()) {
    g.adjacency[a.tail].push_back(a.head);
    g.adjacency[a.head].push_back(a.tail);
    g.edges.push_back(Edge::make(a.tail, a.head));
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  std::sort(g.edges.begin(), g.edges.end());
  const auto kids = net.children(net.root());
  g.root_edge = Edge::make(kids[0], kids[1]);
  return g;
}

}  // namespace phylorient
