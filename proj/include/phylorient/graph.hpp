#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace phylorient {

using VertexId = std::uint32_t;

/// Unordered edge key, always stored as (min, max).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  static constexpr Edge make(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  constexpr bool touches(VertexId w) const { return u == w || v == w; }
  constexpr VertexId other(VertexId w) const { return w == u ? v : u; }
  auto operator<=>(const Edge&) const = default;
};

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  auto operator<=>(const Arc&) const = default;
};

enum class ErrorKind {
  Empty,
  Disconnected,
  HasLoop,
  HasParallelEdge,
  DegreeViolation,
  UnlabeledDegreeOneVertex,
  TooFewLeaves,
  UnknownVertex,
  DuplicateLabel,
  EdgeNotFound,
  Cyclic,
  RootViolation,
  Unreachable,
  InvalidParameter,
};

std::string_view to_string(ErrorKind kind);

/// Raised for every structural violation found while building or editing a network.
class NetworkError : public std::runtime_error {
 public:
  NetworkError(ErrorKind kind, std::string message, std::string vertex = {}, std::size_t degree = 0);

  ErrorKind kind() const { return kind_; }
  const std::string& vertex() const { return vertex_; }
  std::size_t degree() const { return degree_; }

 private:
  ErrorKind kind_;
  std::string vertex_;
  std::size_t degree_;
};

struct ValidationOptions {
  // Generated families such as the one-leaf jellyfish are exempt from |X| >= 2.
  bool allow_single_leaf = false;
  bool require_binary = false;
};

/// Unvalidated input. Vertex ids are assigned in first-seen order: the explicit
/// `vertices` list, then `leaves`, then edge endpoints.
struct RawGraph {
  std::vector<std::string> vertices;
  std::vector<std::string> leaves;
  std::vector<std::pair<std::string, std::string>> edges;
};

struct RawDigraph {
  std::vector<std::string> vertices;
  std::vector<std::string> leaves;
  std::string root;
  std::vector<std::pair<std::string, std::string>> arcs;
};

// Shared name bookkeeping for both network kinds.
class VertexNames {
 public:
  VertexNames() = default;
  explicit VertexNames(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](VertexId v) const { return names_[v]; }
  const std::vector<std::string>& all() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  /// `base` if unused, otherwise `base_1`, `base_2`, ...
  std::string unused(std::string_view base) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
};

/// A simple connected undirected phylogenetic network. Immutable.
class UndirectedNetwork {
 public:
  static UndirectedNetwork from_raw(const RawGraph& raw, ValidationOptions options = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t leaf_count() const { return leaves_.size(); }

  /// Sorted lexicographically by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }
  /// Ascending ids.
  const std::vector<VertexId>& leaves() const { return leaves_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  bool is_leaf(VertexId v) const { return adjacency_[v].size() == 1; }
  bool is_binary() const { return binary_; }
  bool has_edge(Edge e) const;
  std::optional<std::size_t> edge_index(Edge e) const;

  const std::string& name(VertexId v) const { return names_[v]; }
  const VertexNames& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const { return names_.find(name); }
  /// Looks up an edge by endpoint names; throws EdgeNotFound or UnknownVertex.
  Edge edge_between(std::string_view a, std::string_view b) const;

  const ValidationOptions& options() const { return options_; }
  RawGraph to_raw() const;

  friend bool operator==(const UndirectedNetwork& a, const UndirectedNetwork& b) {
    return a.names_.all() == b.names_.all() && a.edges_ == b.edges_;
  }

 private:
  VertexNames names_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<VertexId> leaves_;
  bool binary_ = false;
  ValidationOptions options_;
};

/// A rooted directed acyclic phylogenetic network. Immutable.
class DirectedNetwork {
 public:
  static DirectedNetwork from_raw(const RawDigraph& raw, ValidationOptions options = {});

  std::size_t vertex_count() const { return children_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  /// Sorted lexicographically by (tail, head).
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<VertexId>& leaves() const { return leaves_; }
  VertexId root() const { return root_; }
  std::span<const VertexId> children(VertexId v) const { return children_[v]; }
  std::span<const VertexId> parents(VertexId v) const { return parents_[v]; }
  std::size_t in_degree(VertexId v) const { return parents_[v].size(); }
  std::size_t out_degree(VertexId v) const { return children_[v].size(); }
  bool is_leaf(VertexId v) const { return children_[v].empty(); }
  bool is_reticulation(VertexId v) const { return parents_[v].size() >= 2; }
  bool is_tree_vertex(VertexId v) const { return parents_[v].size() == 1 && !children_[v].empty(); }
  bool is_binary() const { return binary_; }
  /// Reticulations in ascending id order.
  std::vector<VertexId> reticulations() const;

  const std::string& name(VertexId v) const { return names_[v]; }
  const VertexNames& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const { return names_.find(name); }

  RawDigraph to_raw() const;

  friend bool operator==(const DirectedNetwork& a, const DirectedNetwork& b) {
    return a.names_.all() == b.names_.all() && a.arcs_ == b.arcs_ && a.root_ == b.root_;
  }

 private:
  VertexNames names_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<std::vector<VertexId>> parents_;
  std::vector<Arc> arcs_;
  std::vector<VertexId> leaves_;
  VertexId root_ = 0;
  bool binary_ = false;
};

/// N with its root edge subdivided by a new vertex. Not a valid UndirectedNetwork
/// (the root has degree two), so it gets its own type.
struct RootedGraph {
  VertexNames names;
  std::vector<std::vector<VertexId>> adjacency;
  std::vector<Edge> edges;
  VertexId root = 0;
  Edge root_edge;  // in the ids of the original network

  std::size_t vertex_count() const { return adjacency.size(); }
  std::size_t edge_count() const { return edges.size(); }
};

struct NetworkStats {
  std::size_t n_leaves = 0;
  std::size_t n_reticulations = 0;
  std::size_t n_tree_vertices = 0;
  std::size_t n_vertices = 0;
  std::size_t n_arcs = 0;
};

/// Validates and canonicalizes raw input. Same as UndirectedNetwork::from_raw.
UndirectedNetwork validate_undirected(const RawGraph& raw, ValidationOptions options = {});

/// Shortest-path edge counts between all leaf pairs, indexed by position in N.leaves().
std::vector<std::vector<std::size_t>> leaf_distances(const UndirectedNetwork& net);

RootedGraph insert_root(const UndirectedNetwork& net, Edge e);
/// Inverse of insert_root: suppresses the root and restores the root edge.
UndirectedNetwork contract_root(const RootedGraph& rooted, ValidationOptions options = {});

/// Subdivides `e` with a new vertex and hangs a new leaf `label` from it. The new
/// vertices take the next two ids (subdivision vertex first).
UndirectedNetwork attach_leaf(const UndirectedNetwork& net, Edge e, std::string_view label);

/// |E| - |V| + 1.
std::size_t circuit_rank(const UndirectedNetwork& net);

/// Counts for a binary directed network. Throws std::logic_error if the counting
/// identities t = |X|+r-2, |V| = 2t+3, |A| = 3r+2|X|-2 fail, which would mean a
/// validation bug upstream.
NetworkStats network_stats(const DirectedNetwork& net);

/// Underlying undirected graph of a directed network, including its root as a
/// degree-two vertex.
RootedGraph underlying_graph(const DirectedNetwork& net);

}  // namespace phylorient
