#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "phylorient/graph.hpp"

namespace phylorient {

/// Root edge plus the desired in-degree of every vertex of N (indexed by id).
struct OrientationConstraints {
  Edge root_edge;
  std::vector<unsigned> in_degree;
};

/// Binary convention: in-degree 2 for every vertex in `reticulations`, 1 elsewhere.
OrientationConstraints reticulation_constraints(const UndirectedNetwork& net, Edge root_edge,
                                                std::span<const VertexId> reticulations);

/// Throws NetworkError unless the root edge exists, leaves ask for in-degree 1 and
/// every other vertex v for 1 <= in_degree(v) < deg(v).
void validate_constraints(const UndirectedNetwork& net, const OrientationConstraints& constraints);

/// Sum of desired in-degrees equals |E| + 1.
bool check_degree_sum(const UndirectedNetwork& net, const OrientationConstraints& constraints);

/// (V', E') certifying that no orientation meets the constraints. Ids refer to the
/// rooted graph N_rho, whose root is vertex N.vertex_count().
struct DegreeCutWitness {
  std::vector<VertexId> cut_vertices;
  std::vector<Edge> cut_edges;
};

enum class InfeasibleReason { DegreeSumMismatch, DegreeCut, UnverifiedCut };

struct Infeasible {
  InfeasibleReason reason;
  std::optional<DegreeCutWitness> witness;
};

using OrientResult = std::variant<DirectedNetwork, Infeasible>;

/// Reusable propagation engine for one rooted graph.
///
/// Propagation fires the root first. A vertex fires once it has received its
/// desired number of incoming arcs, orienting all of its still-unoriented edges
/// outward. Every vertex fired this way agrees with any valid orientation, so
/// the constraints are satisfiable iff every vertex fires with its in-degree
/// met exactly; if not, the vertices that never fired form the non-root side of
/// a degree cut.
class RootedOrienter {
 public:
  RootedOrienter(const UndirectedNetwork& net, Edge root_edge);

  /// Returns true iff the constraints (indexed by N's ids) admit an orientation.
  bool propagate(std::span<const unsigned> in_degree);

  /// Arcs of N_rho after a successful propagate(), in firing order.
  const std::vector<Arc>& arcs() const { return arcs_; }
  /// Degree cut read off the last failed propagate(); nullopt if the frontier is
  /// empty (only possible when the degree sum is wrong).
  std::optional<DegreeCutWitness> stalled_cut() const;

  const RootedGraph& rooted() const { return rooted_; }
  VertexId root() const { return rooted_.root; }

 private:
  RootedGraph rooted_;
  // CSR incidence: for vertex v, slots [offset_[v], offset_[v+1]) hold (neighbor, edge id).
  std::vector<std::size_t> offset_;
  std::vector<VertexId> incident_vertex_;
  std::vector<std::size_t> incident_edge_;
  std::vector<unsigned> need_;
  std::vector<unsigned> received_;
  std::vector<char> fired_;
  std::vector<char> oriented_;
  std::vector<VertexId> queue_;
  std::vector<Arc> arcs_;
};

OrientResult orient(const UndirectedNetwork& net, const OrientationConstraints& constraints);

/// Witness iff orient() fails with a degree cut; nullopt iff it succeeds.
std::optional<DegreeCutWitness> find_degree_cut(const UndirectedNetwork& net, const OrientationConstraints& constraints);

/// Direct check of the four degree-cut conditions on N_rho.
bool is_degree_cut(const UndirectedNetwork& net, const OrientationConstraints& constraints,
                   const DegreeCutWitness& witness);

/// True iff `oriented` is an acyclic orientation of N_rho (matched by vertex name)
/// whose root arcs point away from the root and whose in-degrees match.
bool verify_orientation(const DirectedNetwork& oriented, const UndirectedNetwork& net,
                        const OrientationConstraints& constraints);

/// Assembles the directed network for a successful propagation.
DirectedNetwork to_directed(const RootedOrienter& orienter, const UndirectedNetwork& net);

}  // namespace phylorient
