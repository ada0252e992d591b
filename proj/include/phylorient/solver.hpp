#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "phylorient/graph.hpp"

namespace phylorient {

struct SearchLimits {
  /// Cap on |E| * C(non-leaf vertices, r), the reticulation-set search space.
  double max_candidates = 1e9;
  /// Cap on the number of leaf placements examined per augmentation level.
  double max_placements = 1e6;
  unsigned threads = 1;
  /// Per-root-edge progress lines, when set.
  std::ostream* progress = nullptr;
};

class SizeGuardExceeded : public std::runtime_error {
 public:
  SizeGuardExceeded(const std::string& what, double estimate, double cap)
      : std::runtime_error(what + ": estimated " + std::to_string(estimate) + " exceeds cap " + std::to_string(cap)),
        estimate_(estimate),
        cap_(cap) {}
  double estimate() const { return estimate_; }
  double cap() const { return cap_; }

 private:
  double estimate_;
  double cap_;
};

enum class Outcome { Orientable, NotOrientable };

struct SolverReport {
  Outcome outcome = Outcome::NotOrientable;
  std::optional<DirectedNetwork> solution;
  /// Root edge and reticulations of the solution, in the ids of the input network.
  std::optional<Edge> root_edge;
  std::vector<VertexId> reticulations;
  std::uint64_t roots_tried = 0;
  std::uint64_t reticulation_sets_tried = 0;
  std::map<std::string, std::uint64_t> pruned_by;
  std::chrono::nanoseconds elapsed{0};

  bool orientable() const { return outcome == Outcome::Orientable; }
};

using OrientationPredicate = std::function<bool(const DirectedNetwork&)>;

/// Decides tree-child orientability of a binary network. On success the solution
/// is the lexicographically least (root edge, sorted reticulation set).
SolverReport tree_child_orient(const UndirectedNetwork& net, const SearchLimits& limits = {});

/// Same search for an arbitrary class of networks given by `predicate`; only
/// class-independent pruning is applied.
SolverReport orient_with_predicate(const UndirectedNetwork& net, const OrientationPredicate& predicate,
                                   const SearchLimits& limits = {});

struct OrientationRecord {
  Edge root_edge;
  std::vector<VertexId> reticulations;
  DirectedNetwork network;
};

/// Every tree-child orientation, ordered by (root edge, reticulation set).
std::vector<OrientationRecord> enumerate_tree_child_orientations(const UndirectedNetwork& net,
                                                                 const SearchLimits& limits = {});

struct LeafPlacement {
  std::string label;
  std::string host_u;
  std::string host_v;
};

/// Calls `visit(network, placements)` for every way of attaching `count` new
/// leaves one after another, each to an edge of the current graph. Sequences
/// are generated with non-decreasing host index (edges created by a subdivision
/// are appended to the edge order), which still reaches every resulting graph.
/// `visit` returns false to stop early. Returns false if stopped.
bool for_each_leaf_placement(
    const UndirectedNetwork& net, std::size_t count,
    const std::function<bool(const UndirectedNetwork&, const std::vector<LeafPlacement>&)>& visit);

/// Number of sequences for_each_leaf_placement would visit.
double count_leaf_placements(std::size_t edge_count, std::size_t count);

struct AugmentationResult {
  std::size_t added = 0;
  std::vector<LeafPlacement> placements;
  UndirectedNetwork network;
  SolverReport report;
};

/// Smallest number of attached leaves (at most max_added) making `net` tree-child
/// orientable, found by exhaustive search over placements. nullopt if none.
std::optional<AugmentationResult> minimum_leaf_augmentation(const UndirectedNetwork& net, std::size_t max_added,
                                                            const SearchLimits& limits = {});

}  // namespace phylorient
