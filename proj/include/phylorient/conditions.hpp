#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "phylorient/graph.hpp"

namespace phylorient {

using LeafPair = std::pair<VertexId, VertexId>;

/// Every vertex with children has at least one child of in-degree one
/// (a tree vertex or a leaf).
bool is_tree_child(const DirectedNetwork& net);

/// Same test on a bare arc list over `vertex_count` vertices.
bool is_tree_child(std::size_t vertex_count, std::span<const Arc> arcs);

/// |E| <= 5|X| - 6. Violations rule out a tree-child orientation.
bool check_edge_bound(const UndirectedNetwork& net);

/// Some pair of leaves lies at distance 2 or 3.
bool check_leaf_distance(const UndirectedNetwork& net);

/// Leaf pairs sharing a parent, each as (smaller id, larger id), sorted.
std::vector<LeafPair> find_cherries(const DirectedNetwork& net);

/// Leaf pairs joined by a path x - p - q - y in the underlying graph where
/// exactly one of p, q is a reticulation. Sorted, (smaller id, larger id).
std::vector<LeafPair> find_reticulated_cherries(const DirectedNetwork& net);

/// Both children of the root being reticulations is impossible in any
/// orientation; this checks the positive form.
bool root_has_tree_child(const DirectedNetwork& net);

struct ConditionReport {
  bool edge_bound_ok = false;
  bool leaf_distance_ok = false;
  std::size_t reticulation_count = 0;
  std::size_t leaf_count = 0;
  std::size_t edge_count = 0;
  std::size_t vertex_count = 0;
  /// Machine-readable names of failed checks: "edge_bound", "leaf_distance".
  std::vector<std::string> failures;
  std::vector<std::string> details;

  bool passes() const { return failures.empty(); }
};

ConditionReport condition_report(const UndirectedNetwork& net);

}  // namespace phylorient
