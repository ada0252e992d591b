#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "phylorient/constrained_orient.hpp"
#include "phylorient/graph.hpp"
#include "phylorient/solver.hpp"

// Exhaustive arc-assignment enumeration. Shares nothing with the propagation
// engine so it can serve as an independent check on it.
namespace phylorient {

inline constexpr std::size_t kBruteForceMaxEdges = 22;

/// Visits every assignment of directions to the edges of N_rho that forms a valid
/// binary directed phylogenetic network (root (0,2), leaves (1,0), all other
/// vertices (1,2) or (2,1), acyclic). Arc ids use N_rho's numbering (root last).
void for_each_binary_orientation(const UndirectedNetwork& net, Edge root_edge,
                                 const std::function<void(std::span<const Arc>)>& visit);

/// Number of acyclic orientations of N_rho with the root arcs pointing away
/// and in-degrees exactly as given.
std::size_t count_constrained_orientations(const UndirectedNetwork& net, const OrientationConstraints& constraints);

/// Brute-force counterpart of tree_child_orient; same lexicographic tie-breaking.
/// Throws SizeGuardExceeded above kBruteForceMaxEdges edges.
SolverReport brute_force_tree_child(const UndirectedNetwork& net);

}  // namespace phylorient
