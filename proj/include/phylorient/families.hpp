#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "phylorient/constrained_orient.hpp"
#include "phylorient/graph.hpp"
#include "phylorient/solver.hpp"

namespace phylorient {

/// Ladder L_k: rails a t1 ... t(k+1) c and b b1 ... b(k+1) d with rungs (ti, bi)
/// for i = 1..k+1. Circuit rank k, 2k+6 vertices, 3k+5 edges.
///
/// k+1 rungs are required: with only k, t(k+1) and b(k+1) would have degree two.
UndirectedNetwork ladder(std::size_t k);

/// Jellyfish J_k: leaves x1..xk pendant to a tentacle path y1..yk, whose two ends
/// attach to a six-vertex body. The body is K4 on u1..u4 with the disjoint edges
/// u1u2 and u3u4 subdivided by u5 and u6; y1 attaches to u5 and yk to u6.
/// 2k+6 vertices, 2k+9 edges, circuit rank 4. J_1 has a single leaf and is
/// built with ValidationOptions::allow_single_leaf.
UndirectedNetwork jellyfish(std::size_t k);

struct AugmentationCertificate {
  std::pair<std::string, std::string> root_edge;
  std::vector<std::string> reticulations;
  std::vector<LeafPlacement> added_leaves;
};

/// Ladder with k-3 added leaves and the root/reticulation allocation that makes
/// it tree-child. For k >= 6 this is the explicit construction (root edge
/// (t(k-2), b(k-2))); for k <= 5 the placement comes from exhaustive search.
std::pair<UndirectedNetwork, AugmentationCertificate> augmented_ladder(std::size_t k);

/// Constraints encoded by a certificate, resolved against `net`.
OrientationConstraints certificate_constraints(const UndirectedNetwork& net, const AugmentationCertificate& cert);

/// Orients `net` per the certificate; throws std::runtime_error if infeasible.
DirectedNetwork certificate_orientation(const UndirectedNetwork& net, const AugmentationCertificate& cert);

/// orient() succeeds, the result is tree-child, and there are exactly as many
/// reticulations as the circuit rank.
bool verify_certificate(const UndirectedNetwork& net, const AugmentationCertificate& cert);

/// Random connected binary network: a random unrooted binary tree on `leaves`
/// leaves plus `rank` extra edges, each joining the midpoints of two distinct
/// random edges. Deterministic in `seed`.
UndirectedNetwork random_binary_network(std::uint64_t seed, std::size_t leaves, std::size_t rank);

}  // namespace phylorient
