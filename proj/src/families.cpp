#include "phylorient/families.hpp"

#include <random>
#include <stdexcept>

#include "phylorient/conditions.hpp"

namespace phylorient {

namespace {

std::string t(std::size_t i) { return "t" + std::to_string(i); }
std::string b(std::size_t i) { return "b" + std::to_string(i); }
std::string x(std::size_t i) { return "x" + std::to_string(i); }

void require_positive(std::size_t k, const char* family) {
  if (k == 0) throw NetworkError(ErrorKind::InvalidParameter, std::string(family) + " needs k >= 1");
}

}  // namespace

UndirectedNetwork ladder(std::size_t k) {
  require_positive(k, "ladder");
  RawGraph raw;
  raw.leaves = {"a", "b", "c", "d"};
  raw.vertices = raw.leaves;
  for (std::size_t i = 1; i <= k + 1; ++i) raw.vertices.push_back(t(i));
  for (std::size_t i = 1; i <= k + 1; ++i) raw.vertices.push_back(b(i));

  raw.edges.emplace_back("a", t(1));
  raw.edges.emplace_back("b", b(1));
  for (std::size_t i = 1; i <= k; ++i) {
    raw.edges.emplace_back(t(i), t(i + 1));
    raw.edges.emplace_back(b(i), b(i + 1));
  }
  raw.edges.emplace_back(t(k + 1), "c");
  raw.edges.emplace_back(b(k + 1), "d");
  for (std::size_t i = 1; i <= k + 1; ++i) raw.edges.emplace_back(t(i), b(i));
  return UndirectedNetwork::from_raw(raw, {.require_binary = true});
}

UndirectedNetwork jellyfish(std::size_t k) {
  require_positive(k, "jellyfish");
  RawGraph raw;
  for (std::size_t i = 1; i <= k; ++i) raw.leaves.push_back(x(i));
  raw.vertices = raw.leaves;
  for (std::size_t i = 1; i <= k; ++i) raw.vertices.push_back("y" + std::to_string(i));
  for (int i = 1; i <= 6; ++i) raw.vertices.push_back("u" + std::to_string(i));

  for (std::size_t i = 1; i <= k; ++i) raw.edges.emplace_back(x(i), "y" + std::to_string(i));
  for (std::size_t i = 1; i < k; ++i) raw.edges.emplace_back("y" + std::to_string(i), "y" + std::to_string(i + 1));
  raw.edges.emplace_back("y1", "u5");
  raw.edges.emplace_back("y" + std::to_string(k), "u6");
  for (auto [p, q] : {std::pair{"u1", "u3"}, {"u1", "u4"}, {"u2", "u3"}, {"u2", "u4"}, {"u1", "u5"}, {"u5", "u2"},
                      {"u3", "u6"}, {"u6", "u4"}})
    raw.edges.emplace_back(p, q);
  return UndirectedNetwork::from_raw(raw, {.allow_single_leaf = true, .require_binary = true});
}

std::pair<UndirectedNetwork, AugmentationCertificate> augmented_ladder(std::size_t k) {
  require_positive(k, "augmented ladder");
  const UndirectedNetwork base = ladder(k);
  AugmentationCertificate cert;

  if (k < 6) {
    // The explicit index ranges degenerate below k = 6; search instead.
    const std::size_t needed = k > 3 ? k - 3 : 0;
    auto found = minimum_leaf_augmentation(base, needed);
    if (!found || found->added != needed)
      throw std::logic_error("exhaustive augmentation did not find " + std::to_string(needed) + " leaves");
    const auto& report = found->report;
    cert.root_edge = {found->network.name(report.root_edge->u), found->network.name(report.root_edge->v)};
    for (VertexId v : report.reticulations) cert.reticulations.push_back(found->network.name(v));
    cert.added_leaves = found->placements;
    return {found->network, cert};
  }

  // Host edges all come from the original ladder and are pairwise distinct, so
  // rail names resolve directly.
  auto add = [&](std::size_t i, std::string u, std::string v) { cert.added_leaves.push_back({x(i), u, v}); };
  add(1, b(1), b(2));
  const std::size_t even_count = (k - 4) / 2;  // ceil((k-3)/2 - 1)
  const std::size_t odd_count = (k - 5) / 2;   // floor((k-3)/2 - 1)
  for (std::size_t j = 1; j <= even_count; ++j) add(2 * j, t(2 * j + 1), t(2 * j + 2));
  for (std::size_t j = 1; j <= odd_count; ++j) add(2 * j + 1, b(2 * j + 2), b(2 * j + 3));
  if (k % 2 == 1)
    add(k - 3, b(k), b(k + 1));
  else
    add(k - 3, t(k), t(k + 1));

  UndirectedNetwork net = base;
  for (const auto& leaf : cert.added_leaves) net = attach_leaf(net, net.edge_between(leaf.host_u, leaf.host_v), leaf.label);

  cert.root_edge = {t(k - 2), b(k - 2)};
  for (std::size_t i = 2; i <= k - 4; ++i) cert.reticulations.push_back("p_" + x(i));
  cert.reticulations.push_back(b(1));
  cert.reticulations.push_back(b(2));
  if (k % 2 == 1) {
    cert.reticulations.push_back(t(k - 2));
    cert.reticulations.push_back(b(k));
    cert.reticulations.push_back(b(k + 1));
  } else {
    cert.reticulations.push_back(b(k - 2));
    cert.reticulations.push_back(t(k));
    cert.reticulations.push_back(t(k + 1));
  }
  return {net, cert};
}

OrientationConstraints certificate_constraints(const UndirectedNetwork& net, const AugmentationCertificate& cert) {
  const Edge root_edge = net.edge_between(cert.root_edge.first, cert.root_edge.second);
  std::vector<VertexId> reticulations;
  for (const auto& name : cert.reticulations) {
    auto v = net.find(name);
    if (!v) throw NetworkError(ErrorKind::UnknownVertex, "certificate names unknown vertex '" + name + "'", name);
    reticulations.push_back(*v);
  }
  return reticulation_constraints(net, root_edge, reticulations);
}

DirectedNetwork certificate_orientation(const UndirectedNetwork& net, const AugmentationCertificate& cert) {
  auto result = orient(net, certificate_constraints(net, cert));
  if (auto* oriented = std::get_if<DirectedNetwork>(&result)) return std::move(*oriented);
  throw std::runtime_error("certificate constraints admit no orientation");
}

bool verify_certificate(const UndirectedNetwork& net, const AugmentationCertificate& cert) {
  const auto constraints = certificate_constraints(net, cert);
  auto result = orient(net, constraints);
  const auto* oriented = std::get_if<DirectedNetwork>(&result);
  return oriented && is_tree_child(*oriented) && verify_orientation(*oriented, net, constraints) &&
         oriented->reticulations().size() == circuit_rank(net) && cert.reticulations.size() == circuit_rank(net);
}

UndirectedNetwork random_binary_network(std::uint64_t seed, std::size_t leaves, std::size_t rank) {
  if (leaves < 2) throw NetworkError(ErrorKind::InvalidParameter, "random networks need at least two leaves");
  if (leaves < 3 && rank > 0)
    throw NetworkError(ErrorKind::InvalidParameter, "random networks with cycles need at least three leaves");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::string, std::string>> edges{{"l1", "l2"}};
  std::size_t internal = 0;
  auto fresh = [&] { return "v" + std::to_string(++internal); };
  auto pick = [&] { return std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng); };

  // Grow an unrooted binary tree by hanging each new leaf off a random edge.
  for (std::size_t i = 3; i <= leaves; ++i) {
    const std::size_t at = pick();
    const auto [u, v] = edges[at];
    const std::string mid = fresh();
    edges[at] = {u, mid};
    edges.emplace_back(mid, v);
    edges.emplace_back(mid, "l" + std::to_string(i));
  }
  // Each extra edge joins the midpoints of two distinct edges; rank rises by one.
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t first = pick();
    std::size_t second = pick();
    while (second == first) second = pick();
    const auto [u1, v1] = edges[first];
    const auto [u2, v2] = edges[second];
    const std::string m1 = fresh();
    const std::string m2 = fresh();
    edges[first] = {u1, m1};
    edges[second] = {u2, m2};
    edges.emplace_back(m1, v1);
    edges.emplace_back(m2, v2);
    edges.emplace_back(m1, m2);
  }
  RawGraph raw;
  for (std::size_t i = 1; i <= leaves; ++i) raw.leaves.push_back("l" + std::to_string(i));
  raw.edges = std::move(edges);
  return UndirectedNetwork::from_raw(raw, {.require_binary = true});
}

}  // namespace phylorient
