#include "doctest.h"
#include "helpers.hpp"
#include "phylorient/conditions.hpp"
#include "phylorient/families.hpp"
#include "phylorient/solver.hpp"

using namespace phylorient;

TEST_CASE("ladder counts") {
  for (std::size_t k = 1; k <= 12; ++k) {
    const auto net = ladder(k);
    CHECK(net.vertex_count() == 2 * k + 6);
    CHECK(net.edge_count() == 3 * k + 5);
    CHECK(circuit_rank(net) == k);
    CHECK(net.is_binary());
    CHECK(net.leaf_count() == 4);
  }
  const auto l5 = ladder(5);
  CHECK(l5.vertex_count() == 16);
  CHECK(l5.edge_count() == 20);
  const auto l1 = ladder(1);
  for (VertexId v = 0; v < l1.vertex_count(); ++v) CHECK((l1.is_leaf(v) || l1.degree(v) == 3));
  CHECK(ladder(3).edge_count() == 5 * 4 - 6);
  CHECK(l5.has_edge(l5.edge_between("t6", "b6")));
}

TEST_CASE("jellyfish counts") {
  const auto j1 = jellyfish(1);
  CHECK(j1.vertex_count() == 8);
  CHECK(j1.edge_count() == 11);
  CHECK(j1.degree(*j1.find("y1")) == 3);
  const auto j5 = jellyfish(5);
  CHECK(j5.vertex_count() == 16);
  CHECK(j5.edge_count() == 19);
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto net = jellyfish(k);
    CHECK(net.vertex_count() == 2 * k + 6);
    CHECK(net.edge_count() == 2 * k + 9);
    CHECK(circuit_rank(net) == 4);
    CHECK(net.is_binary());
  }
}

TEST_CASE("invalid family parameters") {
  CHECK_THROWS_AS(ladder(0), NetworkError);
  CHECK_THROWS_AS(jellyfish(0), NetworkError);
  CHECK_THROWS_AS(augmented_ladder(0), NetworkError);
  CHECK_THROWS_AS(random_binary_network(1, 1, 0), NetworkError);
  CHECK_THROWS_AS(random_binary_network(1, 2, 1), NetworkError);
}

TEST_CASE("ladders are tree-child orientable iff k <= 3") {
  for (std::size_t k = 1; k <= 8; ++k) CHECK(tree_child_orient(ladder(k)).orientable() == (k <= 3));
}

TEST_CASE("jellyfish are orientable but not tree-child orientable") {
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto net = jellyfish(k);
    CHECK(orient_with_predicate(net, [](const DirectedNetwork&) { return true; }).orientable());
    CHECK_FALSE(tree_child_orient(net).orientable());
  }
}

TEST_CASE("augmented ladder construction") {
  SUBCASE("k = 10") {
    const auto [net, cert] = augmented_ladder(10);
    CHECK(cert.added_leaves.size() == 7);
    CHECK(net.leaf_count() == 11);
    CHECK(net.edge_count() == 49);
    CHECK(net.edge_count() == 5 * net.leaf_count() - 6);
    CHECK(verify_certificate(net, cert));
    CHECK(cert.root_edge == std::pair<std::string, std::string>{"t8", "b8"});
  }
  SUBCASE("k = 7 is odd") {
    const auto [net, cert] = augmented_ladder(7);
    for (const char* name : {"t5", "b7", "b8"})
      CHECK(std::find(cert.reticulations.begin(), cert.reticulations.end(), name) != cert.reticulations.end());
    CHECK(verify_certificate(net, cert));
  }
  SUBCASE("k = 6 is even") {
    const auto [net, cert] = augmented_ladder(6);
    for (const char* name : {"b4", "t6", "t7"})
      CHECK(std::find(cert.reticulations.begin(), cert.reticulations.end(), name) != cert.reticulations.end());
  }
}

TEST_CASE("augmented ladder certificates verify for k = 6..16") {
  for (std::size_t k = 6; k <= 16; ++k) {
    CAPTURE(k);
    const auto [net, cert] = augmented_ladder(k);
    CHECK(cert.added_leaves.size() == k - 3);
    CHECK(cert.reticulations.size() == k);
    CHECK(net.edge_count() == 5 * net.leaf_count() - 6);
    REQUIRE(verify_certificate(net, cert));
    const auto dag = certificate_orientation(net, cert);
    CHECK(is_tree_child(dag));
    const auto reticulations = dag.reticulations();
    CHECK(reticulations.size() == k);
    for (VertexId r : reticulations) {
      for (VertexId s : reticulations) {
        if (r >= s) continue;
        for (VertexId p : dag.parents(r)) CHECK(p != s);
        for (VertexId p : dag.parents(s)) CHECK(p != r);
        for (VertexId p : dag.parents(r))
          for (VertexId q : dag.parents(s)) CHECK(p != q);
      }
    }
  }
}

TEST_CASE("augmented ladder below the regular range") {
  for (std::size_t k = 1; k <= 5; ++k) {
    CAPTURE(k);
    const auto [net, cert] = augmented_ladder(k);
    CHECK(cert.added_leaves.size() == (k > 3 ? k - 3 : 0));
    CHECK(verify_certificate(net, cert));
  }
}

TEST_CASE("certificates naming unknown vertices are rejected") {
  auto [net, cert] = augmented_ladder(6);
  cert.reticulations.push_back("nowhere");
  CHECK_THROWS_AS(certificate_constraints(net, cert), NetworkError);
  auto [net2, cert2] = augmented_ladder(6);
  cert2.reticulations.back() = cert2.reticulations.front();  // one reticulation short
  CHECK_FALSE(verify_certificate(net2, cert2));
}

TEST_CASE("random networks") {
  for (std::size_t leaves = 2; leaves <= 8; ++leaves) {
    for (std::size_t rank = 0; rank <= 4; ++rank) {
      if (leaves < 3 && rank > 0) continue;
      const auto net = random_binary_network(leaves * 31 + rank, leaves, rank);
      CHECK(net.leaf_count() == leaves);
      CHECK(circuit_rank(net) == rank);
      CHECK(net.is_binary());
      CHECK(net.edge_count() == 2 * leaves - 3 + 3 * rank);
    }
  }
  CHECK(random_binary_network(42, 6, 3) == random_binary_network(42, 6, 3));
  CHECK_FALSE(random_binary_network(42, 6, 3) == random_binary_network(43, 6, 3));
}
