#include "doctest.h"
#include "helpers.hpp"
#include "phylorient/oracle.hpp"

using namespace phylorient;
using testing::make_dag;
using testing::make_net;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const NetworkError& e) {
    return e.kind();
  }
  FAIL("no NetworkError thrown");
  return ErrorKind::Empty;
}

}  // namespace

TEST_CASE("ladder L_3 edge list validates as binary with 12 vertices and 14 edges") {
  const auto raw = ladder(3).to_raw();
  const auto net = validate_undirected(raw, {.require_binary = true});
  CHECK(net.vertex_count() == 12);
  CHECK(net.edge_count() == 14);
  CHECK(net.is_binary());
  CHECK(net.leaf_count() == 4);
}

TEST_CASE("internal vertex of degree two is rejected") {
  try {
    make_net({"a", "b"}, {{"a", "u"}, {"u", "b"}});
    FAIL("expected DegreeViolation");
  } catch (const NetworkError& e) {
    CHECK(e.kind() == ErrorKind::DegreeViolation);
    CHECK(e.vertex() == "u");
    CHECK(e.degree() == 2);
  }
}

TEST_CASE("a single edge between two leaves is valid") {
  const auto net = make_net({"a", "b"}, {{"a", "b"}});
  CHECK(net.vertex_count() == 2);
  CHECK(net.edge_count() == 1);
  CHECK(circuit_rank(net) == 0);
}

TEST_CASE("undirected validation errors") {
  CHECK(kind_of([] { make_net({"a", "b"}, {{"a", "a"}, {"a", "b"}}); }) == ErrorKind::HasLoop);
  CHECK(kind_of([] { make_net({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorKind::HasParallelEdge);
  CHECK(kind_of([] { make_net({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}); }) == ErrorKind::Disconnected);
  CHECK(kind_of([] { make_net({"a", "b"}, {{"a", "u"}, {"u", "b"}, {"u", "w"}}); }) ==
        ErrorKind::UnlabeledDegreeOneVertex);
  CHECK(kind_of([] { make_net({}, {}); }) == ErrorKind::Empty);
  CHECK(kind_of([] { make_net({"a", "b"}, {{"a", "b"}, {"a", "c"}}); }) == ErrorKind::DegreeViolation);
  CHECK(kind_of([] { make_net({"a", "a"}, {{"a", "b"}}); }) == ErrorKind::DuplicateLabel);
}

TEST_CASE("a network with one leaf needs the single-leaf relaxation") {
  const auto j1 = jellyfish(1);
  CHECK(j1.leaf_count() == 1);
  CHECK(kind_of([&] { UndirectedNetwork::from_raw(j1.to_raw()); }) == ErrorKind::TooFewLeaves);
  CHECK_NOTHROW(UndirectedNetwork::from_raw(j1.to_raw(), {.allow_single_leaf = true}));
}

TEST_CASE("non-binary networks validate unless binary is required") {
  const auto star = make_net({"a", "b", "c", "d"}, {{"a", "u"}, {"b", "u"}, {"c", "u"}, {"d", "u"}});
  CHECK_FALSE(star.is_binary());
  CHECK(kind_of([] { make_net({"a", "b", "c", "d"}, {{"a", "u"}, {"b", "u"}, {"c", "u"}, {"d", "u"}},
                              {.require_binary = true}); }) == ErrorKind::DegreeViolation);
}

TEST_CASE("ids follow first appearance and an explicit vertices list") {
  const auto net = make_net({"b", "a", "c"}, {{"a", "u"}, {"u", "b"}, {"u", "c"}});
  CHECK(net.name(0) == "b");
  CHECK(net.name(1) == "a");
  CHECK(net.name(2) == "c");
  CHECK(net.name(3) == "u");
  const auto fixed = UndirectedNetwork::from_raw({{"u", "a", "b", "c"}, {"a", "b", "c"}, {{"a", "u"}, {"u", "b"}, {"u", "c"}}});
  CHECK(fixed.name(0) == "u");
  CHECK(fixed.leaves() == std::vector<VertexId>{1, 2, 3});
}

TEST_CASE("leaf distances on small instances") {
  SUBCASE("cherry") {
    const auto net = make_net({"x", "y", "z"}, {{"x", "p"}, {"y", "p"}, {"z", "p"}});
    const auto d = leaf_distances(net);
    CHECK(d[0][1] == 2);
    CHECK(d[0][0] == 0);
  }
  SUBCASE("ladder L_1") {
    const auto net = ladder(1);
    const auto d = leaf_distances(net);
    const auto pos = [&](std::string_view name) {
      const auto v = *net.find(name);
      return std::find(net.leaves().begin(), net.leaves().end(), v) - net.leaves().begin();
    };
    CHECK(d[pos("a")][pos("b")] == 3);
  }
  SUBCASE("jellyfish J_2") {
    const auto net = jellyfish(2);
    const auto d = leaf_distances(net);
    CHECK(d[0][1] == 3);
    CHECK(d[1][0] == 3);
  }
}

TEST_CASE("leaf distances agree with Floyd-Warshall") {
  std::size_t checked = 0;
  for (const auto& net : testing::random_corpus(60, 40, 7001)) {
    if (net.vertex_count() > 50) continue;
    const auto fw = testing::floyd_warshall(net);
    const auto d = leaf_distances(net);
    const auto& leaves = net.leaves();
    for (std::size_t i = 0; i < leaves.size(); ++i)
      for (std::size_t j = 0; j < leaves.size(); ++j) {
        CHECK(d[i][j] == fw[leaves[i]][leaves[j]]);
        CHECK(d[i][j] == d[j][i]);
      }
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("insert_root subdivides the chosen edge") {
  const auto l3 = ladder(3);
  for (const Edge& e : l3.edges()) {
    const auto g = insert_root(l3, e);
    CHECK(g.vertex_count() == 13);
    CHECK(g.edge_count() == 15);
    CHECK(g.adjacency[g.root].size() == 2);
    CHECK(g.names[g.root] == "rho");
    for (VertexId v = 0; v < l3.vertex_count(); ++v) CHECK(g.adjacency[v].size() == l3.degree(v));
  }
  SUBCASE("pendant edge") {
    const auto e = l3.edge_between("a", "t1");
    const auto g = insert_root(l3, e);
    auto nbrs = g.adjacency[g.root];
    std::sort(nbrs.begin(), nbrs.end());
    CHECK(nbrs == std::vector<VertexId>{*l3.find("a"), *l3.find("t1")});
  }
  SUBCASE("J_1") {
    const auto j1 = jellyfish(1);
    const auto g = insert_root(j1, j1.edges().front());
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 12);
  }
  SUBCASE("missing edge") {
    CHECK(kind_of([&] { insert_root(l3, Edge::make(*l3.find("a"), *l3.find("b"))); }) == ErrorKind::EdgeNotFound);
  }
  SUBCASE("root name avoids collisions") {
    const auto net = make_net({"rho", "b", "c"}, {{"rho", "u"}, {"u", "b"}, {"u", "c"}});
    const auto g = insert_root(net, net.edges().front());
    CHECK(g.names[g.root] == "rho_1");
  }
}

TEST_CASE("contract_root inverts insert_root") {
  for (const auto& net : testing::random_corpus(20, 30, 11)) {
    for (const Edge& e : net.edges()) CHECK(contract_root(insert_root(net, e), net.options()) == net);
  }
  const auto l3 = ladder(3);
  for (const Edge& e : l3.edges()) CHECK(contract_root(insert_root(l3, e)) == l3);
}

TEST_CASE("attach_leaf") {
  SUBCASE("L_5 plus a leaf on (b1, b2)") {
    const auto l5 = ladder(5);
    const auto out = attach_leaf(l5, l5.edge_between("b1", "b2"), "x1");
    CHECK(out.edge_count() == 22);
    CHECK(out.leaf_count() == 5);
    CHECK(out.vertex_count() == l5.vertex_count() + 2);
    CHECK(out.is_binary());
    CHECK(out.name(static_cast<VertexId>(l5.vertex_count())) == "p_x1");
    CHECK(out.name(static_cast<VertexId>(l5.vertex_count() + 1)) == "x1");
    CHECK(out.has_edge(out.edge_between("b1", "p_x1")));
    CHECK(out.has_edge(out.edge_between("p_x1", "b2")));
  }
  SUBCASE("pendant edge of a cherry") {
    const auto net = make_net({"x", "y", "z"}, {{"x", "p"}, {"y", "p"}, {"z", "p"}});
    const auto out = attach_leaf(net, net.edge_between("x", "p"), "w");
    CHECK(out.is_binary());
    CHECK(out.leaf_count() == 4);
  }
  SUBCASE("L_10 with seven leaves") {
    const auto [net, cert] = augmented_ladder(10);
    CHECK(cert.added_leaves.size() == 7);
    CHECK(net.leaf_count() == 11);
    CHECK(net.edge_count() == 49);
  }
  SUBCASE("errors") {
    const auto l2 = ladder(2);
    CHECK(kind_of([&] { attach_leaf(l2, l2.edge_between("t1", "b1"), "a"); }) == ErrorKind::DuplicateLabel);
    CHECK(kind_of([&] { attach_leaf(l2, Edge::make(*l2.find("a"), *l2.find("c")), "x"); }) == ErrorKind::EdgeNotFound);
  }
}

TEST_CASE("attach_leaf never changes the circuit rank") {
  for (const auto& net : testing::random_corpus(30, 25, 404)) {
    const auto rank = circuit_rank(net);
    for (std::size_t i = 0; i < net.edges().size(); i += 3)
      CHECK(circuit_rank(attach_leaf(net, net.edges()[i], "new_leaf")) == rank);
  }
}

TEST_CASE("circuit rank of the families and of trees") {
  for (std::size_t k = 1; k <= 8; ++k) {
    CHECK(circuit_rank(jellyfish(k)) == 4);
    CHECK(circuit_rank(ladder(k)) == k);
  }
  for (std::size_t leaves = 2; leaves <= 10; ++leaves) CHECK(circuit_rank(random_binary_network(leaves, leaves, 0)) == 0);
}

TEST_CASE("network_stats identities") {
  SUBCASE("cherry tree") {
    const auto dag = make_dag("r", {"x1", "x2"}, {{"r", "x1"}, {"r", "x2"}});
    const auto s = network_stats(dag);
    CHECK(s.n_tree_vertices == 0);
    CHECK(s.n_vertices == 3);
    CHECK(s.n_arcs == 2);
  }
  auto first_orientation = [](const UndirectedNetwork& net) {
    std::optional<DirectedNetwork> found;
    for_each_binary_orientation(net, net.edges().front(), [&](std::span<const Arc> arcs) {
      if (!found) found = testing::dag_from_arcs(net, net.edges().front(), arcs);
    });
    REQUIRE(found);
    return *found;
  };
  SUBCASE("|X| = 3, r = 3") {
    const auto s = network_stats(first_orientation(random_binary_network(5, 3, 3)));
    CHECK(s.n_leaves == 3);
    CHECK(s.n_reticulations == 3);
    CHECK(s.n_tree_vertices == 4);
    CHECK(s.n_vertices == 11);
    CHECK(s.n_arcs == 13);
  }
  SUBCASE("|X| = 5, r = 4") {
    const auto s = network_stats(first_orientation(random_binary_network(6, 5, 4)));
    CHECK(s.n_tree_vertices == 7);
    CHECK(s.n_arcs == 20);
  }
}

TEST_CASE("directed validation") {
  CHECK_NOTHROW(make_dag("r", {"x", "y", "z"}, {{"r", "x"}, {"r", "u"}, {"u", "y"}, {"u", "z"}}));
  SUBCASE("cycle") {
    CHECK(kind_of([] {
            make_dag("r", {"x1", "x2", "x3"},
                     {{"r", "x1"}, {"r", "u"}, {"u", "v"}, {"v", "w"}, {"w", "u"}, {"v", "x2"}, {"w", "x3"}});
          }) == ErrorKind::Cyclic);
  }
  SUBCASE("root with one child") {
    CHECK(kind_of([] { make_dag("r", {"x", "y"}, {{"r", "u"}, {"u", "x"}, {"u", "y"}}); }) == ErrorKind::RootViolation);
  }
  SUBCASE("leaf with a child") {
    CHECK(kind_of([] { make_dag("r", {"x", "y"}, {{"r", "x"}, {"r", "u"}, {"x", "y"}, {"u", "y"}}); }) ==
          ErrorKind::DegreeViolation);
  }
  SUBCASE("second source") {
    CHECK(kind_of([] {
            make_dag("r", {"x", "y"}, {{"r", "p"}, {"r", "q"}, {"s", "p"}, {"s", "q"}, {"p", "x"}, {"q", "y"}});
          }) == ErrorKind::RootViolation);
  }
}

TEST_CASE("directed network roles") {
  const auto dag = make_dag("r", {"x", "y", "z"},
                            {{"r", "u"}, {"r", "v"}, {"u", "x"}, {"u", "h"}, {"v", "h"}, {"v", "z"}, {"h", "y"}});
  CHECK(dag.is_binary());
  CHECK(dag.is_reticulation(*dag.find("h")));
  CHECK(dag.is_tree_vertex(*dag.find("u")));
  CHECK(dag.is_leaf(*dag.find("x")));
  CHECK(dag.reticulations() == std::vector<VertexId>{*dag.find("h")});
  const auto g = underlying_graph(dag);
  CHECK(g.edge_count() == 7);
  CHECK(g.root == *dag.find("r"));
}
