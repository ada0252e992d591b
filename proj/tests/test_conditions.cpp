#include "doctest.h"
#include "helpers.hpp"
#include "phylorient/conditions.hpp"
#include "phylorient/solver.hpp"

using namespace phylorient;
using testing::make_dag;
using testing::make_net;

namespace {

LeafPair pair_of(const DirectedNetwork& net, const char* a, const char* b) {
  const VertexId x = *net.find(a);
  const VertexId y = *net.find(b);
  return {std::min(x, y), std::max(x, y)};
}

// Cherry {x4, x5}; reticulated cherry {x1, x2} through the reticulation h.
DirectedNetwork cherry_example() {
  return make_dag("r", {"x1", "x2", "x4", "x5"},
                  {{"r", "p"}, {"r", "q"}, {"p", "x1"}, {"p", "h"}, {"q", "h"}, {"q", "s"}, {"h", "x2"}, {"s", "x4"},
                   {"s", "x5"}});
}

}  // namespace

TEST_CASE("is_tree_child") {
  SUBCASE("reticulation above a leaf") {
    const auto dag = cherry_example();
    CHECK(is_tree_child(dag));
    CHECK(is_tree_child(dag.vertex_count(), dag.arcs()));
  }
  SUBCASE("rooted binary tree") {
    const auto dag = make_dag("r", {"x1", "x2", "x3"}, {{"r", "u"}, {"r", "x3"}, {"u", "x1"}, {"u", "x2"}});
    CHECK(is_tree_child(dag));
  }
  SUBCASE("adjacent reticulations") {
    const auto dag = make_dag("r", {"x1", "x2", "x3"},
                              {{"r", "u"}, {"r", "v"}, {"u", "h1"}, {"u", "w"}, {"v", "h1"}, {"v", "h2"}, {"h1", "h2"},
                               {"h2", "x1"}, {"w", "x2"}, {"w", "x3"}});
    CHECK_FALSE(is_tree_child(dag));
    CHECK_FALSE(is_tree_child(dag.vertex_count(), dag.arcs()));
  }
}

TEST_CASE("edge bound") {
  const auto tight = random_binary_network(17, 3, 2);
  CHECK(tight.leaf_count() == 3);
  CHECK(tight.edge_count() == 9);
  CHECK(check_edge_bound(tight));
  CHECK_FALSE(check_edge_bound(ladder(4)));
  CHECK(ladder(3).edge_count() == 14);
  CHECK(check_edge_bound(ladder(3)));
  CHECK_FALSE(check_edge_bound(random_binary_network(17, 3, 3)));
}

TEST_CASE("leaf distance condition") {
  CHECK(check_leaf_distance(make_net({"x", "y", "z"}, {{"x", "p"}, {"y", "p"}, {"z", "p"}})));
  CHECK(check_leaf_distance(jellyfish(2)));
  CHECK_FALSE(check_leaf_distance(jellyfish(1)));
}

TEST_CASE("leaf distance condition matches all-pairs distances") {
  for (const auto& net : testing::random_corpus(80, 30, 555)) {
    const auto d = testing::floyd_warshall(net);
    bool expected = false;
    for (VertexId x : net.leaves())
      for (VertexId y : net.leaves())
        if (x < y && (d[x][y] == 2 || d[x][y] == 3)) expected = true;
    CHECK(check_leaf_distance(net) == expected);
  }
}

TEST_CASE("cherries") {
  const auto dag = cherry_example();
  CHECK(find_cherries(dag) == std::vector<LeafPair>{pair_of(dag, "x4", "x5")});
  CHECK(find_reticulated_cherries(dag) == std::vector<LeafPair>{pair_of(dag, "x1", "x2")});

  const auto triple = make_dag("r", {"x1", "x2", "x3"}, {{"r", "u"}, {"r", "x3"}, {"u", "x1"}, {"u", "x2"}});
  CHECK(find_cherries(triple) == std::vector<LeafPair>{pair_of(triple, "x1", "x2")});
  CHECK(find_reticulated_cherries(triple).empty());
}

TEST_CASE("no cherry when every leaf has its own parent") {
  // r -> u, v; u -> x1, h; v -> h, x3; h -> x2. Parents of x1, x2, x3 are u, h, v.
  const auto dag = make_dag("r", {"x1", "x2", "x3"},
                            {{"r", "u"}, {"r", "v"}, {"u", "x1"}, {"u", "h"}, {"v", "h"}, {"v", "x3"}, {"h", "x2"}});
  CHECK(find_cherries(dag).empty());
  const auto rc = find_reticulated_cherries(dag);
  CHECK(rc == std::vector<LeafPair>{pair_of(dag, "x1", "x2"), pair_of(dag, "x2", "x3")});
}

TEST_CASE("tree-child orientation of L_3 has a cherry or reticulated cherry") {
  const auto report = tree_child_orient(ladder(3));
  REQUIRE(report.solution);
  CHECK(find_cherries(*report.solution).size() + find_reticulated_cherries(*report.solution).size() > 0);
  CHECK(root_has_tree_child(*report.solution));
}

TEST_CASE("root children") {
  CHECK(root_has_tree_child(cherry_example()));
}

TEST_CASE("condition report") {
  SUBCASE("J_5") {
    const auto r = condition_report(jellyfish(5));
    CHECK(r.edge_bound_ok);
    CHECK(r.edge_count == 19);
    CHECK(r.reticulation_count == 4);
    CHECK(r.passes());
  }
  SUBCASE("L_5") {
    const auto r = condition_report(ladder(5));
    CHECK_FALSE(r.edge_bound_ok);
    CHECK(r.edge_count == 20);
    CHECK(r.failures == std::vector<std::string>{"edge_bound"});
    CHECK_FALSE(r.passes());
  }
  SUBCASE("L_3") {
    const auto r = condition_report(ladder(3));
    CHECK(r.edge_bound_ok);
    CHECK(r.leaf_distance_ok);
    CHECK(r.passes());
    CHECK(r.reticulation_count == 3);
  }
  SUBCASE("J_1 fails both") {
    const auto r = condition_report(jellyfish(1));
    CHECK(r.failures == std::vector<std::string>{"edge_bound", "leaf_distance"});
  }
}
