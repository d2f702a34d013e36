#include "doctest.h"
#include "permcm/graph.hpp"
#include "support.hpp"

using namespace permcm;
using testing::make_graph;

TEST_CASE("permutation graph from one-line notation") {
  const Graph g = graph_from_permutation(Permutation::parse("2,4,5,1,3"));
  const std::vector<Edge> expected{{1, 2}, {1, 4}, {1, 5}, {3, 4}, {3, 5}};
  CHECK(g.edges() == expected);
  CHECK(graph_from_permutation(Permutation::identity(6)).edge_count() == 0);
  CHECK(graph_from_permutation(Permutation::parse("4 3 2 1")) == Graph::complete(4));
}

TEST_CASE("permutation parsing rejects bad input") {
  CHECK_THROWS_AS(Permutation::parse("1,1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1,4"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("0,1"), std::invalid_argument);
  CHECK(Permutation::parse(" 3, 1 2 ").values() == std::vector<int>{3, 1, 2});
  CHECK(Permutation::parse("3,1,2").to_string() == "3,1,2");
}

TEST_CASE("edge list validation") {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> repeated{{1, 2}, {2, 1}};
  const std::vector<Edge> out_of_range{{1, 4}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, repeated), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, out_of_range), GraphError);
  CHECK_THROWS_AS(Graph::from_adjacency({bit(2), 0}), GraphError);
  CHECK_THROWS_AS(Graph::from_adjacency({bit(1)}), GraphError);
}

TEST_CASE("graph JSON") {
  const Graph g = parse_graph_json(R"({"n": 5, "edges": [[1,2],[1,4],[3,4],[1,5],[3,5]]})");
  CHECK(g == graph_from_permutation(Permutation::parse("2,4,5,1,3")));
  CHECK(parse_graph_json(graph_to_json(g)) == g);
  CHECK_THROWS(parse_graph_json(R"({"n": 3, "edges": [[1,2],[2,1]]})"));
  CHECK_THROWS(parse_graph_json(R"({"n": 3, "edges": [[2,2]]})"));
  CHECK_THROWS(parse_graph_json(R"({"n": 3, "edges": [[1,2,3]]})"));
  CHECK_THROWS(parse_graph_json(R"({"n": 3, "edges": [[1,2],)"));
  CHECK_THROWS(parse_graph_json(R"({"edges": []})"));
  CHECK_THROWS(parse_graph_json(R"({"n": -1, "edges": []})"));
  CHECK_THROWS(parse_graph_json(R"({"n": 65, "edges": []})"));
  CHECK(parse_graph_json(R"({"n": 0, "edges": []})").n() == 0);
}

TEST_CASE("complement") {
  CHECK(complement(Graph::complete(4)).edge_count() == 0);
  CHECK(complement(Graph::cycle(4)) == make_graph(4, {{1, 3}, {2, 4}}));
  const Graph p4c = complement(Graph::path(4));
  CHECK(p4c == make_graph(4, {{1, 3}, {1, 4}, {2, 4}}));
  CHECK(is_path_graph(p4c));
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    const Graph g = testing::random_graph(rng, 1 + k % 9, 0.4);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("complement of a permutation graph is the graph of the reversal") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : testing::all_permutations(n)) {
      const Permutation sigma(p);
      REQUIRE(complement(graph_from_permutation(sigma)) == graph_from_permutation(sigma.reversed()));
    }
  }
}

TEST_CASE("induced subgraphs and deletions") {
  const Subgraph a = delete_closed_neighborhood(Graph::path(4), 1);
  CHECK(a.graph == make_graph(2, {{1, 2}}));
  CHECK(a.to_old == std::vector<int>{3, 4});
  CHECK(a.pull_back(bit(1)) == bit(3));
  CHECK(a.push_forward(bit(4) | bit(1)) == bit(2));

  CHECK(induced_subgraph(Graph::complete(5), bit(1) | bit(2) | bit(3)).graph == Graph::complete(3));

  const Subgraph c = delete_vertex(Graph::matching(2), 1);
  CHECK(c.graph.n() == 3);
  CHECK(c.graph.edge_count() == 1);
  CHECK(set_size(c.graph.isolated_vertices()) == 1);
  CHECK(c.to_new == std::vector<int>{0, 1, 2, 3});

  CHECK_THROWS_AS(induced_subgraph(Graph::path(3), bit(4)), GraphError);

  std::mt19937 rng(11);
  for (int k = 0; k < 200; ++k) {
    const Graph g = testing::random_graph(rng, 8, 0.35);
    const int v = 1 + k % 8;
    const Subgraph s = delete_closed_neighborhood(g, v);
    CHECK((s.pull_back(s.graph.vertices()) & g.closed_neighborhood(v)) == 0);
    CHECK(set_size(s.pull_back(s.graph.vertices())) == g.n() - set_size(g.closed_neighborhood(v)));
  }
}

TEST_CASE("structure recognition") {
  const StructureFlags three_edges = recognize_structure(Graph::matching(3));
  CHECK(three_edges.is_disjoint_union_of_edges);
  CHECK_FALSE(three_edges.is_path);

  const StructureFlags p4 = recognize_structure(Graph::path(4));
  CHECK(p4.is_path);
  CHECK(p4.is_path_complement);
  CHECK(p4.is_chordal);

  const StructureFlags c5 = recognize_structure(Graph::cycle(5));
  CHECK_FALSE(c5.is_complete);
  CHECK_FALSE(c5.is_path);
  CHECK_FALSE(c5.is_path_complement);
  CHECK_FALSE(c5.is_disjoint_union_of_edges);
  CHECK_FALSE(c5.is_chordal);

  CHECK(recognize_structure(Graph::complete(5)).is_complete);
  CHECK(recognize_structure(make_graph(3, {{1, 2}})).isolated_vertices == bit(3));
}

namespace {

// Chordal iff every cycle of length >= 4 has a chord: brute force over
// vertex subsets looking for an induced cycle.
bool has_induced_long_cycle(const Graph& g) {
  for (VertexSet s = 1; s < (VertexSet{1} << g.n()); ++s) {
    if (set_size(s) < 4) continue;
    const Graph h = induced_subgraph(g, s).graph;
    bool cycle = is_connected(h);
    for (int v = 1; v <= h.n() && cycle; ++v) cycle = h.degree(v) == 2;
    if (cycle) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("chordality agrees with induced-cycle search") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testing::all_graphs(n)) {
      REQUIRE(is_chordal(g) == !has_induced_long_cycle(g));
    }
  }
  const Graph p = Graph::path(5);
  const auto order = maximum_cardinality_search(p);
  CHECK(is_perfect_elimination_order(p, order));
  const std::vector<int> bad{2, 1, 3, 4, 5};
  CHECK_FALSE(is_perfect_elimination_order(p, bad));
}
