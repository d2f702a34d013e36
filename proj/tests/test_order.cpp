#include <set>

#include "doctest.h"
#include "permcm/classifier.hpp"
#include "permcm/invariants.hpp"
#include "permcm/order.hpp"
#include "support.hpp"

using namespace permcm;
using testing::make_graph;

namespace {

std::vector<VertexSet> sets(std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<VertexSet> out;
  for (auto l : lists) out.push_back(from_vertex_list(std::vector<int>(l)));
  return out;
}

CohesiveOrder order_of(std::vector<int> v) { return CohesiveOrder{std::move(v)}; }

// Subsets of `cliques` with `r` members that partition the vertex set.
std::set<std::vector<VertexSet>> partitions_by_combination(const Graph& g, int r) {
  const auto cliques = maximal_cliques(g);
  std::set<std::vector<VertexSet>> out;
  const int m = static_cast<int>(cliques.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) != r) continue;
    VertexSet seen = 0;
    bool disjoint = true;
    std::vector<VertexSet> chosen;
    for (int k = 0; k < m; ++k) {
      if (!(mask >> k & 1)) continue;
      disjoint = disjoint && (seen & cliques[k]) == 0;
      seen |= cliques[k];
      chosen.push_back(cliques[k]);
    }
    if (disjoint && seen == g.vertices()) {
      std::sort(chosen.begin(), chosen.end());
      out.insert(chosen);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("cohesive orders of small examples") {
  for (int n = 1; n <= 6; ++n) {
    const auto ord = find_cohesive_order(Graph::complete(n));
    REQUIRE(ord);
    CHECK(verify_cohesive_order(Graph::complete(n), *ord));
  }
  CHECK_FALSE(find_cohesive_order(Graph::cycle(5)));
  for (const auto& p : testing::all_permutations(5)) {
    CHECK_FALSE(verify_cohesive_order(Graph::cycle(5), order_of(p)));
  }
  const auto unmixed = find_cohesive_order(testing::unmixed_not_cm_graph());
  REQUIRE(unmixed);
  CHECK(verify_cohesive_order(testing::unmixed_not_cm_graph(), *unmixed));

  CHECK(verify_cohesive_order(Graph::matching(2), order_of({1, 2, 3, 4})));
  CHECK(verify_cohesive_order(make_graph(3, {{1, 3}, {2, 3}}), order_of({1, 2, 3})));
  CHECK_THROWS(verify_cohesive_order(Graph::path(3), order_of({1, 1, 2})));
}

TEST_CASE("every G(sigma) admits a cohesive order") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : testing::all_permutations(n)) {
      const Graph g = graph_from_permutation(Permutation(p));
      const auto ord = find_cohesive_order(g);
      REQUIRE(ord);
      REQUIRE(verify_cohesive_order(g, *ord));
    }
  }
}

TEST_CASE("cohesive order exists exactly for relabelings of some G(sigma)") {
  for (int n = 1; n <= 5; ++n) {
    std::set<Graph> permutation_graphs;
    for (const auto& p : testing::all_permutations(n)) permutation_graphs.insert(graph_from_permutation(Permutation(p)));
    const auto labelings = testing::all_permutations(n);
    for (const Graph& g : testing::all_graphs(n)) {
      bool oracle = false;
      for (const auto& l : labelings) {
        if (permutation_graphs.count(testing::relabel(g, l))) {
          oracle = true;
          break;
        }
      }
      REQUIRE(find_cohesive_order(g).has_value() == oracle);
    }
  }
}

TEST_CASE("comparability poset") {
  const Poset k3 = comparability_poset(Graph::complete(3), order_of({1, 2, 3}));
  CHECK(k3.precedes(1, 3));
  CHECK_FALSE(k3.precedes(3, 1));
  CHECK(k3.cover_relations() == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK(k3.maximal_chains() == sets({{1, 2, 3}}));

  const Poset two = comparability_poset(Graph::matching(2), order_of({1, 2, 3, 4}));
  CHECK(two.maximal_chains() == sets({{1, 2}, {3, 4}}));
  CHECK(two.minimal_elements() == (bit(1) | bit(3)));
  CHECK(two.maximal_elements() == (bit(2) | bit(4)));

  CHECK_THROWS(comparability_poset(Graph::path(3), order_of({1, 2, 3})));
  CHECK_NOTHROW(comparability_poset(Graph::path(3), order_of({2, 1, 3})));
}

TEST_CASE("maximal chains are the maximal cliques") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : testing::all_permutations(n)) {
      const Graph g = graph_from_permutation(Permutation(p));
      const Poset poset = comparability_poset(g, *find_cohesive_order(g));
      REQUIRE(poset.maximal_chains() == maximal_cliques(g));
      for (const Edge& e : poset.cover_relations()) {
        REQUIRE(poset.precedes(e.u, e.v));
        REQUIRE((poset.above(e.u) & poset.below(e.v)) == 0);
      }
    }
  }
}

TEST_CASE("maximal cliques") {
  CHECK(maximal_cliques(Graph::complete(4)) == sets({{1, 2, 3, 4}}));
  CHECK(maximal_cliques(Graph::path(4)) == sets({{1, 2}, {2, 3}, {3, 4}}));
  CHECK(maximal_cliques(testing::unmixed_not_cm_graph()) == sets({{1, 2, 5}, {1, 4, 5}, {2, 3}, {3, 4}}));
  CHECK(maximal_cliques(Graph(3)) == sets({{1}, {2}, {3}}));

  // Brute force: cliques not contained in any larger clique.
  std::mt19937 rng(3);
  for (int k = 0; k < 300; ++k) {
    const Graph g = testing::random_graph(rng, 1 + k % 10, 0.5);
    std::vector<VertexSet> expected;
    for (VertexSet s = 1; s <= g.vertices(); ++s) {
      if (!g.is_clique(s)) continue;
      bool maximal = true;
      for (int v = 1; v <= g.n() && maximal; ++v) maximal = contains(s, v) || !g.is_clique(s | bit(v));
      if (maximal) expected.push_back(s);
    }
    sort_canonically(expected);
    REQUIRE(maximal_cliques(g) == expected);
  }
}

TEST_CASE("partitions into disjoint maximal cliques") {
  const auto kn = maximal_clique_partitions(Graph::complete(5), 1, 0);
  REQUIRE(kn.size() == 1);
  CHECK(kn[0].blocks == sets({{1, 2, 3, 4, 5}}));

  const auto p4 = maximal_clique_partitions(Graph::path(4), 2, 0);
  REQUIRE(p4.size() == 1);
  CHECK(p4[0].blocks == sets({{1, 2}, {3, 4}}));

  const auto unmixed = maximal_clique_partitions(testing::unmixed_not_cm_graph(), 2, 0);
  REQUIRE(unmixed.size() == 2);
  std::set<std::vector<VertexSet>> found;
  for (const auto& p : unmixed) {
    auto b = p.blocks;
    std::sort(b.begin(), b.end());
    found.insert(b);
  }
  std::set<std::vector<VertexSet>> expected;
  for (auto b : {sets({{1, 2, 5}, {3, 4}}), sets({{1, 4, 5}, {2, 3}})}) {
    std::sort(b.begin(), b.end());
    expected.insert(b);
  }
  CHECK(found == expected);

  CHECK(maximal_clique_partitions(testing::unmixed_not_cm_graph(), 2).size() == 2);
  CHECK(maximal_clique_partitions(Graph::path(3), 2).empty());
  CHECK_THROWS(maximal_clique_partitions(Graph::path(3), 0));
}

TEST_CASE("exact cover agrees with combination search") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : testing::all_permutations(n)) {
      const Graph g = graph_from_permutation(Permutation(p));
      const int r = independence_invariants(g).alpha;
      const auto all = maximal_clique_partitions(g, r, 0);
      std::set<std::vector<VertexSet>> found;
      for (const auto& part : all) {
        auto b = part.blocks;
        std::sort(b.begin(), b.end());
        found.insert(b);
      }
      REQUIRE(found.size() == all.size());
      REQUIRE(found == partitions_by_combination(g, r));
      REQUIRE(maximal_clique_partitions(g, r, 2).size() == std::min<std::size_t>(all.size(), 2));
      // Deterministic enumeration order.
      REQUIRE(maximal_clique_partitions(g, r, 0) == all);
    }
  }
}

TEST_CASE("chain annotation") {
  const Graph g = Graph::matching(2);
  const Poset poset = comparability_poset(g, order_of({1, 2, 3, 4}));
  const auto chains = annotate_chains(poset, maximal_clique_partitions(g, 2)[0]);
  REQUIRE(chains.size() == 2);
  CHECK(chains[0].top == 2);
  CHECK(chains[0].lower == 1);
  CHECK(chains[1].top == 4);
  CHECK(chains[1].lower == 3);

  const Poset k1 = comparability_poset(Graph(1), order_of({1}));
  const auto single = annotate_chains(k1, CliquePartition{{bit(1)}});
  CHECK(single[0].top == 1);
  CHECK(single[0].lower == 0);
}

TEST_CASE("classification does not depend on the labeling") {
  std::mt19937 rng(5);
  for (int n = 2; n <= 6; ++n) {
    for (const auto& p : testing::all_permutations(n)) {
      const Graph g = graph_from_permutation(Permutation(p));
      std::vector<int> labels(n);
      std::iota(labels.begin(), labels.end(), 1);
      std::shuffle(labels.begin(), labels.end(), rng);
      const Graph h = testing::relabel(g, labels);
      const CmResult a = cm_by_clique_partition(g, 0);
      const CmResult b = cm_by_clique_partition(h, 0);
      REQUIRE(a.cm == b.cm);
      REQUIRE(a.partitions.size() == b.partitions.size());
      if (a.cm && g.edge_count() > 0) {
        const auto cert = extract_shedding_order(h);
        REQUIRE(verify_shedding_certificate(h, cert));
      }
    }
  }
}
