#pragma once

#include <optional>
#include <vector>

#include "permcm/graph.hpp"

namespace permcm {

// order[p] is the vertex that receives label p+1.
struct CohesiveOrder {
  std::vector<int> order;

  std::vector<int> positions() const;  // positions()[v-1] = label of v - 1
  friend bool operator==(const CohesiveOrder&, const CohesiveOrder&) = default;
};

// Strict partial order on a vertex set, stored as up-sets.
class Poset {
 public:
  Poset() = default;
  Poset(VertexSet ground, std::vector<VertexSet> above);

  VertexSet ground() const { return ground_; }
  bool precedes(int a, int b) const { return contains(above_[a - 1], b); }
  VertexSet above(int v) const { return above_[v - 1]; }
  VertexSet below(int v) const { return below_[v - 1]; }
  bool covers(int a, int b) const;  // a is covered by b
  VertexSet upper_covers(int v) const;
  std::vector<Edge> cover_relations() const;  // (a,b) with a covered by b
  VertexSet minimal_elements() const;
  VertexSet maximal_elements() const;
  // Inclusion-maximal chains, as vertex sets sorted canonically.
  std::vector<VertexSet> maximal_chains() const;

 private:
  VertexSet ground_ = 0;
  std::vector<VertexSet> above_;
  std::vector<VertexSet> below_;
};

// A partition of the vertex set into disjoint maximal cliques.
struct CliquePartition {
  std::vector<VertexSet> blocks;
  friend bool operator==(const CliquePartition&, const CliquePartition&) = default;
};

// A clique partition read as maximal chains of a poset: per block the top
// element and its unique lower cover inside the block (0 for singletons).
struct ChainBlock {
  VertexSet members = 0;
  int top = 0;
  int lower = 0;
};

bool verify_cohesive_order(const Graph& g, const CohesiveOrder& ord);
// Lexicographically first cohesive order, if any.
std::optional<CohesiveOrder> find_cohesive_order(const Graph& g);

// i < j in the poset iff i is placed before j and {i,j} is an edge.
Poset comparability_poset(const Graph& g, const CohesiveOrder& ord);

// Bron-Kerbosch with pivoting; sorted by increasing vertex lists.
std::vector<VertexSet> maximal_cliques(const Graph& g);

// Canonical ordering of vertex sets: lexicographic on sorted vertex lists.
bool canonical_less(VertexSet a, VertexSet b);
void sort_canonically(std::vector<VertexSet>& sets);

// Partitions of V(g) into exactly `blocks` disjoint maximal cliques, found by
// exact cover. `limit` = 0 enumerates all of them.
std::vector<CliquePartition> maximal_clique_partitions(const Graph& g, int blocks, int limit = 2);

std::vector<ChainBlock> annotate_chains(const Poset& poset, const CliquePartition& partition);

}  // namespace permcm
