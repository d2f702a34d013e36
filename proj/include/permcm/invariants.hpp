#pragma once

#include <vector>

#include "permcm/graph.hpp"

namespace permcm {

struct IndependenceInvariants {
  int alpha = 0;
  int tau = 0;
  bool unmixed = true;
  std::vector<VertexSet> max_ind_sets;
  std::vector<VertexSet> min_covers;  // min_covers[k] = V \ max_ind_sets[k]
};

struct MatchingInvariants {
  int matching = 0;          // m(G)
  int induced_matching = 0;  // im(G)
};

struct InvariantSet {
  IndependenceInvariants independence;
  MatchingInvariants matching;

  int alpha() const { return independence.alpha; }
  int tau() const { return independence.tau; }
  bool unmixed() const { return independence.unmixed; }
  int m() const { return matching.matching; }
  int im() const { return matching.induced_matching; }
};

// Maximal cliques of the complement, canonically sorted.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

IndependenceInvariants independence_invariants(const Graph& g);

// Two edges conflict unless they form a gap; im is a maximum independent set
// of that conflict graph, found by branching on a vertex's partner.
MatchingInvariants matching_invariants(const Graph& g);

InvariantSet compute_invariants(const Graph& g);

}  // namespace permcm
