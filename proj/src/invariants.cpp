#include "permcm/invariants.hpp"

#include <algorithm>

#include "permcm/order.hpp"

namespace permcm {

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  if (g.n() == 0) return {0};
  return maximal_cliques(complement(g));
}

IndependenceInvariants independence_invariants(const Graph& g) {
  IndependenceInvariants out;
  out.max_ind_sets = maximal_independent_sets(g);
  out.alpha = 0;
  int smallest = g.n();
  for (VertexSet s : out.max_ind_sets) {
    out.alpha = std::max(out.alpha, set_size(s));
    smallest = std::min(smallest, set_size(s));
    out.min_covers.push_back(g.vertices() & ~s);
  }
  out.tau = g.n() - out.alpha;
  out.unmixed = smallest == out.alpha;
  return out;
}

namespace {

int max_matching(const Graph& g, VertexSet alive) {
  // Lowest vertex with a live neighbor is either unmatched or matched to one
  // of those neighbors.
  VertexSet candidates = alive;
  while (candidates != 0) {
    const int u = lowest_vertex(candidates);
    const VertexSet nb = g.neighbors(u) & alive;
    if (nb == 0) {
      candidates &= ~bit(u);
      alive &= ~bit(u);
      continue;
    }
    int best = max_matching(g, alive & ~bit(u));
    for_each_vertex(nb, [&](int v) {
      best = std::max(best, 1 + max_matching(g, alive & ~bit(u) & ~bit(v)));
    });
    return best;
  }
  return 0;
}

int max_induced_matching(const Graph& g, VertexSet alive) {
  // Picking edge {u,v} into the gap set removes every edge touching N[u] u N[v].
  VertexSet candidates = alive;
  while (candidates != 0) {
    const int u = lowest_vertex(candidates);
    const VertexSet nb = g.neighbors(u) & alive;
    if (nb == 0) {
      candidates &= ~bit(u);
      alive &= ~bit(u);
      continue;
    }
    int best = max_induced_matching(g, alive & ~bit(u));
    for_each_vertex(nb, [&](int v) {
      const VertexSet gone = g.closed_neighborhood(u) | g.closed_neighborhood(v);
      best = std::max(best, 1 + max_induced_matching(g, alive & ~gone));
    });
    return best;
  }
  return 0;
}

}  // namespace

MatchingInvariants matching_invariants(const Graph& g) {
  return {max_matching(g, g.vertices()), max_induced_matching(g, g.vertices())};
}

InvariantSet compute_invariants(const Graph& g) {
  return {independence_invariants(g), matching_invariants(g)};
}

}  // namespace permcm
