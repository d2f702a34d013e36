#include <algorithm>

#include "permcm/classifier.hpp"

namespace permcm {

std::vector<int> SheddingCertificate::order() const {
  std::vector<int> out;
  for (const auto& step : steps) out.push_back(step.vertex);
  return out;
}

namespace {

bool maximal_independent_in(const Graph& g, VertexSet pool, VertexSet s) {
  if (!g.is_independent(s)) return false;
  bool extendable = false;
  for_each_vertex(pool & ~s, [&](int w) { extendable = extendable || (g.neighbors(w) & s) == 0; });
  return !extendable;
}

}  // namespace

bool is_graph_shedding_vertex(const Graph& g, int v) {
  if (g.n() > 24) throw std::invalid_argument("shedding check limited to 24 vertices");
  const VertexSet pool = g.vertices() & ~bit(v);
  // Enumerate every subset of the pool.
  VertexSet s = 0;
  while (true) {
    if (maximal_independent_in(g, pool, s) && (s & g.neighbors(v)) == 0) return false;
    if (s == pool) break;
    s = (s - pool) & pool;
  }
  return true;
}

SheddingCertificate extract_shedding_order(const Graph& g) {
  SheddingCertificate cert;
  VertexSet alive = g.vertices() & ~g.isolated_vertices();
  while (alive != 0) {
    Subgraph sub = induced_subgraph(g, alive);
    const Graph& h = sub.graph;

    const auto ord = find_cohesive_order(h);
    if (!ord) throw NotPermutationGraph();
    const Poset poset = comparability_poset(h, *ord);
    const auto ind = independence_invariants(h);
    const auto parts = maximal_clique_partitions(h, ind.alpha, 2);
    if (!ind.unmixed || parts.size() != 1) {
      throw NotCohenMacaulay("no unique partition into maximal cliques at step " +
                             std::to_string(cert.steps.size() + 1));
    }
    const auto chains = annotate_chains(poset, parts.front());

    int t = 0;
    for (std::size_t k = 0; k < chains.size() && t == 0; ++k) {
      const auto& c = chains[k];
      if (c.lower != 0 && poset.above(c.lower) == bit(c.top)) t = static_cast<int>(k) + 1;
    }
    if (t == 0) {
      throw ClaimFailure("no block satisfies the claim on " + format_set(alive));
    }
    const ChainBlock& chosen = chains[t - 1];
    if (!is_graph_shedding_vertex(h, chosen.top)) {
      throw ClaimFailure("vertex " + std::to_string(sub.to_old[chosen.top - 1]) + " is not shedding");
    }

    SheddingStep step;
    step.vertices = alive;
    for (int v : ord->order) step.order.order.push_back(sub.to_old[v - 1]);
    for (const auto& c : chains) {
      step.partition.push_back({sub.pull_back(c.members), sub.to_old[c.top - 1],
                                c.lower ? sub.to_old[c.lower - 1] : 0});
    }
    step.t = t;
    step.lower = sub.to_old[chosen.lower - 1];
    step.vertex = sub.to_old[chosen.top - 1];
    cert.steps.push_back(std::move(step));

    alive &= ~bit(cert.steps.back().vertex);
    // Vertices left without neighbors are cone points from here on.
    for_each_vertex(alive, [&](int v) {
      if ((g.neighbors(v) & alive) == 0) alive &= ~bit(v);
    });
  }
  return cert;
}

namespace {

int brute_force_alpha(const Graph& g, VertexSet pool) {
  int best = 0;
  VertexSet s = 0;
  while (true) {
    if (g.is_independent(s)) best = std::max(best, set_size(s));
    if (s == pool) break;
    s = (s - pool) & pool;
  }
  return best;
}

VertexSet drop_isolated(const Graph& g, VertexSet alive) {
  VertexSet out = alive;
  for_each_vertex(alive, [&](int v) {
    if ((g.neighbors(v) & alive) == 0) out &= ~bit(v);
  });
  return out;
}

}  // namespace

bool verify_shedding_certificate(const Graph& g, const SheddingCertificate& cert, std::string* why) {
  auto fail = [&](std::size_t k, const std::string& msg) {
    if (why) *why = "step " + std::to_string(k + 1) + ": " + msg;
    return false;
  };
  VertexSet expected = drop_isolated(g, g.vertices());
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const SheddingStep& step = cert.steps[k];
    if (step.vertices != expected) return fail(k, "vertex set does not follow from the previous step");
    const VertexSet alive = step.vertices;

    // Cohesive axioms under the recorded order, within the current graph.
    const auto& o = step.order.order;
    if (from_vertex_list(o) != alive || static_cast<int>(o.size()) != set_size(alive)) {
      return fail(k, "order is not a permutation of the current vertices");
    }
    std::vector<int> pos(g.n() + 1, -1);
    for (std::size_t p = 0; p < o.size(); ++p) pos[o[p]] = static_cast<int>(p);
    for (std::size_t a = 0; a < o.size(); ++a) {
      for (std::size_t b = a + 1; b < o.size(); ++b) {
        for (std::size_t c = b + 1; c < o.size(); ++c) {
          const bool ij = g.adjacent(o[a], o[b]);
          const bool jk = g.adjacent(o[b], o[c]);
          const bool ik = g.adjacent(o[a], o[c]);
          if ((ij && jk && !ik) || (ik && !ij && !jk)) return fail(k, "order is not cohesive");
        }
      }
    }

    // Partition into alpha maximal cliques.
    VertexSet covered = 0;
    for (const auto& block : step.partition) {
      if ((covered & block.members) != 0) return fail(k, "blocks overlap");
      covered |= block.members;
      if (!g.is_clique(block.members)) return fail(k, "block is not a clique");
      bool extendable = false;
      for_each_vertex(alive & ~block.members, [&](int w) {
        extendable = extendable || is_subset(block.members, g.neighbors(w));
      });
      if (extendable) return fail(k, "block is not a maximal clique");
      int top = 0;
      int lower = 0;
      for_each_vertex(block.members, [&](int v) {
        if (top == 0 || pos[v] > pos[top]) {
          lower = top;
          top = v;
        } else if (lower == 0 || pos[v] > pos[lower]) {
          lower = v;
        }
      });
      if (block.top != top || block.lower != lower) return fail(k, "block top or lower cover is wrong");
    }
    if (covered != alive) return fail(k, "blocks do not cover the vertices");
    if (static_cast<int>(step.partition.size()) != brute_force_alpha(g, alive)) {
      return fail(k, "block count differs from the independence number");
    }

    if (step.t < 1 || step.t > static_cast<int>(step.partition.size())) return fail(k, "t out of range");
    const ChainBlock& chosen = step.partition[step.t - 1];
    if (chosen.lower != step.lower || chosen.top != step.vertex || step.lower == 0) {
      return fail(k, "recorded i_t/j_t disagree with block t");
    }
    VertexSet up = 0;
    for_each_vertex(g.neighbors(step.lower) & alive, [&](int s) {
      if (pos[s] > pos[step.lower]) up |= bit(s);
    });
    if (up != bit(step.vertex)) return fail(k, "claim condition fails");

    const Subgraph sub = induced_subgraph(g, alive);
    if (!is_graph_shedding_vertex(sub.graph, sub.to_new[step.vertex - 1])) {
      return fail(k, "vertex is not shedding");
    }
    expected = drop_isolated(g, alive & ~bit(step.vertex));
  }
  if (expected != 0) {
    if (why) *why = "certificate stops while edges remain";
    return false;
  }
  return true;
}

}  // namespace permcm
