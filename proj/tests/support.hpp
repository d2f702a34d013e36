#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "permcm/graph.hpp"

namespace testing {

using permcm::Edge;
using permcm::Graph;
using permcm::VertexSet;

// The 5-vertex unmixed permutation graph that is not Cohen-Macaulay:
// the 5-cycle 1-2-3-4-5 plus chords 2-5 and 1-4.
inline Graph unmixed_not_cm_graph() {
  const std::vector<Edge> e{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {2, 5}, {1, 4}};
  return Graph::from_edges(5, e);
}

inline Graph make_graph(int n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

// Every labeled graph on n vertices, indexed by edge bitmask.
inline std::vector<Graph> all_graphs(int n) {
  std::vector<Edge> pairs;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) pairs.push_back({u, v});
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1) edges.push_back(pairs[k]);
    }
    out.emplace_back(n, edges);
  }
  return out;
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

inline Graph relabel(const Graph& g, const std::vector<int>& image) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = image[e.u - 1];
    const int b = image[e.v - 1];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(g.n(), edges);
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace testing
