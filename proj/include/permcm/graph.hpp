#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permcm {

// Vertex v (1-based) lives in bit v-1.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << (v - 1); }

constexpr VertexSet first_vertices(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int set_size(VertexSet s) { return std::popcount(s); }

constexpr bool contains(VertexSet s, int v) { return (s & bit(v)) != 0; }

constexpr bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

constexpr int lowest_vertex(VertexSet s) { return std::countr_zero(s) + 1; }

std::vector<int> to_vertex_list(VertexSet s);
VertexSet from_vertex_list(std::span<const int> vertices);
std::string format_set(VertexSet s);

// Calls fn(v) for every vertex in s, in increasing order.
template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    fn(lowest_vertex(s));
    s &= s - 1;
  }
}

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on vertices 1..n, n <= 64. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  // Rejects loops, repeated pairs and out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);
  // adj[v-1] is the neighborhood of v; must be symmetric and irreflexive.
  static Graph from_adjacency(std::vector<VertexSet> adj);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph matching(int edges);  // rK_2 on 2r vertices

  int n() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return first_vertices(n()); }
  VertexSet neighbors(int v) const { return adj_[v - 1]; }
  VertexSet closed_neighborhood(int v) const { return adj_[v - 1] | bit(v); }
  VertexSet neighborhood(VertexSet s) const;
  bool adjacent(int u, int v) const { return (adj_[u - 1] & bit(v)) != 0; }
  int degree(int v) const { return set_size(adj_[v - 1]); }
  int edge_count() const;
  std::vector<Edge> edges() const;
  bool is_independent(VertexSet s) const;
  bool is_clique(VertexSet s) const;
  VertexSet isolated_vertices() const;

  const std::vector<VertexSet>& adjacency() const { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;
  friend auto operator<=>(const Graph& a, const Graph& b) { return a.adj_ <=> b.adj_; }

 private:
  void check_vertex(int v) const;

  std::vector<VertexSet> adj_;
};

// One-line notation: values()[i-1] = sigma(i).
class Permutation {
 public:
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  // Accepts "2,4,5,1,3" (commas and/or whitespace).
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }
  Permutation reversed() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

// Induced subgraph together with the relabeling used to build it.
struct Subgraph {
  Graph graph;
  std::vector<int> to_old;  // to_old[new-1] = old vertex
  std::vector<int> to_new;  // to_new[old-1] = new vertex, 0 if dropped

  VertexSet pull_back(VertexSet s) const;
  VertexSet push_forward(VertexSet s) const;
};

// Edge {i,j}, i<j, iff j precedes i in the one-line notation.
Graph graph_from_permutation(const Permutation& perm);

Graph complement(const Graph& g);

Subgraph induced_subgraph(const Graph& g, VertexSet keep);
Subgraph delete_vertex(const Graph& g, int v);
Subgraph delete_closed_neighborhood(const Graph& g, int v);
Subgraph delete_closed_neighborhood(const Graph& g, VertexSet s);

struct StructureFlags {
  bool is_complete = false;
  bool is_path = false;
  bool is_path_complement = false;
  bool is_disjoint_union_of_edges = false;
  bool is_chordal = false;
  VertexSet isolated_vertices = 0;
};

bool is_connected(const Graph& g);
bool is_complete_graph(const Graph& g);
bool is_path_graph(const Graph& g);
bool is_disjoint_union_of_edges(const Graph& g);

// Maximum-cardinality search order, returned in elimination order (reverse
// of visiting order).
std::vector<int> maximum_cardinality_search(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, std::span<const int> order);
bool is_chordal(const Graph& g);

StructureFlags recognize_structure(const Graph& g);

// Edge list in the JSON graph format {"n": 5, "edges": [[1,2], ...]}.
Graph parse_graph_json(std::string_view text);
Graph load_graph_json(const std::string& path);
std::string graph_to_json(const Graph& g);

}  // namespace permcm
