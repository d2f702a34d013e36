#include "permcm/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace permcm {

std::vector<int> to_vertex_list(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet from_vertex_list(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) throw GraphError("vertex out of range: " + std::to_string(v));
    s |= bit(v);
  }
  return s;
}

std::string format_set(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for_each_vertex(s, [&](int v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count must be in 0.." + std::to_string(kMaxVertices));
  }
  adj_.assign(n, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    adj_[e.u - 1] |= bit(e.v);
    adj_[e.v - 1] |= bit(e.u);
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (g.adjacent(e.u, e.v)) {
      throw GraphError("repeated edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    g.adj_[e.u - 1] |= bit(e.v);
    g.adj_[e.v - 1] |= bit(e.u);
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> adj) {
  Graph g(static_cast<int>(adj.size()));
  const VertexSet all = g.vertices();
  for (int v = 1; v <= g.n(); ++v) {
    VertexSet nb = adj[v - 1];
    if (!is_subset(nb, all)) throw GraphError("neighbor out of range");
    if (contains(nb, v)) throw GraphError("loop at vertex " + std::to_string(v));
    for_each_vertex(nb, [&](int w) {
      if (!contains(adj[w - 1], v)) throw GraphError("adjacency is not symmetric");
    });
  }
  g.adj_ = std::move(adj);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 1; v <= n; ++v) g.adj_[v - 1] = g.vertices() & ~bit(v);
  return g;
}

Graph Graph::path(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({1, n});
  return Graph(n, edges);
}

Graph Graph::matching(int edges) {
  std::vector<Edge> list;
  for (int k = 0; k < edges; ++k) list.push_back({2 * k + 1, 2 * k + 2});
  return Graph(2 * edges, list);
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n()) {
    throw GraphError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n()));
  }
}

VertexSet Graph::neighborhood(VertexSet s) const {
  VertexSet out = 0;
  for_each_vertex(s, [&](int v) { out |= adj_[v - 1]; });
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet nb : adj_) twice += set_size(nb);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= n(); ++u) {
    for_each_vertex(adj_[u - 1] & ~first_vertices(u), [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

bool Graph::is_independent(VertexSet s) const {
  bool ok = true;
  for_each_vertex(s, [&](int v) { ok = ok && (adj_[v - 1] & s) == 0; });
  return ok;
}

bool Graph::is_clique(VertexSet s) const {
  bool ok = true;
  for_each_vertex(s, [&](int v) { ok = ok && is_subset(s & ~bit(v), adj_[v - 1]); });
  return ok;
}

VertexSet Graph::isolated_vertices() const {
  VertexSet out = 0;
  for (int v = 1; v <= n(); ++v) {
    if (adj_[v - 1] == 0) out |= bit(v);
  }
  return out;
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  if (n > kMaxVertices) throw GraphError("permutation too long");
  std::vector<bool> seen(n + 1, false);
  for (int k : values_) {
    if (k < 1 || k > n) throw GraphError("permutation entry out of range: " + std::to_string(k));
    if (seen[k]) throw GraphError("duplicate permutation entry: " + std::to_string(k));
    seen[k] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
    if (ec != std::errc{} || ptr != text.data() + end) {
      throw GraphError("malformed permutation entry: " + std::string(text.substr(pos, end - pos)));
    }
    values.push_back(value);
    pos = end;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::reversed() const {
  return Permutation(std::vector<int>(values_.rbegin(), values_.rend()));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

VertexSet Subgraph::pull_back(VertexSet s) const {
  VertexSet out = 0;
  for_each_vertex(s, [&](int v) { out |= bit(to_old[v - 1]); });
  return out;
}

VertexSet Subgraph::push_forward(VertexSet s) const {
  VertexSet out = 0;
  for_each_vertex(s, [&](int v) {
    if (v <= static_cast<int>(to_new.size()) && to_new[v - 1] != 0) out |= bit(to_new[v - 1]);
  });
  return out;
}

Graph graph_from_permutation(const Permutation& perm) {
  const int n = perm.size();
  Graph g(n);
  std::vector<Edge> edges;
  const auto& k = perm.values();
  // k[a] appears before k[b] for a < b; an inversion is k[a] > k[b].
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (k[a] > k[b]) edges.push_back({k[b], k[a]});
    }
  }
  return Graph(n, edges);
}

Graph complement(const Graph& g) {
  std::vector<VertexSet> adj(g.n());
  for (int v = 1; v <= g.n(); ++v) adj[v - 1] = g.vertices() & ~g.neighbors(v) & ~bit(v);
  return Graph::from_adjacency(std::move(adj));
}

Subgraph induced_subgraph(const Graph& g, VertexSet keep) {
  if (!is_subset(keep, g.vertices())) throw GraphError("kept vertex out of range");
  Subgraph sub;
  sub.to_new.assign(g.n(), 0);
  for_each_vertex(keep, [&](int v) {
    sub.to_old.push_back(v);
    sub.to_new[v - 1] = static_cast<int>(sub.to_old.size());
  });
  std::vector<VertexSet> adj(sub.to_old.size(), 0);
  for (std::size_t i = 0; i < sub.to_old.size(); ++i) {
    for_each_vertex(g.neighbors(sub.to_old[i]) & keep,
                    [&](int w) { adj[i] |= bit(sub.to_new[w - 1]); });
  }
  sub.graph = Graph::from_adjacency(std::move(adj));
  return sub;
}

Subgraph delete_vertex(const Graph& g, int v) {
  if (v < 1 || v > g.n()) throw GraphError("vertex out of range: " + std::to_string(v));
  return induced_subgraph(g, g.vertices() & ~bit(v));
}

Subgraph delete_closed_neighborhood(const Graph& g, int v) {
  if (v < 1 || v > g.n()) throw GraphError("vertex out of range: " + std::to_string(v));
  return induced_subgraph(g, g.vertices() & ~g.closed_neighborhood(v));
}

Subgraph delete_closed_neighborhood(const Graph& g, VertexSet s) {
  if (!is_subset(s, g.vertices())) throw GraphError("vertex out of range");
  return induced_subgraph(g, g.vertices() & ~(s | g.neighborhood(s)));
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  VertexSet seen = bit(1);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = g.neighborhood(frontier) & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == g.vertices();
}

bool is_complete_graph(const Graph& g) {
  return g.edge_count() == g.n() * (g.n() - 1) / 2;
}

bool is_path_graph(const Graph& g) {
  const int n = g.n();
  if (n == 0) return false;
  if (n == 1) return true;
  int ends = 0;
  for (int v = 1; v <= n; ++v) {
    const int d = g.degree(v);
    if (d == 1) {
      ++ends;
    } else if (d != 2) {
      return false;
    }
  }
  return ends == 2 && is_connected(g);
}

bool is_disjoint_union_of_edges(const Graph& g) {
  for (int v = 1; v <= g.n(); ++v) {
    if (g.degree(v) != 1) return false;
  }
  return true;
}

std::vector<int> maximum_cardinality_search(const Graph& g) {
  const int n = g.n();
  std::vector<int> weight(n + 1, 0);
  std::vector<int> visit;
  VertexSet unvisited = g.vertices();
  while (unvisited != 0) {
    int best = 0;
    for_each_vertex(unvisited, [&](int v) {
      if (best == 0 || weight[v] > weight[best]) best = v;
    });
    visit.push_back(best);
    unvisited &= ~bit(best);
    for_each_vertex(g.neighbors(best) & unvisited, [&](int w) { ++weight[w]; });
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

bool is_perfect_elimination_order(const Graph& g, std::span<const int> order) {
  // Each vertex's later neighbors must form a clique. Checking that the
  // earliest later neighbor is adjacent to all the others suffices.
  std::vector<int> pos(g.n() + 1, -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    VertexSet later = 0;
    for_each_vertex(g.neighbors(v), [&](int w) {
      if (pos[w] > static_cast<int>(i)) later |= bit(w);
    });
    if (later == 0) continue;
    int parent = 0;
    for_each_vertex(later, [&](int w) {
      if (parent == 0 || pos[w] < pos[parent]) parent = w;
    });
    if (!is_subset(later & ~bit(parent), g.neighbors(parent))) return false;
  }
  return true;
}

bool is_chordal(const Graph& g) {
  const auto order = maximum_cardinality_search(g);
  return is_perfect_elimination_order(g, order);
}

StructureFlags recognize_structure(const Graph& g) {
  StructureFlags flags;
  flags.is_complete = is_complete_graph(g);
  flags.is_path = is_path_graph(g);
  flags.is_path_complement = is_path_graph(complement(g));
  flags.is_disjoint_union_of_edges = is_disjoint_union_of_edges(g);
  flags.is_chordal = is_chordal(g);
  flags.isolated_vertices = g.isolated_vertices();
  return flags;
}

}  // namespace permcm
