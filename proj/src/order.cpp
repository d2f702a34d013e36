#include "permcm/order.hpp"

#include <algorithm>
#include <functional>

namespace permcm {

std::vector<int> CohesiveOrder::positions() const {
  std::vector<int> pos(order.size(), -1);
  for (std::size_t p = 0; p < order.size(); ++p) pos[order[p] - 1] = static_cast<int>(p);
  return pos;
}

Poset::Poset(VertexSet ground, std::vector<VertexSet> above)
    : ground_(ground), above_(std::move(above)), below_(above_.size(), 0) {
  for (std::size_t a = 0; a < above_.size(); ++a) {
    for_each_vertex(above_[a], [&](int b) { below_[b - 1] |= bit(static_cast<int>(a) + 1); });
  }
}

bool Poset::covers(int a, int b) const {
  return precedes(a, b) && (above_[a - 1] & below_[b - 1]) == 0;
}

VertexSet Poset::upper_covers(int v) const {
  VertexSet out = 0;
  for_each_vertex(above_[v - 1], [&](int w) {
    if (covers(v, w)) out |= bit(w);
  });
  return out;
}

std::vector<Edge> Poset::cover_relations() const {
  std::vector<Edge> out;
  for_each_vertex(ground_, [&](int v) {
    for_each_vertex(upper_covers(v), [&](int w) { out.push_back({v, w}); });
  });
  return out;
}

VertexSet Poset::minimal_elements() const {
  VertexSet out = 0;
  for_each_vertex(ground_, [&](int v) {
    if (below_[v - 1] == 0) out |= bit(v);
  });
  return out;
}

VertexSet Poset::maximal_elements() const {
  VertexSet out = 0;
  for_each_vertex(ground_, [&](int v) {
    if (above_[v - 1] == 0) out |= bit(v);
  });
  return out;
}

std::vector<VertexSet> Poset::maximal_chains() const {
  std::vector<VertexSet> chains;
  std::function<void(int, VertexSet)> walk = [&](int v, VertexSet chain) {
    const VertexSet up = upper_covers(v);
    if (up == 0) {
      chains.push_back(chain);
      return;
    }
    for_each_vertex(up, [&](int w) { walk(w, chain | bit(w)); });
  };
  for_each_vertex(minimal_elements(), [&](int v) { walk(v, bit(v)); });
  sort_canonically(chains);
  return chains;
}

bool canonical_less(VertexSet a, VertexSet b) {
  while (a != 0 && b != 0) {
    const int x = lowest_vertex(a);
    const int y = lowest_vertex(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

void sort_canonically(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
}

bool verify_cohesive_order(const Graph& g, const CohesiveOrder& ord) {
  const int n = g.n();
  if (static_cast<int>(ord.order.size()) != n) {
    throw GraphError("cohesive order has the wrong length");
  }
  if (from_vertex_list(ord.order) != g.vertices()) {
    throw GraphError("cohesive order is not a permutation of the vertices");
  }
  const auto& o = ord.order;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        const bool ij = g.adjacent(o[a], o[b]);
        const bool jk = g.adjacent(o[b], o[c]);
        const bool ik = g.adjacent(o[a], o[c]);
        if (ij && jk && !ik) return false;
        if (ik && !ij && !jk) return false;
      }
    }
  }
  return true;
}

namespace {

class CohesiveSearch {
 public:
  explicit CohesiveSearch(const Graph& g) : g_(g), prefix_(g.n() + 1, 0) {}

  std::optional<CohesiveOrder> run() {
    if (place(0)) return CohesiveOrder{placed_};
    return std::nullopt;
  }

 private:
  // Appending z at position p keeps both axioms on every triple ending at z.
  bool can_append(int z, int p) const {
    const VertexSet nz = g_.neighbors(z);
    for (int b = 0; b < p; ++b) {
      const int w = placed_[b];
      if (!g_.adjacent(w, z)) continue;
      // (i) with w in the middle: x < w < z, x~w, w~z  =>  x~z
      if (!is_subset(g_.neighbors(w) & prefix_[b], nz)) return false;
      // (ii) with w first: w < y < z, w~z  =>  w~y or y~z
      const VertexSet between = prefix_[p] & ~prefix_[b + 1];
      if (!is_subset(between, g_.neighbors(w) | nz)) return false;
    }
    return true;
  }

  bool place(int p) {
    if (p == g_.n()) return true;
    const VertexSet free = g_.vertices() & ~prefix_[p];
    bool found = false;
    for_each_vertex(free, [&](int z) {
      if (found || !can_append(z, p)) return;
      placed_.push_back(z);
      prefix_[p + 1] = prefix_[p] | bit(z);
      if (place(p + 1)) {
        found = true;
        return;
      }
      placed_.pop_back();
    });
    return found;
  }

  const Graph& g_;
  std::vector<int> placed_;
  std::vector<VertexSet> prefix_;  // prefix_[p] = vertices at positions < p
};

}  // namespace

std::optional<CohesiveOrder> find_cohesive_order(const Graph& g) {
  return CohesiveSearch(g).run();
}

Poset comparability_poset(const Graph& g, const CohesiveOrder& ord) {
  if (!verify_cohesive_order(g, ord)) throw GraphError("order is not cohesive");
  const auto pos = ord.positions();
  std::vector<VertexSet> above(g.n(), 0);
  for (int v = 1; v <= g.n(); ++v) {
    for_each_vertex(g.neighbors(v), [&](int w) {
      if (pos[v - 1] < pos[w - 1]) above[v - 1] |= bit(w);
    });
  }
  return Poset(g.vertices(), std::move(above));
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> cliques;
  std::function<void(VertexSet, VertexSet, VertexSet)> expand = [&](VertexSet r, VertexSet p,
                                                                    VertexSet x) {
    if (p == 0 && x == 0) {
      cliques.push_back(r);
      return;
    }
    // Pivot on the vertex of P u X with the most neighbors in P.
    int pivot = 0;
    int best = -1;
    for_each_vertex(p | x, [&](int u) {
      const int c = set_size(p & g.neighbors(u));
      if (c > best) {
        best = c;
        pivot = u;
      }
    });
    for_each_vertex(p & ~g.neighbors(pivot), [&](int v) {
      const VertexSet nv = g.neighbors(v);
      expand(r | bit(v), p & nv, x & nv);
      p &= ~bit(v);
      x |= bit(v);
    });
  };
  if (g.n() > 0) expand(0, g.vertices(), 0);
  sort_canonically(cliques);
  return cliques;
}

namespace {

class CliqueCover {
 public:
  CliqueCover(std::vector<VertexSet> cliques, int blocks, int limit)
      : cliques_(std::move(cliques)), blocks_(blocks), limit_(limit) {}

  std::vector<CliquePartition> run(VertexSet universe) {
    search(universe, blocks_);
    return std::move(found_);
  }

 private:
  bool done() const { return limit_ > 0 && static_cast<int>(found_.size()) >= limit_; }

  void search(VertexSet uncovered, int remaining) {
    if (uncovered == 0) {
      if (remaining == 0) {
        CliquePartition part{chosen_};
        sort_canonically(part.blocks);
        found_.push_back(std::move(part));
      }
      return;
    }
    if (remaining == 0 || remaining > set_size(uncovered)) return;
    // Column with the fewest remaining candidates; lowest vertex on ties.
    int column = 0;
    int fewest = -1;
    for_each_vertex(uncovered, [&](int v) {
      int count = 0;
      for (VertexSet c : cliques_) {
        if (contains(c, v) && is_subset(c, uncovered)) ++count;
      }
      if (fewest < 0 || count < fewest) {
        fewest = count;
        column = v;
      }
    });
    if (fewest == 0) return;
    for (VertexSet c : cliques_) {
      if (!contains(c, column) || !is_subset(c, uncovered)) continue;
      chosen_.push_back(c);
      search(uncovered & ~c, remaining - 1);
      chosen_.pop_back();
      if (done()) return;
    }
  }

  std::vector<VertexSet> cliques_;
  int blocks_;
  int limit_;
  std::vector<VertexSet> chosen_;
  std::vector<CliquePartition> found_;
};

}  // namespace

std::vector<CliquePartition> maximal_clique_partitions(const Graph& g, int blocks, int limit) {
  if (blocks < 1) throw GraphError("block count must be positive");
  return CliqueCover(maximal_cliques(g), blocks, limit).run(g.vertices());
}

std::vector<ChainBlock> annotate_chains(const Poset& poset, const CliquePartition& partition) {
  std::vector<ChainBlock> out;
  for (VertexSet block : partition.blocks) {
    ChainBlock cb;
    cb.members = block;
    for_each_vertex(block, [&](int v) {
      if ((poset.above(v) & block) == 0) cb.top = v;
    });
    const VertexSet rest = block & ~bit(cb.top);
    for_each_vertex(rest, [&](int v) {
      if ((poset.above(v) & rest) == 0) cb.lower = v;
    });
    out.push_back(cb);
  }
  return out;
}

}  // namespace permcm
