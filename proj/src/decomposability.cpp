#include "permcm/decomposability.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

#include "permcm/caps.hpp"
#include "permcm/homology.hpp"

namespace permcm {

bool reisner_cm_test(const SimplicialComplex& c) {
  if (c.is_void()) return false;
  for (VertexSet face : c.faces()) {
    const SimplicialComplex lk = link(c, face);
    if (lk.is_cone()) continue;
    const auto ranks = reduced_homology_ranks(lk);
    for (int k = -1; k < lk.dim(); ++k) {
      if (ranks.at(k) != 0) return false;
    }
  }
  return true;
}

int SheddingTree::size() const {
  int total = vertex == 0 ? 0 : 1;
  for (const auto& child : children) total += child.size();
  return total;
}

namespace {

using FacetList = std::vector<VertexSet>;

// Facets containing v lose v; those not containing v must absorb them.
bool shedding(const FacetList& facets, int v) {
  for (VertexSet f : facets) {
    if (!contains(f, v)) continue;
    const VertexSet rest = f & ~bit(v);
    const bool absorbed = std::any_of(facets.begin(), facets.end(),
                                      [&](VertexSet g) { return !contains(g, v) && is_subset(rest, g); });
    if (!absorbed) return false;
  }
  return true;
}

FacetList maximal_sorted(FacetList sets) { return SimplicialComplex(~VertexSet{0}, std::move(sets)).facets(); }

FacetList link_facets(const FacetList& facets, int v) {
  FacetList out;
  for (VertexSet f : facets) {
    if (contains(f, v)) out.push_back(f & ~bit(v));
  }
  return maximal_sorted(std::move(out));
}

FacetList deletion_facets(const FacetList& facets, int v) {
  FacetList out;
  for (VertexSet f : facets) out.push_back(f & ~bit(v));
  return maximal_sorted(std::move(out));
}

// Relabels the used vertices 1..k in increasing order and sorts the facets.
FacetList canonical(const FacetList& facets) {
  VertexSet used = 0;
  for (VertexSet f : facets) used |= f;
  std::vector<int> label(65, 0);
  int next = 0;
  for_each_vertex(used, [&](int v) { label[v] = ++next; });
  FacetList out;
  out.reserve(facets.size());
  for (VertexSet f : facets) {
    VertexSet g = 0;
    for_each_vertex(f, [&](int v) { g |= bit(label[v]); });
    out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

class DecompositionSearch {
 public:
  bool decomposable(const FacetList& facets) {
    if (facets.size() <= 1) return true;
    FacetList key = canonical(facets);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = false;
    VertexSet used = 0;
    for (VertexSet f : key) used |= f;
    for_each_vertex(used, [&](int v) {
      if (result || !shedding(key, v)) return;
      result = decomposable(link_facets(key, v)) && decomposable(deletion_facets(key, v));
    });
    memo_.emplace(std::move(key), result);
    return result;
  }

  // Replays the search in the caller's labels, reusing the memo.
  SheddingTree tree(const FacetList& facets) {
    SheddingTree node;
    if (facets.size() <= 1) return node;
    VertexSet used = 0;
    for (VertexSet f : facets) used |= f;
    for_each_vertex(used, [&](int v) {
      if (node.vertex != 0 || !shedding(facets, v)) return;
      const FacetList lk = link_facets(facets, v);
      const FacetList del = deletion_facets(facets, v);
      if (decomposable(lk) && decomposable(del)) {
        node.vertex = v;
        node.children.push_back(tree(lk));
        node.children.push_back(tree(del));
      }
    });
    return node;
  }

 private:
  std::map<FacetList, bool> memo_;
};

}  // namespace

bool is_shedding_vertex(const SimplicialComplex& c, int v) {
  return contains(c.used_vertices(), v) && shedding(c.facets(), v);
}

std::optional<SheddingTree> vertex_decomposable_test(const SimplicialComplex& c) {
  if (c.is_void()) return std::nullopt;
  DecompositionSearch search;
  if (!search.decomposable(c.facets())) return std::nullopt;
  return search.tree(c.facets());
}

bool is_vertex_decomposable(const SimplicialComplex& c) {
  if (c.is_void()) return false;
  DecompositionSearch search;
  return search.decomposable(c.facets());
}

namespace {

// F_k may follow `prefix` iff the intersection of <F_k> with the earlier
// facets is pure of dimension |F_k| - 2.
bool can_follow(const std::vector<VertexSet>& prefix, VertexSet next) {
  for (VertexSet earlier : prefix) {
    const VertexSet meet = earlier & next;
    const bool witnessed = std::any_of(prefix.begin(), prefix.end(), [&](VertexSet other) {
      return is_subset(meet, other & next) && set_size(next & ~other) == 1;
    });
    if (!witnessed) return false;
  }
  return true;
}

class ShellingSearch {
 public:
  explicit ShellingSearch(const FacetList& facets) : facets_(facets) {}

  bool run() { return extend(0); }
  const FacetList& order() const { return order_; }

 private:
  bool extend(std::uint32_t used) {
    if (order_.size() == facets_.size()) return true;
    if (dead_.count(used)) return false;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      if (used & (1u << i)) continue;
      if (!can_follow(order_, facets_[i])) continue;
      order_.push_back(facets_[i]);
      if (extend(used | (1u << i))) return true;
      order_.pop_back();
    }
    dead_.insert(used);
    return false;
  }

  const FacetList& facets_;
  FacetList order_;
  std::unordered_set<std::uint32_t> dead_;
};

}  // namespace

bool is_shelling_order(const std::vector<VertexSet>& order) {
  for (std::size_t k = 1; k < order.size(); ++k) {
    const std::vector<VertexSet> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    if (!can_follow(prefix, order[k])) return false;
  }
  return true;
}

std::optional<std::vector<VertexSet>> find_shelling_order(const SimplicialComplex& c, int facet_cap) {
  const int limit = std::min(facet_cap, 31);
  if (static_cast<int>(c.facets().size()) > limit) {
    throw CapExceeded("shelling search limited to " + std::to_string(limit) + " facets");
  }
  ShellingSearch search(c.facets());
  if (!search.run()) return std::nullopt;
  return search.order();
}

bool shellable_bruteforce_test(const SimplicialComplex& c) {
  return shellable_bruteforce_test(c, caps().shelling_facets);
}

bool shellable_bruteforce_test(const SimplicialComplex& c, int facet_cap) {
  return find_shelling_order(c, facet_cap).has_value();
}

}  // namespace permcm
