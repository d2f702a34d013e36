#include "permcm/ideal.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "permcm/caps.hpp"
#include "permcm/invariants.hpp"

namespace permcm {

namespace {

std::vector<VertexSet> minimalize(std::vector<VertexSet> gens) {
  std::sort(gens.begin(), gens.end(), [](VertexSet a, VertexSet b) {
    return set_size(a) != set_size(b) ? set_size(a) < set_size(b) : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<VertexSet> kept;
  for (VertexSet u : gens) {
    if (std::none_of(kept.begin(), kept.end(), [&](VertexSet k) { return is_subset(k, u); })) kept.push_back(u);
  }
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int n, std::vector<VertexSet> generators) : n_(n) {
  for (VertexSet u : generators) {
    if (!is_subset(u, first_vertices(n))) throw std::invalid_argument("generator uses an unknown variable");
  }
  gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(VertexSet monomial) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](VertexSet u) { return is_subset(u, monomial); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](VertexSet u) { return contains(u); });
}

bool MonomialIdeal::is_linear() const {
  return std::all_of(gens_.begin(), gens_.end(), [](VertexSet u) { return set_size(u) == 1; });
}

std::string MonomialIdeal::to_string() const {
  if (is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) out += ", ";
    if (gens_[k] == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for_each_vertex(gens_[k], [&](int v) {
      if (!first) out += '*';
      out += "x" + std::to_string(v);
      first = false;
    });
  }
  return out + ")";
}

MonomialIdeal cover_ideal(const Graph& g) {
  return MonomialIdeal(g.n(), independence_invariants(g).min_covers);
}

MonomialIdeal colon_ideal(int n, const std::vector<VertexSet>& gens, VertexSet v) {
  std::vector<VertexSet> quotients;
  quotients.reserve(gens.size());
  for (VertexSet u : gens) quotients.push_back(u & ~v);
  return MonomialIdeal(n, std::move(quotients));
}

bool has_linear_quotients(int n, const std::vector<VertexSet>& order) {
  for (std::size_t k = 1; k < order.size(); ++k) {
    const std::vector<VertexSet> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    if (!colon_ideal(n, prefix, order[k]).is_linear()) return false;
  }
  return true;
}

namespace {

// The colon (prefix) : next is linear iff every u in the prefix has some w in
// the prefix with w \ next a single variable dividing u \ next.
bool linear_step(const std::vector<VertexSet>& gens, std::uint32_t used, VertexSet next) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!(used & (1u << i))) continue;
    const VertexSet q = gens[i] & ~next;
    bool witnessed = false;
    for (std::size_t j = 0; j < gens.size() && !witnessed; ++j) {
      if (!(used & (1u << j))) continue;
      const VertexSet r = gens[j] & ~next;
      witnessed = set_size(r) == 1 && is_subset(r, q);
    }
    if (!witnessed) return false;
  }
  return true;
}

class QuotientSearch {
 public:
  explicit QuotientSearch(const std::vector<VertexSet>& gens) : gens_(gens) {}

  bool run() { return extend(0); }
  const std::vector<VertexSet>& order() const { return order_; }

 private:
  bool extend(std::uint32_t used) {
    if (order_.size() == gens_.size()) return true;
    if (dead_.count(used)) return false;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (used & (1u << i)) continue;
      if (used != 0 && !linear_step(gens_, used, gens_[i])) continue;
      order_.push_back(gens_[i]);
      if (extend(used | (1u << i))) return true;
      order_.pop_back();
    }
    dead_.insert(used);
    return false;
  }

  const std::vector<VertexSet>& gens_;
  std::vector<VertexSet> order_;
  std::unordered_set<std::uint32_t> dead_;
};

}  // namespace

std::optional<std::vector<VertexSet>> linear_quotients_order(const MonomialIdeal& ideal) {
  return linear_quotients_order(ideal, caps().quotient_generators);
}

std::optional<std::vector<VertexSet>> linear_quotients_order(const MonomialIdeal& ideal, int generator_cap) {
  const int limit = std::min(generator_cap, 31);
  if (static_cast<int>(ideal.generators().size()) > limit) {
    throw CapExceeded("linear quotient search limited to " + std::to_string(limit) + " generators");
  }
  QuotientSearch search(ideal.generators());
  if (!search.run()) return std::nullopt;
  return search.order();
}

std::optional<Split> split_at(const MonomialIdeal& ideal, int pivot) {
  std::vector<VertexSet> with;
  std::vector<VertexSet> without;
  for (VertexSet u : ideal.generators()) {
    if (contains(u, pivot)) {
      with.push_back(u & ~bit(pivot));
    } else {
      without.push_back(u);
    }
  }
  if (with.empty()) return std::nullopt;
  Split split{MonomialIdeal(ideal.n(), std::move(with)), MonomialIdeal(ideal.n(), std::move(without))};
  if (!split.with_pivot.contains(split.without_pivot)) return std::nullopt;
  return split;
}

namespace {

// Generators sorted, variables relabeled by first occurrence.
std::vector<VertexSet> canonical_generators(const MonomialIdeal& ideal) {
  std::vector<VertexSet> gens = ideal.generators();
  std::sort(gens.begin(), gens.end(), [](VertexSet a, VertexSet b) {
    return set_size(a) != set_size(b) ? set_size(a) < set_size(b) : a < b;
  });
  std::vector<int> label(65, 0);
  int next = 0;
  std::vector<VertexSet> out;
  for (VertexSet u : gens) {
    VertexSet w = 0;
    for_each_vertex(u, [&](int v) {
      if (label[v] == 0) label[v] = ++next;
      w |= bit(label[v]);
    });
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Variables in descending order of occurrence, lowest index on ties.
std::vector<int> pivot_order(const MonomialIdeal& ideal) {
  std::vector<std::pair<int, int>> counts;
  for (int v = 1; v <= ideal.n(); ++v) {
    int c = 0;
    for (VertexSet u : ideal.generators()) c += contains(u, v) ? 1 : 0;
    if (c > 0) counts.emplace_back(-c, v);
  }
  std::sort(counts.begin(), counts.end());
  std::vector<int> out;
  for (const auto& [c, v] : counts) out.push_back(v);
  return out;
}

class SplitSearch {
 public:
  bool splittable(const MonomialIdeal& ideal) {
    if (ideal.generators().size() <= 1) return true;
    auto key = canonical_generators(ideal);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = false;
    for (int v : pivot_order(ideal)) {
      const auto split = split_at(ideal, v);
      if (split && splittable(split->with_pivot) && splittable(split->without_pivot)) {
        result = true;
        break;
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  SplitTree tree(const MonomialIdeal& ideal) {
    SplitTree node;
    node.ideal = ideal;
    if (ideal.generators().size() <= 1) return node;
    for (int v : pivot_order(ideal)) {
      const auto split = split_at(ideal, v);
      if (split && splittable(split->with_pivot) && splittable(split->without_pivot)) {
        node.pivot = v;
        node.children.push_back(tree(split->with_pivot));
        node.children.push_back(tree(split->without_pivot));
        break;
      }
    }
    return node;
  }

 private:
  std::map<std::vector<VertexSet>, bool> memo_;
};

}  // namespace

std::optional<SplitTree> vertex_splittable_test(const MonomialIdeal& ideal) {
  return vertex_splittable_test(ideal, caps().quotient_generators);
}

std::optional<SplitTree> vertex_splittable_test(const MonomialIdeal& ideal, int generator_cap) {
  if (static_cast<int>(ideal.generators().size()) > generator_cap) {
    throw CapExceeded("vertex splittable search limited to " + std::to_string(generator_cap) + " generators");
  }
  SplitSearch search;
  if (!search.splittable(ideal)) return std::nullopt;
  return search.tree(ideal);
}

}  // namespace permcm
