#include "permcm/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "permcm/invariants.hpp"

namespace permcm {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Hilbert data overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Hilbert data overflow");
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
    if (out > INT64_MAX) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::int64_t>(out);
}

std::vector<VertexSet> maximal_only(std::vector<VertexSet> sets) {
  // Larger sets first so each candidate only needs checking against kept ones.
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    return set_size(a) != set_size(b) ? set_size(a) > set_size(b) : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    bool dominated = false;
    for (VertexSet k : kept) {
      if (is_subset(s, k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex(VertexSet ground, std::vector<VertexSet> facets)
    : ground_(ground) {
  for (VertexSet f : facets) {
    if (!is_subset(f, ground)) throw ComplexError("facet " + format_set(f) + " outside ground set");
  }
  facets_ = maximal_only(std::move(facets));
}

SimplicialComplex SimplicialComplex::void_complex(VertexSet ground) {
  return SimplicialComplex(ground, {});
}

SimplicialComplex SimplicialComplex::simplex(VertexSet vertices) {
  return SimplicialComplex(vertices, {vertices});
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](VertexSet f) { return set_size(f) == set_size(facets_.front()); });
}

int SimplicialComplex::dim() const {
  if (is_void()) throw ComplexError("the void complex has no dimension");
  int top = 0;
  for (VertexSet f : facets_) top = std::max(top, set_size(f));
  return top - 1;
}

VertexSet SimplicialComplex::used_vertices() const {
  VertexSet out = 0;
  for (VertexSet f : facets_) out |= f;
  return out;
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return is_subset(face, f); });
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::vector<VertexSet> out;
  for (VertexSet f : facets_) {
    // All submasks of f, including f and 0.
    VertexSet s = f;
    while (true) {
      out.push_back(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    return set_size(a) != set_size(b) ? set_size(a) < set_size(b) : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_size() const {
  std::vector<std::vector<VertexSet>> out;
  for (VertexSet s : faces()) {
    const auto k = static_cast<std::size_t>(set_size(s));
    if (out.size() <= k) out.resize(k + 1);
    out[k].push_back(s);
  }
  return out;
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
  std::vector<std::int64_t> f;
  for (const auto& level : faces_by_size()) f.push_back(static_cast<std::int64_t>(level.size()));
  return f;
}

SimplicialComplex SimplicialComplex::induced(VertexSet w) const {
  if (!is_subset(w, ground_)) throw ComplexError("induced subcomplex outside ground set");
  std::vector<VertexSet> restricted;
  restricted.reserve(facets_.size());
  for (VertexSet f : facets_) restricted.push_back(f & w);
  if (is_void()) return void_complex(w);
  return SimplicialComplex(w, std::move(restricted));
}

bool SimplicialComplex::is_cone() const {
  if (is_void()) return false;
  VertexSet common = facets_.front();
  for (VertexSet f : facets_) common &= f;
  return common != 0;
}

SimplicialComplex independence_complex(const Graph& g) {
  return SimplicialComplex(g.vertices(), maximal_independent_sets(g));
}

LinkDeletion link_and_deletion(const SimplicialComplex& c, VertexSet face) {
  if (!c.contains(face)) throw ComplexError(format_set(face) + " is not a face");
  const VertexSet ground = c.ground() & ~face;
  std::vector<VertexSet> lk;
  std::vector<VertexSet> del;
  for (VertexSet f : c.facets()) {
    if (is_subset(face, f)) lk.push_back(f & ~face);
    del.push_back(f & ~face);
  }
  return {SimplicialComplex(ground, std::move(lk)), SimplicialComplex(ground, std::move(del))};
}

SimplicialComplex link(const SimplicialComplex& c, VertexSet face) {
  return link_and_deletion(c, face).link;
}

std::int64_t HilbertData::hilbert_polynomial(std::int64_t t) const {
  __int128 acc = 0;
  for (auto k = hp_coefficients.size(); k-- > 0;) acc = acc * t + hp_coefficients[k];
  if (acc % hp_denominator != 0) throw std::logic_error("Hilbert polynomial is not integer valued");
  return static_cast<std::int64_t>(acc / hp_denominator);
}

std::int64_t HilbertData::multiplicity() const {
  return std::accumulate(h.begin(), h.end(), std::int64_t{0});
}

bool HilbertData::function_matches_polynomial() const {
  for (std::size_t t = 0; t < hf.size(); ++t) {
    if (hf[t] != hilbert_polynomial(static_cast<std::int64_t>(t))) return false;
  }
  return true;
}

HilbertData hilbert_data(const SimplicialComplex& c) { return hilbert_data(c, c.ground_size()); }

HilbertData hilbert_data(const SimplicialComplex& c, int window) {
  if (c.is_void()) throw ComplexError("Hilbert data of the void complex is undefined");
  HilbertData out;
  out.f = c.f_vector();
  out.d = c.dim() + 1;
  const int d = out.d;

  // h_k = sum_i (-1)^(k-i) C(d-i, k-i) f_{i-1}
  out.h.assign(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    std::int64_t hk = 0;
    for (int i = 0; i <= k; ++i) {
      const std::int64_t term = checked_mul(binomial(d - i, k - i), out.f[i]);
      hk = checked_add(hk, ((k - i) % 2 == 0) ? term : -term);
    }
    out.h[k] = hk;
  }
  out.h_degree = d;
  while (out.h_degree > 0 && out.h[out.h_degree] == 0) --out.h_degree;
  out.a = out.h_degree - d;

  // Monomials of degree t are counted by their support face.
  out.hf.assign(window + 1, 0);
  out.hf[0] = 1;
  for (int t = 1; t <= window; ++t) {
    std::int64_t value = 0;
    for (int k = 1; k <= d; ++k) value = checked_add(value, checked_mul(out.f[k], binomial(t - 1, k - 1)));
    out.hf[t] = value;
  }

  // P(t) = sum_i h_i C(t - i + d - 1, d - 1), expanded with denominator (d-1)!.
  if (d > 0) {
    out.hp_coefficients.assign(d, 0);
    for (int i = 0; i <= d; ++i) {
      if (out.h[i] == 0) continue;
      std::vector<std::int64_t> poly{1};
      for (int m = 0; m <= d - 2; ++m) {
        const std::int64_t shift = d - 1 - i - m;
        std::vector<std::int64_t> next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
          next[k] = checked_add(next[k], checked_mul(poly[k], shift));
          next[k + 1] = checked_add(next[k + 1], poly[k]);
        }
        poly = std::move(next);
      }
      for (std::size_t k = 0; k < poly.size(); ++k) {
        out.hp_coefficients[k] = checked_add(out.hp_coefficients[k], checked_mul(out.h[i], poly[k]));
      }
    }
    std::int64_t denom = 1;
    for (int m = 2; m <= d - 1; ++m) denom = checked_mul(denom, m);
    std::int64_t g = denom;
    for (std::int64_t c : out.hp_coefficients) g = std::gcd(g, c);
    for (auto& c : out.hp_coefficients) c /= g;
    out.hp_denominator = denom / g;
  }
  return out;
}

}  // namespace permcm
