#include "permcm/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

namespace permcm {

namespace {

struct Overflow {};

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
  return out;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
  return out;
}

using BigInt = boost::multiprecision::cpp_int;

BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }

// Bareiss elimination with column skipping; every division is exact.
template <typename Int>
std::int64_t bareiss_rank(std::vector<std::vector<Int>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  Int prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Int p = m[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Int factor = m[r][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[r][j] = sub(mul(p, m[r][j]), mul(factor, m[rank][j])) / prev;
      }
      m[r][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

}  // namespace

std::int64_t rational_rank(const IntMatrix& m) {
  try {
    return bareiss_rank<std::int64_t>(m);
  } catch (const Overflow&) {
    std::vector<std::vector<BigInt>> big(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) big[r].assign(m[r].begin(), m[r].end());
    return bareiss_rank<BigInt>(std::move(big));
  }
}

IntMatrix boundary_matrix(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper) {
  IntMatrix m(lower.size(), std::vector<std::int64_t>(upper.size(), 0));
  for (std::size_t col = 0; col < upper.size(); ++col) {
    int index = 0;
    for_each_vertex(upper[col], [&](int v) {
      const VertexSet facet = upper[col] & ~bit(v);
      const auto it = std::lower_bound(lower.begin(), lower.end(), facet);
      if (it != lower.end() && *it == facet) {
        m[static_cast<std::size_t>(it - lower.begin())][col] = (index % 2 == 0) ? 1 : -1;
      }
      ++index;
    });
  }
  return m;
}

std::int64_t HomologyRanks::at(int dimension) const {
  const int idx = dimension + 1;
  if (idx < 0 || idx >= static_cast<int>(ranks.size())) return 0;
  return ranks[idx];
}

bool HomologyRanks::all_zero() const {
  return std::all_of(ranks.begin(), ranks.end(), [](std::int64_t r) { return r == 0; });
}

HomologyRanks reduced_homology_ranks(const SimplicialComplex& c) {
  HomologyRanks out;
  if (c.is_void()) return out;
  const int top = c.dim();
  out.ranks.assign(top + 2, 0);
  if (c.is_cone()) return out;

  const auto levels = c.faces_by_size();  // levels[s] sorted by bit pattern
  // boundary_rank[s] = rank of the map from size-s faces to size-(s-1) faces.
  std::vector<std::int64_t> boundary_rank(levels.size() + 1, 0);
  for (std::size_t s = 1; s < levels.size(); ++s) {
    boundary_rank[s] = rational_rank(boundary_matrix(levels[s - 1], levels[s]));
  }
  for (int k = -1; k <= top; ++k) {
    const auto s = static_cast<std::size_t>(k + 1);
    out.ranks[s] = static_cast<std::int64_t>(levels[s].size()) - boundary_rank[s] - boundary_rank[s + 1];
  }
  return out;
}

std::int64_t reduced_euler_characteristic(const std::vector<std::int64_t>& f) {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 1) ? f[i] : -f[i];
  return chi;
}

}  // namespace permcm
