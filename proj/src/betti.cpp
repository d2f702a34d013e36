#include "permcm/betti.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "permcm/caps.hpp"
#include "permcm/homology.hpp"

namespace permcm {

std::int64_t BettiTable::at(int i, int j) const {
  const auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t sum = 0;
  for (const auto& [key, value] : entries) {
    if (key.first == i) sum += value;
  }
  return sum;
}

namespace {

// Expands the k-th subset of `ground` (bits of k mapped onto ground's bits).
VertexSet nth_subset(VertexSet ground, std::uint64_t k) {
  VertexSet out = 0;
  while (k != 0 && ground != 0) {
    const VertexSet low = ground & -ground;
    if (k & 1) out |= low;
    ground &= ground - 1;
    k >>= 1;
  }
  return out;
}

using Contribution = std::vector<std::pair<int, std::int64_t>>;  // (homology dim, rank)

Contribution subset_contribution(const SimplicialComplex& c, VertexSet w) {
  Contribution out;
  const auto ranks = reduced_homology_ranks(c.induced(w));
  for (std::size_t idx = 0; idx < ranks.ranks.size(); ++idx) {
    if (ranks.ranks[idx] != 0) out.emplace_back(static_cast<int>(idx) - 1, ranks.ranks[idx]);
  }
  return out;
}

BettiTable assemble(const SimplicialComplex& c, const std::vector<Contribution>& parts) {
  BettiTable table;
  table.variables = c.ground_size();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const int j = set_size(nth_subset(c.ground(), k));
    for (const auto& [dim, rank] : parts[k]) table.entries[{j - dim - 1, j}] += rank;
  }
  for (const auto& [key, value] : table.entries) {
    table.pd = std::max(table.pd, key.first);
    table.reg = std::max(table.reg, key.second - key.first);
  }
  table.depth = table.variables - table.pd;
  table.type = table.total(table.pd);
  return table;
}

}  // namespace

BettiTable hochster_betti_table(const SimplicialComplex& c, Execution exec) {
  return hochster_betti_table(c, exec, caps().hochster_vertices);
}

BettiTable hochster_betti_table(const SimplicialComplex& c, Execution exec, int vertex_cap) {
  if (c.is_void()) throw ComplexError("Betti table of the void complex is undefined");
  if (c.ground_size() > vertex_cap) {
    throw CapExceeded("Hochster sweep limited to " + std::to_string(vertex_cap) + " vertices");
  }
  const std::uint64_t count = std::uint64_t{1} << c.ground_size();
  std::vector<Contribution> parts(count);
  if (exec == Execution::Serial) {
    for (std::uint64_t k = 0; k < count; ++k) parts[k] = subset_contribution(c, nth_subset(c.ground(), k));
  } else {
    const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t k = 0; k < total; ++k) {
      parts[k] = subset_contribution(c, nth_subset(c.ground(), static_cast<std::uint64_t>(k)));
    }
  }
  return assemble(c, parts);
}

}  // namespace permcm
