#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "permcm/complex.hpp"

namespace permcm {

enum class Execution { Serial, Parallel };

// Graded Betti numbers of the Stanley-Reisner ring K[ground]/I_c.
struct BettiTable {
  std::map<std::pair<int, int>, std::int64_t> entries;  // (i, j) -> beta_{i,j}, nonzero only
  int variables = 0;
  int reg = 0;
  int pd = 0;
  int depth = 0;
  std::int64_t type = 0;  // total Betti number in homological degree pd

  std::int64_t at(int i, int j) const;
  std::int64_t total(int i) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

// beta_{i,j} = sum over |W| = j of dim H~_{j-i-1}(c restricted to W).
// The parallel kernel sweeps the 2^|ground| subsets with OpenMP and merges in
// subset order; the serial kernel is the reference it is tested against.
BettiTable hochster_betti_table(const SimplicialComplex& c, Execution exec = Execution::Parallel);
BettiTable hochster_betti_table(const SimplicialComplex& c, Execution exec, int vertex_cap);

}  // namespace permcm
