#pragma once

#include <cstdint>
#include <vector>

#include "permcm/complex.hpp"

namespace permcm {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Rank over the rationals by fraction-free (Bareiss) elimination. Runs in
// 64-bit arithmetic and restarts in arbitrary precision on overflow.
std::int64_t rational_rank(const IntMatrix& m);

// Boundary map from faces with `size` vertices to faces with size-1 vertices
// (augmented: vertices map to the empty face).
IntMatrix boundary_matrix(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper);

struct HomologyRanks {
  // ranks[k+1] = dim of reduced homology in dimension k, k = -1..dim.
  std::vector<std::int64_t> ranks;

  std::int64_t at(int dimension) const;
  bool all_zero() const;
};

HomologyRanks reduced_homology_ranks(const SimplicialComplex& c);

// sum_k (-1)^k f_k over faces of dimension k >= -1.
std::int64_t reduced_euler_characteristic(const std::vector<std::int64_t>& f);

}  // namespace permcm
