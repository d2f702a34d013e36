#pragma once

#include <optional>
#include <vector>

#include "permcm/complex.hpp"

namespace permcm {

// Reisner's criterion over the rationals: every link (the empty face
// included) has vanishing reduced homology below its top dimension.
bool reisner_cm_test(const SimplicialComplex& c);

// Shedding tree of a vertex decomposition. A leaf (vertex == 0) is a simplex;
// otherwise children[0] decomposes the link and children[1] the deletion.
struct SheddingTree {
  int vertex = 0;
  std::vector<SheddingTree> children;

  int size() const;
};

bool is_shedding_vertex(const SimplicialComplex& c, int v);
std::optional<SheddingTree> vertex_decomposable_test(const SimplicialComplex& c);
bool is_vertex_decomposable(const SimplicialComplex& c);

// Checks a facet order against the (non-pure) shelling condition.
bool is_shelling_order(const std::vector<VertexSet>& order);
std::optional<std::vector<VertexSet>> find_shelling_order(const SimplicialComplex& c, int facet_cap);
bool shellable_bruteforce_test(const SimplicialComplex& c);
bool shellable_bruteforce_test(const SimplicialComplex& c, int facet_cap);

}  // namespace permcm
