#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permcm/graph.hpp"

namespace permcm {

class ComplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simplicial complex given by its facets, over an explicit ground set so that
// vertices lying in no face still count (cone points, induced subcomplexes).
// The void complex has no facets; the irrelevant complex {emptyset} has the
// single facet 0.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Non-maximal and repeated facets are dropped.
  SimplicialComplex(VertexSet ground, std::vector<VertexSet> facets);

  static SimplicialComplex void_complex(VertexSet ground);
  static SimplicialComplex simplex(VertexSet vertices);

  VertexSet ground() const { return ground_; }
  int ground_size() const { return set_size(ground_); }
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool is_simplex() const { return facets_.size() == 1; }
  bool is_pure() const;
  // Largest facet size minus one; -1 for {emptyset}; throws on the void complex.
  int dim() const;
  VertexSet used_vertices() const;

  bool contains(VertexSet face) const;
  // Every face, ordered by size then by bit pattern.
  std::vector<VertexSet> faces() const;
  // faces_by_size()[k] lists the faces with k vertices.
  std::vector<std::vector<VertexSet>> faces_by_size() const;
  // f[0] = f_{-1} = 1, f[k] = number of faces with k vertices.
  std::vector<std::int64_t> f_vector() const;

  SimplicialComplex induced(VertexSet w) const;
  // Some vertex lies in every facet; such complexes are acyclic.
  bool is_cone() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  VertexSet ground_ = 0;
  std::vector<VertexSet> facets_;
};

SimplicialComplex independence_complex(const Graph& g);

struct LinkDeletion {
  SimplicialComplex link;
  SimplicialComplex deletion;
};

// Both results live on the ground set with `face` removed.
LinkDeletion link_and_deletion(const SimplicialComplex& c, VertexSet face);
SimplicialComplex link(const SimplicialComplex& c, VertexSet face);

struct HilbertData {
  std::vector<std::int64_t> f;   // f_{-1}, f_0, ..., f_{d-1}
  std::vector<std::int64_t> h;   // h_0, ..., h_d (trailing zeros kept)
  int d = 0;                     // Krull dimension
  std::vector<std::int64_t> hf;  // Hilbert function on 0..window
  // Hilbert polynomial sum_k hp_coefficients[k] t^k / hp_denominator.
  std::vector<std::int64_t> hp_coefficients;
  std::int64_t hp_denominator = 1;
  int h_degree = 0;
  int a = 0;  // h_degree - d

  std::int64_t hilbert_polynomial(std::int64_t t) const;
  std::int64_t multiplicity() const;  // h(1)
  // Hilbert function equals Hilbert polynomial on the whole window.
  bool function_matches_polynomial() const;
};

// Hilbert data of the Stanley-Reisner ring K[ground]/I_c, window [0, |ground|].
HilbertData hilbert_data(const SimplicialComplex& c);
HilbertData hilbert_data(const SimplicialComplex& c, int window);

}  // namespace permcm
