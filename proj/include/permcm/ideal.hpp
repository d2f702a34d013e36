#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permcm/graph.hpp"

namespace permcm {

// Squarefree monomial ideal in x_1..x_n; a generator is its support. The
// zero ideal has no generators, the unit ideal has the generator 0 (= 1).
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  // Keeps only the minimal generators.
  MonomialIdeal(int n, std::vector<VertexSet> generators);

  int n() const { return n_; }
  const std::vector<VertexSet>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front() == 0; }
  bool contains(VertexSet monomial) const;
  bool contains(const MonomialIdeal& other) const;
  // Every minimal generator is a single variable.
  bool is_linear() const;
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> gens_;
};

// Generated by the minimal vertex covers of g.
MonomialIdeal cover_ideal(const Graph& g);

// (gens) : v, generated by u / gcd(u, v) and minimalized.
MonomialIdeal colon_ideal(int n, const std::vector<VertexSet>& gens, VertexSet v);

bool has_linear_quotients(int n, const std::vector<VertexSet>& order);
std::optional<std::vector<VertexSet>> linear_quotients_order(const MonomialIdeal& ideal);
std::optional<std::vector<VertexSet>> linear_quotients_order(const MonomialIdeal& ideal, int generator_cap);

// I = x_i I_1 + I_2 with I_2 inside I_1; leaves have pivot 0.
struct SplitTree {
  int pivot = 0;
  MonomialIdeal ideal;
  std::vector<SplitTree> children;  // {I_1, I_2} when pivot != 0
};

struct Split {
  MonomialIdeal with_pivot;     // I_1
  MonomialIdeal without_pivot;  // I_2
};

// The decomposition at x_pivot, if I_2 lies in I_1.
std::optional<Split> split_at(const MonomialIdeal& ideal, int pivot);

std::optional<SplitTree> vertex_splittable_test(const MonomialIdeal& ideal);
std::optional<SplitTree> vertex_splittable_test(const MonomialIdeal& ideal, int generator_cap);

}  // namespace permcm
