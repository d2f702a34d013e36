#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permcm/betti.hpp"
#include "permcm/caps.hpp"
#include "permcm/graph.hpp"

namespace permcm {

// Theorem/oracle pairs checked by the exhaustive sweeps.
enum class Theorem { vd, cm, goren, nearly, ainv, bicm, hilb, covs, shed, gap };

std::optional<Theorem> parse_theorem(std::string_view name);
std::string_view theorem_name(Theorem t);
const std::vector<Theorem>& all_theorems();
int theorem_cap(Theorem t, const Caps& limits);

struct PermutationGraph {
  Permutation perm;
  Graph graph;
};

// Distinct labeled graphs G(sigma) over sigma in S_n, ordered by the
// lexicographically first sigma producing each.
std::vector<PermutationGraph> permutation_graphs(int n);
std::uint64_t factorial(int n);

struct Discrepancy {
  std::string perm;
  std::string edges;
  std::string predicate;
  std::string detail;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct GraphCheck {
  std::vector<std::string> tags;  // counted per predicate
  std::vector<Discrepancy> discrepancies;
};

// Evaluates one graph; exceptions are reported as discrepancies.
GraphCheck check_graph(Theorem t, const PermutationGraph& pg);

struct SweepResult {
  Theorem theorem = Theorem::vd;
  int n = 0;
  std::uint64_t total_permutations = 0;
  std::uint64_t distinct_graphs = 0;
  std::map<std::string, std::uint64_t> counts;
  std::vector<Discrepancy> discrepancies;

  bool ok() const { return discrepancies.empty(); }
  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

// Checks every graph from S_n. Throws CapExceeded past the theorem's cap.
SweepResult verify_theorem(Theorem t, int n, Execution exec = Execution::Parallel);
SweepResult verify_theorem(Theorem t, int n, Execution exec, const Caps& limits);

struct SurveyRow {
  std::string perm;
  Graph graph;
  int alpha = 0;
  int tau = 0;
  int m = 0;
  int im = 0;
  bool unmixed = false;
  bool cm = false;
  bool gorenstein = false;
  bool nearly_gorenstein = false;
  bool bicm = false;
  std::optional<bool> hilbertian;
  std::optional<int> a;
  int reg = 0;
};

inline constexpr std::string_view kSurveyColumns =
    "perm,edges,alpha,tau,m,im,unmixed,cm,gorenstein,nearly,bicm,hilbertian,a,reg";

std::vector<SurveyRow> survey(int n, Execution exec = Execution::Parallel);
std::vector<SurveyRow> survey(int n, Execution exec, const Caps& limits);
std::string survey_csv(const std::vector<SurveyRow>& rows);
std::string survey_json(const std::vector<SurveyRow>& rows);

}  // namespace permcm
