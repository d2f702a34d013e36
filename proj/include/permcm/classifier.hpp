#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permcm/betti.hpp"
#include "permcm/complex.hpp"
#include "permcm/graph.hpp"
#include "permcm/invariants.hpp"
#include "permcm/order.hpp"

namespace permcm {

class NotPermutationGraph : public std::invalid_argument {
 public:
  NotPermutationGraph() : std::invalid_argument("graph admits no cohesive order") {}
};

class NotCohenMacaulay : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when no block of the unique chain partition has a lower cover whose
// only upper element is the block's top. Never expected on CM input.
class ClaimFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct CmResult {
  bool cm = false;
  bool unmixed = false;
  int alpha = 0;
  std::vector<CliquePartition> partitions;  // at most `limit`
};

// CM iff unmixed and V(G) splits into alpha(G) disjoint maximal cliques in
// exactly one way. Throws NotPermutationGraph.
CmResult cm_by_clique_partition(const Graph& g, int limit = 2);

struct SheddingStep {
  VertexSet vertices = 0;  // current graph, isolated vertices dropped
  CohesiveOrder order;     // cohesive order of that graph
  std::vector<ChainBlock> partition;
  int t = 0;       // 1-based block index
  int lower = 0;   // i_t
  int vertex = 0;  // j_t, removed next
};

struct SheddingCertificate {
  std::vector<SheddingStep> steps;

  std::vector<int> order() const;
};

// Every maximal independent set of g - v is maximal in g (checked by
// enumerating vertex subsets).
bool is_graph_shedding_vertex(const Graph& g, int v);

// Repeatedly removes a top element j_t whose lower cover i_t satisfies
// {s : i_t < s} = {j_t}, picking the smallest such t, until no edges remain.
// Isolated vertices are skipped at every step. Throws NotCohenMacaulay when
// the chain partition is not unique and ClaimFailure when no t exists.
SheddingCertificate extract_shedding_order(const Graph& g);

// Re-checks every step from the graph alone; on failure `why` says which.
bool verify_shedding_certificate(const Graph& g, const SheddingCertificate& cert,
                                 std::string* why = nullptr);

struct GorensteinFlags {
  bool gorenstein = false;
  bool nearly_gorenstein = false;  // nearly Gorenstein and not Gorenstein
};

// Requires a graph without isolated vertices.
GorensteinFlags gorenstein_by_structure(const Graph& g);

struct GapWitness {
  bool applicable = false;  // alpha(g) >= 2
  bool holds = false;
  int sets_checked = 0;
};

// For each independent F with |F| = alpha - 2, g minus N[F] must be 2K_2.
GapWitness gap_witness_check(const Graph& g);

struct BicmHilbert {
  bool bicm = false;
  bool hilbertian = false;
  int a = 0;
};

// Throws NotCohenMacaulay on non-CM input.
BicmHilbert bicm_and_hilbertian(const Graph& g);

struct OracleResults {
  bool reisner_cm = false;
  bool vertex_decomposable = false;
  BettiTable betti;
  HilbertData hilbert;
  bool hilbert_function_matches = false;
  bool complement_chordal = false;
};

struct Witnesses {
  std::vector<CliquePartition> clique_partitions;
  std::optional<SheddingCertificate> shedding;
  std::optional<GapWitness> gap;
  std::optional<std::string> claim_failure;
};

struct ClassificationReport {
  Graph graph;
  VertexSet isolated_vertices = 0;
  StructureFlags core_structure;  // of the graph without isolated vertices
  InvariantSet invariants;

  bool is_permutation = false;
  std::optional<CohesiveOrder> cohesive_order;
  bool unmixed = false;
  std::optional<bool> cm;
  std::optional<bool> vertex_decomposable;
  std::optional<bool> gorenstein;
  std::optional<bool> nearly_gorenstein;
  std::optional<bool> bicm;
  std::optional<bool> hilbertian;
  std::optional<int> a_invariant;
  std::optional<int> reg;

  Witnesses witnesses;
  std::optional<OracleResults> oracle;
};

struct ClassifyOptions {
  bool oracles = true;
  Execution execution = Execution::Parallel;
};

ClassificationReport classify(const Graph& g, const ClassifyOptions& options = {});

// Internal implications and theorem/oracle agreement; empty when consistent.
std::vector<std::string> consistency_violations(const ClassificationReport& report);

}  // namespace permcm
