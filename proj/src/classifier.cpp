#include "permcm/classifier.hpp"

#include <functional>

#include "permcm/caps.hpp"
#include "permcm/decomposability.hpp"

namespace permcm {

CmResult cm_by_clique_partition(const Graph& g, int limit) {
  if (!find_cohesive_order(g)) throw NotPermutationGraph();
  CmResult out;
  const auto ind = independence_invariants(g);
  out.unmixed = ind.unmixed;
  out.alpha = ind.alpha;
  if (ind.alpha == 0) {
    out.partitions.push_back({});
  } else {
    out.partitions = maximal_clique_partitions(g, ind.alpha, limit);
  }
  out.cm = out.unmixed && out.partitions.size() == 1;
  return out;
}

GorensteinFlags gorenstein_by_structure(const Graph& g) {
  if (g.isolated_vertices() != 0) {
    throw std::invalid_argument("Gorenstein classification needs a graph without isolated vertices");
  }
  GorensteinFlags flags;
  flags.gorenstein = is_disjoint_union_of_edges(g);
  flags.nearly_gorenstein = g.n() >= 3 && (is_complete_graph(g) || is_path_graph(complement(g)));
  return flags;
}

GapWitness gap_witness_check(const Graph& g) {
  GapWitness out;
  const int r = independence_invariants(g).alpha;
  if (r < 2) return out;
  out.applicable = true;
  out.holds = true;
  const int want = r - 2;
  std::function<void(int, VertexSet)> choose = [&](int next, VertexSet f) {
    if (!out.holds) return;
    if (set_size(f) == want) {
      ++out.sets_checked;
      const Graph rest = delete_closed_neighborhood(g, f).graph;
      if (rest.n() != 4 || rest.edge_count() != 2 || !is_disjoint_union_of_edges(rest)) out.holds = false;
      return;
    }
    for (int v = next; v <= g.n(); ++v) {
      if ((g.neighbors(v) & f) == 0) choose(v + 1, f | bit(v));
    }
  };
  choose(1, 0);
  return out;
}

BicmHilbert bicm_and_hilbertian(const Graph& g) {
  const CmResult cm = cm_by_clique_partition(g);
  if (!cm.cm) throw NotCohenMacaulay("a-invariant formula needs a Cohen-Macaulay graph");
  const auto inv = compute_invariants(g);
  BicmHilbert out;
  out.a = inv.im() + inv.tau() - g.n();
  out.hilbertian = out.a < 0;
  out.bicm = inv.im() == 1;
  return out;
}

ClassificationReport classify(const Graph& g, const ClassifyOptions& options) {
  ClassificationReport report;
  report.graph = g;
  report.isolated_vertices = g.isolated_vertices();
  const Subgraph core = induced_subgraph(g, g.vertices() & ~report.isolated_vertices);
  report.core_structure = recognize_structure(core.graph);
  report.invariants = compute_invariants(g);
  report.unmixed = report.invariants.unmixed();

  if (options.oracles && g.n() <= caps().hochster_vertices) {
    const SimplicialComplex delta = independence_complex(g);
    OracleResults oracle;
    oracle.reisner_cm = reisner_cm_test(delta);
    oracle.vertex_decomposable = is_vertex_decomposable(delta);
    oracle.betti = hochster_betti_table(delta, options.execution);
    oracle.hilbert = hilbert_data(delta);
    oracle.hilbert_function_matches = oracle.hilbert.function_matches_polynomial();
    oracle.complement_chordal = is_chordal(complement(g));
    report.oracle = std::move(oracle);
  }

  report.cohesive_order = find_cohesive_order(g);
  report.is_permutation = report.cohesive_order.has_value();
  if (!report.is_permutation) return report;

  const auto& inv = report.invariants;
  const CmResult cm = cm_by_clique_partition(g);
  report.cm = cm.cm;
  report.witnesses.clique_partitions = cm.partitions;
  report.reg = inv.im();

  if (cm.cm) {
    report.vertex_decomposable = true;
    try {
      report.witnesses.shedding = extract_shedding_order(g);
    } catch (const ClaimFailure& e) {
      report.witnesses.claim_failure = e.what();
      report.vertex_decomposable.reset();
    }
    report.a_invariant = inv.im() + inv.tau() - g.n();
    report.hilbertian = *report.a_invariant < 0;
    report.bicm = inv.im() == 1;
  } else {
    report.bicm = false;
    if (report.unmixed) {
      report.vertex_decomposable = false;
    } else if (report.oracle) {
      report.vertex_decomposable = report.oracle->vertex_decomposable;
    }
  }

  const GorensteinFlags flags = gorenstein_by_structure(core.graph);
  report.gorenstein = flags.gorenstein;
  report.nearly_gorenstein = flags.nearly_gorenstein;
  if (flags.gorenstein) report.witnesses.gap = gap_witness_check(core.graph);
  return report;
}

std::vector<std::string> consistency_violations(const ClassificationReport& r) {
  std::vector<std::string> out;
  auto is_true = [](const std::optional<bool>& b) { return b.has_value() && *b; };
  if (is_true(r.gorenstein) && !is_true(r.cm)) out.push_back("gorenstein without cm");
  if (is_true(r.nearly_gorenstein) && !is_true(r.cm)) out.push_back("nearly gorenstein without cm");
  if (is_true(r.bicm) && !is_true(r.cm)) out.push_back("bicm without cm");
  if (is_true(r.cm) && !r.unmixed) out.push_back("cm without unmixed");
  if (is_true(r.cm) && !r.witnesses.shedding) out.push_back("cm without shedding certificate");
  if (r.witnesses.claim_failure) out.push_back("claim failure: " + *r.witnesses.claim_failure);
  if (r.witnesses.gap && !r.witnesses.gap->holds && r.witnesses.gap->applicable) {
    out.push_back("gap witness fails");
  }
  if (!r.oracle || !r.is_permutation) return out;
  const auto& o = *r.oracle;
  if (*r.cm != o.reisner_cm) out.push_back("cm disagrees with Reisner");
  if (r.vertex_decomposable && *r.vertex_decomposable != o.vertex_decomposable) {
    out.push_back("vertex decomposability disagrees with oracle");
  }
  if (r.reg && *r.reg != o.betti.reg) out.push_back("reg disagrees with Betti table");
  if (r.a_invariant && *r.a_invariant != o.hilbert.a) out.push_back("a-invariant disagrees with Hilbert series");
  if (r.hilbertian && *r.hilbertian != o.hilbert_function_matches) {
    out.push_back("hilbertian disagrees with Hilbert function");
  }
  if (*r.gorenstein != (o.reisner_cm && o.betti.type == 1)) out.push_back("gorenstein disagrees with Betti type");
  if (r.graph.edge_count() > 0 && *r.bicm != (o.reisner_cm && o.complement_chordal)) {
    out.push_back("bicm disagrees with complement chordality");
  }
  return out;
}

}  // namespace permcm
