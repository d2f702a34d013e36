#include "permcm/sweep.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "permcm/classifier.hpp"
#include "permcm/complex.hpp"
#include "permcm/decomposability.hpp"
#include "permcm/ideal.hpp"
#include "permcm/invariants.hpp"

namespace permcm {

namespace {

constexpr std::array<std::pair<Theorem, std::string_view>, 10> kNames = {{
    {Theorem::vd, "vd"},
    {Theorem::cm, "cm"},
    {Theorem::goren, "goren"},
    {Theorem::nearly, "nearly"},
    {Theorem::ainv, "ainv"},
    {Theorem::bicm, "bicm"},
    {Theorem::hilb, "hilb"},
    {Theorem::covs, "covs"},
    {Theorem::shed, "shed"},
    {Theorem::gap, "gap"},
}};

std::string edge_string(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out;
}

// Complement has a Hamiltonian path and nothing else.
bool complement_is_spanning_path(const Graph& g) {
  const Graph c = complement(g);
  const int n = g.n();
  if (c.edge_count() != n - 1) return false;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  do {
    bool ok = true;
    for (int k = 0; k + 1 < n && ok; ++k) ok = c.adjacent(order[k], order[k + 1]);
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

// Facets are n points, or n-1 edges strung into a path.
bool facets_are_points(const SimplicialComplex& c, int n) {
  return static_cast<int>(c.facets().size()) == n &&
         std::all_of(c.facets().begin(), c.facets().end(), [](VertexSet f) { return set_size(f) == 1; });
}

bool facets_are_path(const SimplicialComplex& c, int n) {
  if (static_cast<int>(c.facets().size()) != n - 1) return false;
  std::vector<Edge> edges;
  for (VertexSet f : c.facets()) {
    if (set_size(f) != 2) return false;
    const auto vs = to_vertex_list(f);
    edges.push_back({vs[0], vs[1]});
  }
  return is_path_graph(Graph(n, edges));
}

class Checker {
 public:
  explicit Checker(const PermutationGraph& pg) : pg_(pg), g_(pg.graph) {}

  GraphCheck run(Theorem t) {
    switch (t) {
      case Theorem::vd: vd(); break;
      case Theorem::cm: cm(); break;
      case Theorem::goren: goren(); break;
      case Theorem::nearly: nearly(); break;
      case Theorem::ainv: ainv(); break;
      case Theorem::bicm: bicm(); break;
      case Theorem::hilb: hilb(); break;
      case Theorem::covs: covs(); break;
      case Theorem::shed: shed(); break;
      case Theorem::gap: gap(); break;
    }
    return std::move(out_);
  }

 private:
  void tag(const std::string& name, bool on = true) {
    if (on) out_.tags.push_back(name);
  }
  void mismatch(const std::string& predicate, const std::string& detail) {
    out_.discrepancies.push_back({pg_.perm.to_string(), edge_string(g_), predicate, detail});
  }
  static std::string yn(bool b) { return b ? "1" : "0"; }

  const SimplicialComplex& delta() {
    if (!delta_) delta_ = independence_complex(g_);
    return *delta_;
  }

  void vd() {
    const bool reisner = reisner_cm_test(delta());
    const CmResult cmr = cm_by_clique_partition(g_);
    const bool decomposable = is_vertex_decomposable(delta());
    tag("cm", reisner);
    tag("unmixed", cmr.unmixed);
    tag("vertex_decomposable", decomposable);
    tag("unmixed_not_cm", cmr.unmixed && !reisner);
    if (reisner != cmr.cm || reisner != (cmr.unmixed && decomposable)) {
      mismatch("reisner_cm <=> clique_partition <=> unmixed_and_vd",
               yn(reisner) + yn(cmr.cm) + yn(cmr.unmixed && decomposable));
    }
  }

  void cm() {
    const bool reisner = reisner_cm_test(delta());
    const CmResult cmr = cm_by_clique_partition(g_);
    const auto parts = cmr.partitions.size();
    tag("cm", reisner);
    tag("unmixed", cmr.unmixed);
    tag("unmixed_not_cm", cmr.unmixed && !reisner);
    tag("unmixed_not_cm_no_partition", cmr.unmixed && !reisner && parts == 0);
    tag("unmixed_not_cm_several_partitions", cmr.unmixed && !reisner && parts >= 2);
    if (reisner && parts != 1) mismatch("cm => unique partition", std::to_string(parts) + " partitions");
    if (cmr.unmixed && !reisner && parts == 1) mismatch("unmixed, not cm => not unique", "1 partition");
  }

  void goren() {
    if (g_.isolated_vertices() != 0) {
      tag("skipped_isolated");
      return;
    }
    const bool reisner = reisner_cm_test(delta());
    const BettiTable betti = hochster_betti_table(delta(), Execution::Serial, g_.n());
    const bool oracle = reisner && betti.type == 1;
    const bool structural = gorenstein_by_structure(g_).gorenstein;
    tag("isolated_free");
    tag("gorenstein", oracle);
    if (oracle != structural) {
      mismatch("cm_and_type1 <=> disjoint_union_of_edges", yn(oracle) + yn(structural));
    }
  }

  void nearly() {
    if (g_.isolated_vertices() != 0) {
      tag("skipped_isolated");
      return;
    }
    tag("isolated_free");
    const int n = g_.n();
    const bool flag = gorenstein_by_structure(g_).nearly_gorenstein;
    const bool complete = g_.edge_count() == n * (n - 1) / 2;
    const bool path_complement = complement_is_spanning_path(g_);
    const bool expected = n >= 3 && (complete || path_complement);
    tag("nearly_gorenstein", flag);
    tag("complete", flag && complete);
    tag("path_complement", flag && path_complement);
    if (flag != expected) mismatch("nearly <=> K_n or P_n^c", yn(flag) + yn(expected));
    if (!flag) return;
    if (complete && !facets_are_points(delta(), n)) mismatch("K_n complex", "facets are not n points");
    if (!complete && !facets_are_path(delta(), n)) mismatch("P_n^c complex", "facets are not a path");
    const bool reisner = reisner_cm_test(delta());
    const auto type = hochster_betti_table(delta(), Execution::Serial, n).type;
    if (!reisner || type == 1) mismatch("nearly => cm and not gorenstein", yn(reisner) + std::to_string(type));
  }

  void ainv() {
    const auto inv = compute_invariants(g_);
    const BettiTable betti = hochster_betti_table(delta(), Execution::Serial, g_.n());
    tag("reg_" + std::to_string(betti.reg));
    if (betti.reg != inv.im()) {
      mismatch("reg = im", std::to_string(betti.reg) + " vs " + std::to_string(inv.im()));
    }
    if (!reisner_cm_test(delta())) return;
    tag("cm");
    const int a = hilbert_data(delta()).a;
    const int formula = inv.im() + inv.tau() - g_.n();
    if (a != formula) mismatch("a = im + tau - n", std::to_string(a) + " vs " + std::to_string(formula));
  }

  void hilb() {
    if (!cm_by_clique_partition(g_).cm) return;
    tag("cm");
    const bool flag = bicm_and_hilbertian(g_).hilbertian;
    const bool oracle = hilbert_data(delta()).function_matches_polynomial();
    tag("hilbertian", flag);
    if (flag != oracle) mismatch("hilbertian <=> HF = HP on [0,n]", yn(flag) + yn(oracle));
  }

  void bicm() {
    if (g_.edge_count() == 0) {
      tag("skipped_edgeless");
      return;
    }
    const bool cm = cm_by_clique_partition(g_).cm;
    const bool flag = cm && bicm_and_hilbertian(g_).bicm;
    const bool oracle = reisner_cm_test(delta()) && is_chordal(complement(g_));
    tag("cm", cm);
    tag("bicm", flag);
    if (flag != oracle) mismatch("cm and im=1 <=> cm and chordal complement", yn(flag) + yn(oracle));
  }

  void covs() {
    const CmResult cmr = cm_by_clique_partition(g_);
    if (!cmr.unmixed) return;
    tag("unmixed");
    const MonomialIdeal j = cover_ideal(g_);
    const auto split = vertex_splittable_test(j);
    const auto order = linear_quotients_order(j);
    tag("cm", cmr.cm);
    tag("vertex_splittable", split.has_value());
    tag("linear_quotients", order.has_value());
    if (order && !has_linear_quotients(j.n(), *order)) mismatch("linear quotients order", "order fails recheck");
    if (split.has_value() != order.has_value() || order.has_value() != cmr.cm) {
      mismatch("splittable <=> linear quotients <=> cm",
               yn(split.has_value()) + yn(order.has_value()) + yn(cmr.cm));
    }
  }

  void shed() {
    if (!cm_by_clique_partition(g_).cm) return;
    tag("cm");
    try {
      const auto cert = extract_shedding_order(g_);
      std::string why;
      if (!verify_shedding_certificate(g_, cert, &why)) mismatch("shedding certificate", why);
      tag("steps_" + std::to_string(cert.steps.size()));
    } catch (const ClaimFailure& e) {
      mismatch("claim", e.what());
    }
  }

  void gap() {
    if (g_.isolated_vertices() != 0 || !gorenstein_by_structure(g_).gorenstein) return;
    tag("gorenstein");
    const GapWitness w = gap_witness_check(g_);
    if (!w.applicable) {
      tag("not_applicable");
      return;
    }
    tag("checked");
    if (!w.holds) mismatch("G minus N[F] = 2K_2", "fails");
  }

  const PermutationGraph& pg_;
  const Graph& g_;
  std::optional<SimplicialComplex> delta_;
  GraphCheck out_;
};

}  // namespace

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (const auto& [t, s] : kNames) {
    if (s == name) return t;
  }
  return std::nullopt;
}

std::string_view theorem_name(Theorem t) {
  for (const auto& [k, s] : kNames) {
    if (k == t) return s;
  }
  return "?";
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> all = [] {
    std::vector<Theorem> out;
    for (const auto& [t, s] : kNames) out.push_back(t);
    return out;
  }();
  return all;
}

int theorem_cap(Theorem t, const Caps& limits) {
  switch (t) {
    case Theorem::vd: return limits.vd;
    case Theorem::cm: return limits.cm;
    case Theorem::goren: return limits.goren;
    case Theorem::nearly: return limits.nearly;
    case Theorem::ainv: return limits.ainv;
    case Theorem::bicm: return limits.bicm;
    case Theorem::hilb: return limits.hilb;
    case Theorem::covs: return limits.covs;
    case Theorem::shed: return limits.shed;
    case Theorem::gap: return limits.gap;
  }
  return 0;
}

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int k = 2; k <= n; ++k) out *= static_cast<std::uint64_t>(k);
  return out;
}

std::vector<PermutationGraph> permutation_graphs(int n) {
  if (n < 0 || n > 12) throw std::invalid_argument("permutation sweeps support 0 <= n <= 12");
  std::vector<PermutationGraph> out;
  std::set<Graph> seen;
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  do {
    Permutation perm(values);
    Graph g = graph_from_permutation(perm);
    if (seen.insert(g).second) out.push_back({std::move(perm), std::move(g)});
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

GraphCheck check_graph(Theorem t, const PermutationGraph& pg) {
  try {
    return Checker(pg).run(t);
  } catch (const std::exception& e) {
    GraphCheck out;
    out.discrepancies.push_back({pg.perm.to_string(), edge_string(pg.graph), "exception", e.what()});
    return out;
  }
}

SweepResult verify_theorem(Theorem t, int n, Execution exec) { return verify_theorem(t, n, exec, caps()); }

SweepResult verify_theorem(Theorem t, int n, Execution exec, const Caps& limits) {
  const int cap = theorem_cap(t, limits);
  if (n < 1 || n > cap) {
    throw CapExceeded("verify " + std::string(theorem_name(t)) + " supports 1 <= n <= " + std::to_string(cap));
  }
  const auto graphs = permutation_graphs(n);
  std::vector<GraphCheck> checks(graphs.size());
  if (exec == Execution::Serial) {
    for (std::size_t k = 0; k < graphs.size(); ++k) checks[k] = check_graph(t, graphs[k]);
  } else {
    const auto count = static_cast<std::int64_t>(graphs.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t k = 0; k < count; ++k) checks[k] = check_graph(t, graphs[k]);
  }

  SweepResult result;
  result.theorem = t;
  result.n = n;
  result.total_permutations = factorial(n);
  result.distinct_graphs = graphs.size();
  result.counts["graphs"] = graphs.size();
  for (const auto& c : checks) {
    for (const auto& name : c.tags) ++result.counts[name];
    result.discrepancies.insert(result.discrepancies.end(), c.discrepancies.begin(), c.discrepancies.end());
  }
  return result;
}

std::vector<SurveyRow> survey(int n, Execution exec) { return survey(n, exec, caps()); }

std::vector<SurveyRow> survey(int n, Execution exec, const Caps& limits) {
  if (n < 1 || n > limits.survey) {
    throw CapExceeded("survey supports 1 <= n <= " + std::to_string(limits.survey));
  }
  const auto graphs = permutation_graphs(n);
  std::vector<SurveyRow> rows(graphs.size());
  auto fill = [&](std::size_t k) {
    const auto report = classify(graphs[k].graph, ClassifyOptions{false, Execution::Serial});
    SurveyRow& row = rows[k];
    row.perm = graphs[k].perm.to_string();
    row.graph = graphs[k].graph;
    row.alpha = report.invariants.alpha();
    row.tau = report.invariants.tau();
    row.m = report.invariants.m();
    row.im = report.invariants.im();
    row.unmixed = report.unmixed;
    row.cm = report.cm.value_or(false);
    row.gorenstein = report.gorenstein.value_or(false);
    row.nearly_gorenstein = report.nearly_gorenstein.value_or(false);
    row.bicm = report.bicm.value_or(false);
    row.hilbertian = report.hilbertian;
    row.a = report.a_invariant;
    row.reg = report.reg.value_or(0);
  };
  if (exec == Execution::Serial) {
    for (std::size_t k = 0; k < graphs.size(); ++k) fill(k);
  } else {
    const auto count = static_cast<std::int64_t>(graphs.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t k = 0; k < count; ++k) fill(static_cast<std::size_t>(k));
  }
  return rows;
}

std::string survey_csv(const std::vector<SurveyRow>& rows) {
  std::ostringstream out;
  out << kSurveyColumns << '\n';
  auto b = [](bool v) { return v ? "1" : "0"; };
  for (const auto& r : rows) {
    out << '"' << r.perm << "\"," << edge_string(r.graph) << ',' << r.alpha << ',' << r.tau << ',' << r.m << ','
        << r.im << ',' << b(r.unmixed) << ',' << b(r.cm) << ',' << b(r.gorenstein) << ','
        << b(r.nearly_gorenstein) << ',' << b(r.bicm) << ',';
    if (r.hilbertian) out << b(*r.hilbertian);
    out << ',';
    if (r.a) out << *r.a;
    out << ',' << r.reg << '\n';
  }
  return out.str();
}

std::string survey_json(const std::vector<SurveyRow>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["perm"] = r.perm;
    row["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : r.graph.edges()) row["edges"].push_back({e.u, e.v});
    row["alpha"] = r.alpha;
    row["tau"] = r.tau;
    row["m"] = r.m;
    row["im"] = r.im;
    row["unmixed"] = r.unmixed;
    row["cm"] = r.cm;
    row["gorenstein"] = r.gorenstein;
    row["nearly"] = r.nearly_gorenstein;
    row["bicm"] = r.bicm;
    row["hilbertian"] = r.hilbertian ? nlohmann::ordered_json(*r.hilbertian) : nlohmann::ordered_json();
    row["a"] = r.a ? nlohmann::ordered_json(*r.a) : nlohmann::ordered_json();
    row["reg"] = r.reg;
    doc.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

}  // namespace permcm
