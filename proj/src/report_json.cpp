#include "permcm/report_json.hpp"

namespace permcm {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json();
}

std::string order_string(const std::vector<int>& order) {
  std::string out;
  for (int v : order) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

Json partition_json(const CliquePartition& p) {
  Json out = Json::array();
  for (VertexSet b : p.blocks) out.push_back(set_to_json(b));
  return out;
}

}  // namespace

Json set_to_json(VertexSet s) {
  Json out = Json::array();
  for (int v : to_vertex_list(s)) out.push_back(v);
  return out;
}

Json graph_json(const Graph& g) {
  Json out;
  out["n"] = g.n();
  out["edges"] = Json::array();
  for (const Edge& e : g.edges()) out["edges"].push_back({e.u, e.v});
  return out;
}

Json complex_json(const SimplicialComplex& c) {
  Json out;
  out["ground"] = set_to_json(c.ground());
  out["facets"] = Json::array();
  for (VertexSet f : c.facets()) out["facets"].push_back(set_to_json(f));
  return out;
}

Json hilbert_json(const HilbertData& h) {
  Json out;
  out["f"] = h.f;
  out["h"] = h.h;
  out["dim"] = h.d;
  out["a"] = h.a;
  out["multiplicity"] = h.multiplicity();
  out["hilbert_function"] = h.hf;
  out["hilbert_polynomial"] = {{"coefficients", h.hp_coefficients}, {"denominator", h.hp_denominator}};
  out["function_matches_polynomial"] = h.function_matches_polynomial();
  return out;
}

Json betti_json(const BettiTable& b) {
  Json out;
  out["entries"] = Json::array();
  for (const auto& [ij, value] : b.entries) out["entries"].push_back({ij.first, ij.second, value});
  out["reg"] = b.reg;
  out["pd"] = b.pd;
  out["depth"] = b.depth;
  out["type"] = b.type;
  return out;
}

Json ideal_json(const MonomialIdeal& ideal) {
  Json out = Json::array();
  for (VertexSet u : ideal.generators()) out.push_back(set_to_json(u));
  return out;
}

Json split_tree_json(const SplitTree& tree) {
  Json out;
  out["ideal"] = ideal_json(tree.ideal);
  if (tree.pivot != 0) {
    out["pivot"] = tree.pivot;
    out["with_pivot"] = split_tree_json(tree.children[0]);
    out["without_pivot"] = split_tree_json(tree.children[1]);
  }
  return out;
}

Json shedding_json(const SheddingCertificate& cert) {
  Json out;
  out["order"] = cert.order();
  out["steps"] = Json::array();
  for (const auto& s : cert.steps) {
    Json step;
    step["vertices"] = set_to_json(s.vertices);
    step["cohesive_order"] = order_string(s.order.order);
    step["blocks"] = Json::array();
    for (const auto& b : s.partition) {
      step["blocks"].push_back({{"members", set_to_json(b.members)}, {"top", b.top}, {"lower", b.lower}});
    }
    step["t"] = s.t;
    step["lower"] = s.lower;
    step["vertex"] = s.vertex;
    out["steps"].push_back(std::move(step));
  }
  return out;
}

Json report_json(const ClassificationReport& r) {
  Json out;
  out["graph"] = graph_json(r.graph);
  out["isolated_vertices"] = set_to_json(r.isolated_vertices);
  out["is_permutation"] = r.is_permutation;
  out["cohesive_order"] = r.cohesive_order ? Json(order_string(r.cohesive_order->order)) : Json();
  out["unmixed"] = r.unmixed;
  out["cm"] = optional_json(r.cm);
  out["vertex_decomposable"] = optional_json(r.vertex_decomposable);
  out["gorenstein"] = optional_json(r.gorenstein);
  out["nearly_gorenstein"] = optional_json(r.nearly_gorenstein);
  out["bicm"] = optional_json(r.bicm);
  out["hilbertian"] = optional_json(r.hilbertian);
  out["a_invariant"] = optional_json(r.a_invariant);
  out["reg"] = optional_json(r.reg);
  out["invariants"] = {{"alpha", r.invariants.alpha()}, {"tau", r.invariants.tau()}, {"m", r.invariants.m()},
                       {"im", r.invariants.im()}};
  const auto& s = r.core_structure;
  out["structure"] = {{"complete", s.is_complete},
                      {"path", s.is_path},
                      {"path_complement", s.is_path_complement},
                      {"disjoint_union_of_edges", s.is_disjoint_union_of_edges},
                      {"chordal", s.is_chordal}};

  Json w;
  w["clique_partitions"] = Json::array();
  for (const auto& p : r.witnesses.clique_partitions) w["clique_partitions"].push_back(partition_json(p));
  w["shedding"] = r.witnesses.shedding ? shedding_json(*r.witnesses.shedding) : Json();
  if (r.witnesses.gap) {
    const auto& g = *r.witnesses.gap;
    w["gap"] = {{"applicable", g.applicable}, {"holds", g.holds}, {"sets_checked", g.sets_checked}};
  } else {
    w["gap"] = Json();
  }
  w["claim_failure"] = optional_json(r.witnesses.claim_failure);
  out["witnesses"] = std::move(w);

  if (r.oracle) {
    const auto& o = *r.oracle;
    out["oracle"] = {{"reisner_cm", o.reisner_cm},
                     {"vertex_decomposable", o.vertex_decomposable},
                     {"complement_chordal", o.complement_chordal},
                     {"betti", betti_json(o.betti)},
                     {"hilbert", hilbert_json(o.hilbert)}};
  } else {
    out["oracle"] = Json();
  }
  out["violations"] = consistency_violations(r);
  return out;
}

Json sweep_json(const SweepResult& result) {
  Json out;
  out["theorem"] = std::string(theorem_name(result.theorem));
  out["n"] = result.n;
  out["total_permutations"] = result.total_permutations;
  out["distinct_graphs"] = result.distinct_graphs;
  out["counts"] = Json::object();
  for (const auto& [k, v] : result.counts) out["counts"][k] = v;
  out["discrepancies"] = Json::array();
  for (const auto& d : result.discrepancies) {
    out["discrepancies"].push_back(
        {{"perm", d.perm}, {"edges", d.edges}, {"predicate", d.predicate}, {"detail", d.detail}});
  }
  out["ok"] = result.ok();
  return out;
}

}  // namespace permcm
