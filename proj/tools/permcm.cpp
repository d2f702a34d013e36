#include <omp.h>

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "permcm/caps.hpp"
#include "permcm/classifier.hpp"
#include "permcm/ideal.hpp"
#include "permcm/report_json.hpp"
#include "permcm/sweep.hpp"

using namespace permcm;

namespace {

constexpr int kOk = 0;
constexpr int kDiscrepancy = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string perm;
  std::string graph_path;
};

void add_input(CLI::App* cmd, Input& in) {
  auto* p = cmd->add_option("--perm", in.perm, "one-line permutation, e.g. 2,4,5,1,3");
  auto* g = cmd->add_option("--graph", in.graph_path, "graph JSON file {\"n\": .., \"edges\": [[u,v], ..]}");
  p->excludes(g);
  g->excludes(p);
}

Graph load_input(const Input& in) {
  try {
    if (!in.perm.empty()) return graph_from_permutation(Permutation::parse(in.perm));
    if (!in.graph_path.empty()) return load_graph_json(in.graph_path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  throw UsageError("one of --perm or --graph is required");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + out_path);
  file << text;
  if (!file) throw std::runtime_error("write failed: " + out_path);
}

std::string sweep_text(const SweepResult& r) {
  std::ostringstream out;
  out << "verify " << theorem_name(r.theorem) << " n=" << r.n << ": " << r.total_permutations
      << " permutations, " << r.distinct_graphs << " distinct graphs\n";
  for (const auto& [k, v] : r.counts) out << "  " << k << ": " << v << '\n';
  for (const auto& d : r.discrepancies) {
    out << "  DISCREPANCY perm=" << d.perm << " edges=[" << d.edges << "] " << d.predicate << ": " << d.detail
        << '\n';
  }
  out << (r.ok() ? "ok\n" : "FAILED\n");
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay classification of permutation graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads for parallel kernels (default: all cores)")->check(CLI::PositiveNumber);

  Input classify_in;
  bool no_oracles = false;
  std::string classify_out;
  auto* classify_cmd = app.add_subcommand("classify", "classify one graph and print a JSON report");
  add_input(classify_cmd, classify_in);
  classify_cmd->add_flag("--no-oracles", no_oracles, "skip the brute-force algebraic oracles");
  classify_cmd->add_option("--out", classify_out, "write the report here instead of stdout");

  std::string theorem;
  int verify_n = 0;
  bool serial = false;
  std::string verify_format = "text";
  std::string verify_out;
  auto* verify_cmd = app.add_subcommand(
      "verify", "check a theorem against its oracle on every graph from S_n (theorems: vd cm goren nearly ainv "
                "bicm hilb covs shed gap)");
  verify_cmd->add_option("theorem", theorem, "theorem id")->required();
  int verify_n_flag = 0;
  auto* n_pos = verify_cmd->add_option("length", verify_n, "permutation length");
  auto* n_opt = verify_cmd->add_option("--n", verify_n_flag, "permutation length");
  n_pos->excludes(n_opt);
  verify_cmd->add_flag("--serial", serial, "use the serial reference sweep");
  verify_cmd->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--out", verify_out, "write the result here instead of stdout");

  int survey_n = 0;
  std::string survey_out;
  std::string survey_format = "csv";
  auto* survey_cmd = app.add_subcommand(
      "survey", "one row per distinct graph from S_n. CSV columns: " + std::string(kSurveyColumns) +
                    " (booleans 0/1, empty when not applicable)");
  survey_cmd->add_option("--n", survey_n, "permutation length")->required();
  survey_cmd->add_option("--out", survey_out, "output file (default stdout)");
  survey_cmd->add_option("--format", survey_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  Input shed_in;
  std::string shed_out;
  auto* shed_cmd = app.add_subcommand("shed", "shedding order of a Cohen-Macaulay permutation graph");
  add_input(shed_cmd, shed_in);
  shed_cmd->add_option("--out", shed_out, "output file (default stdout)");

  Input ideal_in;
  std::string ideal_out;
  auto* ideal_cmd = app.add_subcommand("ideal", "cover ideal, linear quotients order and splitting tree");
  add_input(ideal_cmd, ideal_in);
  ideal_cmd->add_option("--out", ideal_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (jobs > 0) omp_set_num_threads(jobs);

  try {
    if (classify_cmd->parsed()) {
      const Graph g = load_input(classify_in);
      const auto report = classify(g, ClassifyOptions{!no_oracles, Execution::Parallel});
      emit(report_json(report).dump(2) + "\n", classify_out);
      return consistency_violations(report).empty() ? kOk : kDiscrepancy;
    }
    if (verify_cmd->parsed()) {
      const auto t = parse_theorem(theorem);
      if (!t) throw UsageError("unknown theorem '" + theorem + "'");
      if (verify_n == 0) verify_n = verify_n_flag;
      if (verify_n == 0) throw UsageError("verify needs n");
      const auto result = verify_theorem(*t, verify_n, serial ? Execution::Serial : Execution::Parallel);
      emit(verify_format == "json" ? sweep_json(result).dump(2) + "\n" : sweep_text(result), verify_out);
      return result.ok() ? kOk : kDiscrepancy;
    }
    if (survey_cmd->parsed()) {
      const auto rows = survey(survey_n);
      emit(survey_format == "json" ? survey_json(rows) : survey_csv(rows), survey_out);
      return kOk;
    }
    if (shed_cmd->parsed()) {
      const Graph g = load_input(shed_in);
      const auto cm = cm_by_clique_partition(g);
      if (!cm.cm) throw UsageError("graph is not Cohen-Macaulay");
      const auto cert = extract_shedding_order(g);
      std::string why;
      const bool valid = verify_shedding_certificate(g, cert, &why);
      Json out = shedding_json(cert);
      out["verified"] = valid;
      if (!valid) out["failure"] = why;
      emit(out.dump(2) + "\n", shed_out);
      return valid ? kOk : kDiscrepancy;
    }
    if (ideal_cmd->parsed()) {
      const Graph g = load_input(ideal_in);
      const MonomialIdeal j = cover_ideal(g);
      Json out;
      out["n"] = j.n();
      out["generators"] = ideal_json(j);
      out["text"] = j.to_string();
      const auto order = linear_quotients_order(j);
      if (order) {
        out["linear_quotients_order"] = Json::array();
        for (VertexSet u : *order) out["linear_quotients_order"].push_back(set_to_json(u));
      } else {
        out["linear_quotients_order"] = Json();
      }
      const auto tree = vertex_splittable_test(j);
      out["vertex_splittable"] = tree.has_value();
      out["split_tree"] = tree ? split_tree_json(*tree) : Json();
      emit(out.dump(2) + "\n", ideal_out);
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "permcm: " << e.what() << '\n';
    return kUsage;
  } catch (const NotPermutationGraph& e) {
    std::cerr << "permcm: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "permcm: " << e.what() << " (raise with PERMCM_CAPS, unsupported)\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "permcm: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
