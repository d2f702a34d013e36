// One line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "permcm/betti.hpp"
#include "permcm/classifier.hpp"
#include "permcm/complex.hpp"
#include "permcm/sweep.hpp"

using namespace permcm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs theorem t for every n in [lo, hi]; collects graph and discrepancy counts.
Outcome sweep(Theorem t, int lo, int hi, const std::string& counted = {}) {
  Outcome out;
  std::uint64_t graphs = 0;
  std::uint64_t bad = 0;
  std::uint64_t hits = 0;
  for (int n = lo; n <= hi; ++n) {
    const auto r = verify_theorem(t, n, Execution::Parallel);
    graphs += r.distinct_graphs;
    bad += r.discrepancies.size();
    if (!counted.empty() && r.counts.count(counted)) hits += r.counts.at(counted);
    for (const auto& d : r.discrepancies) {
      std::fprintf(stderr, "  %s n=%d perm=%s: %s (%s)\n", std::string(theorem_name(t)).c_str(), n, d.perm.c_str(),
                   d.predicate.c_str(), d.detail.c_str());
    }
  }
  out.pass = bad == 0;
  out.detail = std::to_string(graphs) + " graphs, " + std::to_string(bad) + " discrepancies";
  if (!counted.empty()) out.detail += ", " + counted + "=" + std::to_string(hits);
  return out;
}

Outcome criterion_vd() {
  Outcome out = sweep(Theorem::vd, 3, 6);
  const auto start = Clock::now();
  const Outcome seven = sweep(Theorem::vd, 7, 7);
  const double t = seconds_since(start);
  out.pass = out.pass && seven.pass && t <= 600.0;
  out.detail = "n=3..6 " + out.detail + "; n=7 " + seven.detail + " in " + std::to_string(t) + "s (limit 600s)";
  return out;
}

Outcome criterion_ainv() {
  const auto start = Clock::now();
  Outcome a = sweep(Theorem::ainv, 1, 6, "cm");
  Outcome h = sweep(Theorem::hilb, 1, 6, "hilbertian");
  const double t = seconds_since(start);
  Outcome out;
  out.pass = a.pass && h.pass && t <= 120.0;
  out.detail = "reg/a: " + a.detail + "; hilbertian: " + h.detail + "; " + std::to_string(t) + "s (limit 120s)";
  return out;
}

Outcome criterion_fixtures() {
  Outcome out;
  std::string failures;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) failures += std::string(failures.empty() ? "" : ", ") + what;
  };

  const std::vector<Edge> unmixed_edges{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {2, 5}, {1, 4}};
  const auto unmixed = classify(Graph::from_edges(5, unmixed_edges));
  expect(unmixed.is_permutation, "unmixed non-CM permutation");
  expect(unmixed.unmixed, "unmixed non-CM unmixed");
  expect(unmixed.vertex_decomposable == false, "unmixed non-CM vd");
  expect(unmixed.cm == false, "unmixed non-CM cm");
  expect(maximal_clique_partitions(unmixed.graph, 2, 0).size() == 2, "unmixed non-CM partitions");

  const std::vector<Edge> listed{{1, 2}, {1, 4}, {1, 5}, {3, 4}, {3, 5}};
  expect(graph_from_permutation(Permutation::parse("2,4,5,1,3")).edges() == listed, "G(2,4,5,1,3) edges");

  const auto two = independence_complex(Graph::matching(2));
  const auto h = hilbert_data(two);
  expect(h.h == std::vector<std::int64_t>{1, 2, 1}, "2K2 h-vector");
  expect(h.a == 0, "2K2 a");
  expect(hochster_betti_table(two, Execution::Serial).type == 1, "2K2 type");
  expect(classify(Graph::matching(2)).a_invariant == 0, "2K2 classifier a");

  const auto p4 = classify(Graph::path(4));
  expect(p4.a_invariant == -1, "P4 a");
  expect(p4.bicm == true, "P4 bicm");
  expect(p4.hilbertian == true, "P4 hilbertian");
  expect(p4.oracle && p4.oracle->hilbert.a == -1, "P4 oracle a");

  out.pass = failures.empty();
  out.detail = out.pass ? "unmixed non-CM graph, G(2,4,5,1,3), 2K_2, P_4 exact" : "failed: " + failures;
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1  vd equivalence, n=3..7", criterion_vd},
      {"2  cm partition uniqueness, n=3..7",
       [] { return sweep(Theorem::cm, 3, 7, "unmixed_not_cm"); }},
      {"3  gorenstein iff disjoint edges, n<=7", [] { return sweep(Theorem::goren, 1, 7, "gorenstein"); }},
      {"4  nearly gorenstein iff K_n or P_n^c, n<=7",
       [] { return sweep(Theorem::nearly, 1, 7, "nearly_gorenstein"); }},
      {"5  gap witness, n<=8", [] { return sweep(Theorem::gap, 1, 8, "checked"); }},
      {"6  reg = im, a = im+tau-n, hilbertian, n<=6", criterion_ainv},
      {"7  bicm iff cm and chordal complement, n<=6", [] { return sweep(Theorem::bicm, 1, 6, "bicm"); }},
      {"8  splittable iff linear quotients iff cm, n<=6", [] { return sweep(Theorem::covs, 1, 6, "unmixed"); }},
      {"9  shedding certificates, n<=7", [] { return sweep(Theorem::shed, 1, 7, "cm"); }},
      {"10 regression fixtures", criterion_fixtures},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  %s  [%s]\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
