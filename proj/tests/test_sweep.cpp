#include "doctest.h"
#include "permcm/report_json.hpp"
#include "permcm/sweep.hpp"
#include "support.hpp"

using namespace permcm;

TEST_CASE("theorem names round-trip") {
  for (Theorem t : all_theorems()) CHECK(parse_theorem(theorem_name(t)) == t);
  CHECK(all_theorems().size() == 10);
  CHECK_FALSE(parse_theorem("bogus"));
}

TEST_CASE("permutation graphs are distinct labeled graphs") {
  CHECK(permutation_graphs(0).size() == 1);
  CHECK(permutation_graphs(1).size() == 1);
  const auto three = permutation_graphs(3);
  REQUIRE(three.size() == 6);
  CHECK(three.front().perm.to_string() == "1,2,3");
  CHECK(three.back().graph == Graph::complete(3));
  for (int n = 1; n <= 6; ++n) CHECK(permutation_graphs(n).size() == factorial(n));
  CHECK(factorial(7) == 5040);
}

TEST_CASE("caps parsing") {
  const Caps c = parse_caps("vd=8, hochster=16,gap=9");
  CHECK(c.vd == 8);
  CHECK(c.hochster_vertices == 16);
  CHECK(c.gap == 9);
  CHECK(c.cm == Caps{}.cm);
  CHECK(parse_caps("").vd == Caps{}.vd);
  CHECK_THROWS(parse_caps("vd"));
  CHECK_THROWS(parse_caps("nope=3"));
  CHECK_THROWS(parse_caps("vd=x"));
  CHECK_THROWS(parse_caps("vd=-1"));
}

TEST_CASE("sweeps respect caps") {
  Caps small;
  small.vd = 3;
  CHECK_THROWS_AS(verify_theorem(Theorem::vd, 4, Execution::Serial, small), CapExceeded);
  CHECK_NOTHROW(verify_theorem(Theorem::vd, 3, Execution::Serial, small));
  CHECK_THROWS_AS(verify_theorem(Theorem::ainv, 0, Execution::Serial), CapExceeded);
  small.survey = 2;
  CHECK_THROWS_AS(survey(3, Execution::Serial, small), CapExceeded);
}

TEST_CASE("every theorem sweep is clean at n = 5 and parallel equals serial") {
  for (Theorem t : all_theorems()) {
    const auto serial = verify_theorem(t, 5, Execution::Serial);
    const auto parallel = verify_theorem(t, 5, Execution::Parallel);
    INFO(theorem_name(t));
    CHECK(serial.ok());
    CHECK(serial == parallel);
    CHECK(serial.total_permutations == 120);
    CHECK(serial.distinct_graphs == 120);
    CHECK(serial.counts.at("graphs") == 120);
  }
}

TEST_CASE("goren sweep at n = 4 finds exactly the isolated-free matchings") {
  const auto r = verify_theorem(Theorem::goren, 4, Execution::Serial);
  CHECK(r.ok());
  // Only 2,1,4,3 gives two disjoint edges and no isolated vertex.
  CHECK(r.counts.at("gorenstein") == 1);
  CHECK(r.counts.at("isolated_free") + r.counts.at("skipped_isolated") == 24);
}

TEST_CASE("counts add up") {
  const auto cm = verify_theorem(Theorem::cm, 6, Execution::Parallel);
  CHECK(cm.ok());
  const auto unmixed_not_cm = cm.counts.count("unmixed_not_cm") ? cm.counts.at("unmixed_not_cm") : 0;
  const auto none = cm.counts.count("unmixed_not_cm_no_partition") ? cm.counts.at("unmixed_not_cm_no_partition") : 0;
  const auto several =
      cm.counts.count("unmixed_not_cm_several_partitions") ? cm.counts.at("unmixed_not_cm_several_partitions") : 0;
  CHECK(unmixed_not_cm == none + several);
  CHECK(cm.counts.at("cm") <= cm.counts.at("unmixed"));
}

TEST_CASE("a discrepancy is reported, not thrown") {
  // A graph that is not a permutation graph makes the classifier throw;
  // check_graph must turn that into a discrepancy.
  const PermutationGraph bogus{Permutation::identity(5), Graph::cycle(5)};
  const auto check = check_graph(Theorem::cm, bogus);
  REQUIRE(check.discrepancies.size() == 1);
  CHECK(check.discrepancies[0].predicate == "exception");
}

TEST_CASE("survey rows") {
  const auto one = survey(1, Execution::Serial);
  REQUIRE(one.size() == 1);
  CHECK(one[0].graph.edge_count() == 0);
  CHECK(one[0].cm);
  CHECK(one[0].a == -1);

  const auto three = survey(3, Execution::Serial);
  CHECK(three.size() == 6);
  const std::string csv = survey_csv(three);
  CHECK(csv.rfind(std::string(kSurveyColumns) + "\n", 0) == 0);
  CHECK(csv.find("\"3,2,1\",1-2 1-3 2-3,1,2,1,1,1,1,0,1,1,0,0,1\n") != std::string::npos);
  CHECK(csv.find("\"2,3,1\",1-2 1-3,2,1,1,1,0,0,0,0,0,,,1\n") != std::string::npos);
  CHECK(survey_csv(survey(4, Execution::Parallel)) == survey_csv(survey(4, Execution::Serial)));
  CHECK(survey_json(survey(4, Execution::Parallel)) == survey_json(survey(4, Execution::Serial)));
  const auto parsed = nlohmann::json::parse(survey_json(three));
  CHECK(parsed.size() == 6);
  CHECK(parsed[3]["hilbertian"].is_null());
}

TEST_CASE("report JSON has stable fields") {
  const auto r = classify(Graph::path(4));
  const Json j = report_json(r);
  for (const char* key : {"graph", "is_permutation", "cohesive_order", "unmixed", "cm", "vertex_decomposable",
                          "gorenstein", "nearly_gorenstein", "bicm", "hilbertian", "a_invariant", "reg",
                          "invariants", "witnesses", "oracle"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["witnesses"]["shedding"]["order"].size() == 2);
  CHECK(j["witnesses"]["clique_partitions"].size() == 1);
  CHECK(j["a_invariant"] == -1);
  CHECK(j["cohesive_order"].is_string());
  CHECK(j["oracle"]["betti"]["type"] == 2);

  const Json c5 = report_json(classify(Graph::cycle(5)));
  CHECK(c5["cm"].is_null());
  CHECK_FALSE(c5["oracle"].is_null());

  const Json s = sweep_json(verify_theorem(Theorem::ainv, 3, Execution::Serial));
  CHECK(s["ok"] == true);
  CHECK(s["theorem"] == "ainv");
}
