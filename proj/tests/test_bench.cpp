#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "test_helpers.hpp"

using namespace aorrtc;

namespace {

Suite micro_suite() {
  return load_suite(aorrtc::testing::problem_dir() / "micro.json");
}

BenchOptions micro_options() {
  BenchOptions opts;
  opts.planners = {"aorrtc"};
  opts.seeds = 3;
  opts.budget = 0.02;  // virtual seconds
  opts.deterministic = true;
  return opts;
}

}  // namespace

TEST_CASE("problem parser rejects unknown fields") {
  nlohmann::json j = {
      {"space", {{"dimension", 2}, {"lower", {0.0, 0.0}}, {"upper", {1.0, 1.0}}}},
      {"world", {{"type", "point"}, {"obstacles", nlohmann::json::array()}}},
      {"start", {0.1, 0.5}},
      {"goal", {0.9, 0.5}},
      {"typo_field", 1}};
  CHECK_THROWS_WITH(parse_problem(j),
                    Catch::Matchers::ContainsSubstring("typo_field"));
}

TEST_CASE("problem parser rejects invalid endpoints") {
  nlohmann::json j = {
      {"space", {{"dimension", 2}, {"lower", {0.0, 0.0}}, {"upper", {1.0, 1.0}}}},
      {"world",
       {{"type", "point"},
        {"obstacles",
         {{{"type", "box"}, {"min", {0.4, 0.4}}, {"max", {0.6, 0.6}}}}}}},
      {"start", {0.5, 0.5}},
      {"goal", {0.9, 0.5}}};
  CHECK_THROWS_WITH(parse_problem(j),
                    Catch::Matchers::ContainsSubstring("collision"));
}

TEST_CASE("desk suite problems all load and validate") {
  const Suite suite = load_suite(aorrtc::testing::problem_dir() / "desk.json");
  CHECK(suite.problems.size() == 7);
  for (const auto& sp : suite.problems) {
    CHECK_NOTHROW(sp.problem.check());
  }
}

TEST_CASE("run_suite accounts for every trial") {
  const Suite suite = micro_suite();
  BenchOptions opts = micro_options();
  opts.seeds = 5;
  Suite one;
  one.name = "one";
  one.problems.push_back(suite.problems.front());
  const SuiteReport report = run_suite(one, opts);
  CHECK(report.trials.size() == 5);
  std::ostringstream os;
  write_trials_csv(report, os);
  std::size_t rows = 0;
  std::string line;
  std::istringstream in(os.str());
  std::getline(in, line);  // header
  while (std::getline(in, line)) ++rows;
  CHECK(rows >= 5);
}

TEST_CASE("deterministic reruns produce byte-identical CSVs") {
  const Suite suite = micro_suite();
  const BenchOptions opts = micro_options();
  std::ostringstream t1, s1, t2, s2;
  const SuiteReport r1 = run_suite(suite, opts);
  const SuiteReport r2 = run_suite(suite, opts);
  write_trials_csv(r1, t1);
  write_trials_csv(r2, t2);
  write_summary_csv(r1, s1);
  write_summary_csv(r2, s2);
  CHECK(t1.str() == t2.str());
  CHECK(s1.str() == s2.str());
}

TEST_CASE("parallel execution matches sequential output") {
  const Suite suite = micro_suite();
  BenchOptions opts = micro_options();
  const SuiteReport seq = run_suite(suite, opts);
  opts.jobs = 4;
  const SuiteReport par = run_suite(suite, opts);
  std::ostringstream a, b;
  write_trials_csv(seq, a);
  write_trials_csv(par, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("a crashing planner is recorded as failure and the suite continues") {
  Suite suite = micro_suite();
  BenchOptions opts = micro_options();
  opts.planners = {"no-such-planner", "aorrtc"};
  const SuiteReport report = run_suite(suite, opts);
  std::size_t crashed = 0;
  std::size_t solved = 0;
  for (const auto& t : report.trials) {
    if (t.crashed) ++crashed;
    if (t.solved()) ++solved;
  }
  CHECK(crashed == suite.problems.size() * opts.seeds);
  CHECK(solved > 0);
}

TEST_CASE("summary success curves and medians are well-formed") {
  const Suite suite = micro_suite();
  const SuiteReport report = run_suite(suite, micro_options());
  for (const auto& s : report.summaries) {
    CHECK(s.success_rate >= 0.0);
    CHECK(s.success_rate <= 1.0);
    CHECK(s.cp_lower <= s.success_rate);
    CHECK(s.cp_upper >= s.success_rate);
    if (s.median_final_cost) {
      CHECK(*s.median_final_cost <= *s.median_initial_cost + 1e-12);
    }
  }
}

TEST_CASE("per-trial anytime costs are nonincreasing over time") {
  const Suite suite = micro_suite();
  const SuiteReport report = run_suite(suite, micro_options());
  for (const auto& t : report.trials) {
    for (std::size_t i = 1; i < t.record.events.size(); ++i) {
      CHECK(t.record.events[i].cost < t.record.events[i - 1].cost);
      CHECK(t.record.events[i].elapsed >= t.record.events[i - 1].elapsed);
    }
  }
}

TEST_CASE("near-optimality fractions are nondecreasing in epsilon") {
  const Suite suite = micro_suite();
  const SuiteReport report = run_suite(suite, micro_options());
  const std::map<std::string, double> oracles{{"free2d", 0.8},
                                              {"centered_box", 1.1403}};
  const std::vector<double> epsilons{0.0, 0.01, 0.05, 0.1, 0.5, 10.0};
  const auto rows = near_optimality_report(report, oracles, epsilons);
  REQUIRE_FALSE(rows.empty());
  double prev = -1.0;
  std::string prev_key;
  for (const auto& r : rows) {
    const std::string key = r.problem_id + "/" + r.planner_id;
    if (key != prev_key) prev = -1.0;
    CHECK(r.fraction >= prev);
    prev = r.fraction;
    prev_key = key;
  }
  // A huge epsilon covers every solved trial.
  for (const auto& r : rows) {
    if (r.epsilon == 10.0) CHECK(r.fraction == 1.0);
  }
}

TEST_CASE("problems without an oracle are excluded from the report") {
  const Suite suite = micro_suite();
  const SuiteReport report = run_suite(suite, micro_options());
  const auto rows =
      near_optimality_report(report, {{"free2d", 0.8}}, {0.0, 0.1});
  for (const auto& r : rows) {
    CHECK(r.problem_id == "free2d");
  }
}
