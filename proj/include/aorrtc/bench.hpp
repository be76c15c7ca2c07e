#pragma once

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "aorrtc/clock.hpp"
#include "aorrtc/io.hpp"
#include "aorrtc/planner.hpp"
#include "aorrtc/stats.hpp"

namespace aorrtc {

struct SuiteProblem {
  std::string id;
  Problem problem;
  std::optional<double> oracle_cost;  // empirical or grid c*-hat when known
  bool require_success = false;
};

struct Suite {
  std::string name;
  std::vector<SuiteProblem> problems;
};

struct Trial {
  std::string problem_id;
  std::string planner_id;
  std::uint64_t seed = 0;
  double budget = 0.0;
  AnytimeRecord record;
  bool crashed = false;

  bool solved() const { return !record.events.empty(); }
  double initial_time() const { return record.events.front().elapsed; }
  double initial_cost() const { return record.events.front().cost; }
  double final_cost() const { return record.events.back().cost; }
};

struct PlannerSummary {
  std::string problem_id;
  std::string planner_id;
  std::size_t trials = 0;
  std::size_t solved = 0;
  double success_rate = 0.0;
  double cp_lower = 0.0;
  double cp_upper = 1.0;
  std::optional<double> median_initial_time;
  std::optional<double> median_initial_cost;
  std::optional<double> median_final_cost;
  std::optional<double> median_final_ci_lower;
  std::optional<double> median_final_ci_upper;
  std::optional<double> oracle_cost;
  std::optional<double> median_suboptimality;
};

struct SuiteReport {
  std::vector<Trial> trials;
  std::vector<PlannerSummary> summaries;
  bool requirements_met = true;
};

struct BenchOptions {
  std::vector<std::string> planners{"aorrtc"};
  std::size_t seeds = 10;
  std::uint64_t base_seed = 0;
  double budget = 1.0;         // seconds per trial
  std::size_t jobs = 1;
  bool deterministic = false;  // virtual clock; bit-reproducible output
  PlannerConfig planner_cfg;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline AnytimeRecord run_planner(const std::string& planner_id,
                                 const Problem& problem, PlannerConfig cfg,
                                 Rng& rng, Clock& clock) {
  if (planner_id == "aorrtc") {
    return aorrtc(problem, cfg, rng, clock);
  }
  if (planner_id == "aorrtc-nosimplify") {
    cfg.simplify = false;
    return aorrtc(problem, cfg, rng, clock);
  }
  if (planner_id == "artc") {
    return anytime_rrt_connects(problem, cfg, rng, clock);
  }
  if (planner_id == "rrtc") {
    SearchOutcome out = rrt_connect_plain(problem, cfg, rng, clock);
    AnytimeRecord rec;
    rec.reason = out.reason;
    rec.total_iterations = out.iterations;
    if (out.path) {
      rec.events.push_back({clock.now(), path_cost(*out.path), out.path->size()});
      rec.final_path = *out.path;
    }
    rec.first_search = std::move(out);
    return rec;
  }
  throw std::invalid_argument("unknown planner: " + planner_id);
}

inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace detail

inline Suite parse_suite(const nlohmann::json& j,
                         const std::filesystem::path& base_dir = ".") {
  detail::require_fields(j, {"name", "problems"}, "suite");
  Suite suite;
  suite.name = j.value("name", "suite");
  for (const auto& jp : j.at("problems")) {
    detail::require_fields(
        jp, {"id", "problem", "file", "oracle_cost", "require_success"},
        "suite problem");
    SuiteProblem sp;
    sp.id = jp.at("id").get<std::string>();
    if (jp.contains("problem")) {
      sp.problem = parse_problem(jp.at("problem"), sp.id);
    } else {
      sp.problem = load_problem(base_dir / jp.at("file").get<std::string>());
    }
    if (jp.contains("oracle_cost")) {
      sp.oracle_cost = jp.at("oracle_cost").get<double>();
    }
    sp.require_success = jp.value("require_success", false);
    suite.problems.push_back(std::move(sp));
  }
  return suite;
}

inline Suite load_suite(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open suite file: " + path.string());
  }
  nlohmann::json j;
  in >> j;
  return parse_suite(j, path.parent_path());
}

/// Runs every (problem, planner, seed) trial. Trials are independent; with
/// jobs > 1 they execute on a worker pool and the output order is fixed by
/// sorting, so reports do not depend on scheduling.
inline SuiteReport run_suite(const Suite& suite, const BenchOptions& opts) {
  struct Job {
    std::size_t problem_idx;
    std::string planner_id;
    std::uint64_t seed_idx;
  };
  std::vector<Job> jobs;
  for (std::size_t pi = 0; pi < suite.problems.size(); ++pi) {
    for (const auto& planner : opts.planners) {
      for (std::uint64_t s = 0; s < opts.seeds; ++s) {
        jobs.push_back({pi, planner, s});
      }
    }
  }

  SuiteReport report;
  report.trials.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      const Job& job = jobs[i];
      const SuiteProblem& sp = suite.problems[job.problem_idx];
      Trial& trial = report.trials[i];
      trial.problem_id = sp.id;
      trial.planner_id = job.planner_id;
      trial.seed = job.seed_idx;
      trial.budget = opts.budget;
      PlannerConfig cfg = opts.planner_cfg;
      cfg.time_budget = opts.budget;
      cfg.rng_seed = detail::splitmix64(opts.base_seed ^ detail::splitmix64(i));
      Rng rng(cfg.rng_seed);
      try {
        if (opts.deterministic) {
          TickClock clock;
          trial.record = detail::run_planner(job.planner_id, sp.problem, cfg,
                                             rng, clock);
        } else {
          SteadyClock clock;
          trial.record = detail::run_planner(job.planner_id, sp.problem, cfg,
                                             rng, clock);
        }
      } catch (const std::exception&) {
        trial.crashed = true;  // recorded as failure, suite continues
      }
    }
  };
  if (opts.jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < opts.jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Aggregate per (problem, planner), in suite/planner-list order.
  for (const auto& sp : suite.problems) {
    for (const auto& planner : opts.planners) {
      PlannerSummary sum;
      sum.problem_id = sp.id;
      sum.planner_id = planner;
      std::vector<double> t0, c0, cf;
      for (const Trial& trial : report.trials) {
        if (trial.problem_id != sp.id || trial.planner_id != planner) continue;
        ++sum.trials;
        if (trial.solved()) {
          ++sum.solved;
          t0.push_back(trial.initial_time());
          c0.push_back(trial.initial_cost());
          cf.push_back(trial.final_cost());
        }
      }
      if (sum.trials == 0) continue;
      sum.success_rate =
          static_cast<double>(sum.solved) / static_cast<double>(sum.trials);
      const auto [lo, hi] = clopper_pearson(sum.solved, sum.trials, 0.01);
      sum.cp_lower = lo;
      sum.cp_upper = hi;
      if (!cf.empty()) {
        sum.median_initial_time = median(t0);
        sum.median_initial_cost = median(c0);
        sum.median_final_cost = median(cf);
        const auto [mlo, mhi] = median_ci(cf, 0.01);
        sum.median_final_ci_lower = mlo;
        sum.median_final_ci_upper = mhi;
      }
      if (sp.oracle_cost) {
        sum.oracle_cost = sp.oracle_cost;
        if (sum.median_final_cost) {
          sum.median_suboptimality = *sum.median_final_cost / *sp.oracle_cost;
        }
      }
      if (sp.require_success && sum.solved < sum.trials) {
        report.requirements_met = false;
      }
      report.summaries.push_back(std::move(sum));
    }
  }
  return report;
}

/// trials.csv: one row per improvement event; unsolved trials emit a single
/// row with cost=inf so every trial is accounted for.
inline void write_trials_csv(const SuiteReport& report, std::ostream& os) {
  os << "problem,planner,seed,t,cost,waypoints\n";
  for (const Trial& trial : report.trials) {
    if (trial.record.events.empty()) {
      os << trial.problem_id << ',' << trial.planner_id << ',' << trial.seed
         << ',' << detail::format_real(trial.budget) << ",inf,0\n";
      continue;
    }
    for (const AnytimeEvent& e : trial.record.events) {
      os << trial.problem_id << ',' << trial.planner_id << ',' << trial.seed
         << ',' << detail::format_real(e.elapsed) << ','
         << detail::format_real(e.cost) << ',' << e.waypoints << '\n';
    }
  }
}

inline void write_summary_csv(const SuiteReport& report, std::ostream& os) {
  os << "problem,planner,trials,solved,success_rate,cp_lower,cp_upper,"
        "median_initial_time,median_initial_cost,median_final_cost,"
        "median_final_ci_lower,median_final_ci_upper,oracle_cost,"
        "median_suboptimality\n";
  const auto opt = [](const std::optional<double>& v) {
    return v ? detail::format_real(*v) : std::string();
  };
  for (const PlannerSummary& s : report.summaries) {
    os << s.problem_id << ',' << s.planner_id << ',' << s.trials << ','
       << s.solved << ',' << detail::format_real(s.success_rate) << ','
       << detail::format_real(s.cp_lower) << ','
       << detail::format_real(s.cp_upper) << ',' << opt(s.median_initial_time)
       << ',' << opt(s.median_initial_cost) << ',' << opt(s.median_final_cost)
       << ',' << opt(s.median_final_ci_lower) << ','
       << opt(s.median_final_ci_upper) << ',' << opt(s.oracle_cost) << ','
       << opt(s.median_suboptimality) << '\n';
  }
}

struct NearOptimalityRow {
  std::string problem_id;
  std::string planner_id;
  double epsilon = 0.0;
  std::size_t trials = 0;
  double fraction = 0.0;  // trials achieving cost <= (1 + eps) * oracle
  std::optional<double> median_time;  // time to first reach that threshold
};

/// Fraction of trials within a suboptimality factor of the oracle, and the
/// median time to reach it. Problems without an oracle value are skipped.
inline std::vector<NearOptimalityRow> near_optimality_report(
    const SuiteReport& report, const std::map<std::string, double>& oracles,
    const std::vector<double>& epsilons) {
  std::vector<NearOptimalityRow> rows;
  std::map<std::pair<std::string, std::string>, std::vector<const Trial*>> groups;
  for (const Trial& t : report.trials) {
    groups[{t.problem_id, t.planner_id}].push_back(&t);
  }
  for (const auto& [key, trials] : groups) {
    const auto it = oracles.find(key.first);
    if (it == oracles.end()) continue;
    const double oracle = it->second;
    for (double eps : epsilons) {
      NearOptimalityRow row;
      row.problem_id = key.first;
      row.planner_id = key.second;
      row.epsilon = eps;
      row.trials = trials.size();
      const double threshold = (1.0 + eps) * oracle;
      std::vector<double> times;
      for (const Trial* t : trials) {
        for (const AnytimeEvent& e : t->record.events) {
          if (e.cost <= threshold) {
            times.push_back(e.elapsed);
            break;
          }
        }
      }
      row.fraction =
          static_cast<double>(times.size()) / static_cast<double>(trials.size());
      if (!times.empty()) row.median_time = median(times);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline void write_near_optimality_csv(const std::vector<NearOptimalityRow>& rows,
                                      std::ostream& os) {
  os << "problem,planner,epsilon,trials,fraction,median_time\n";
  for (const auto& r : rows) {
    os << r.problem_id << ',' << r.planner_id << ','
       << detail::format_real(r.epsilon) << ',' << r.trials << ','
       << detail::format_real(r.fraction) << ','
       << (r.median_time ? detail::format_real(*r.median_time) : std::string())
       << '\n';
  }
}

}  // namespace aorrtc
