#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aorrtc/aorrtc.hpp"

namespace {

struct CommonPlannerFlags {
  double edge_range = 0.0;
  double resolution = 0.0;
  double w_x = 1.0;
  double w_c = 1.0;
  bool no_balance = false;
  bool no_simplify = false;
  bool stop_on_first = false;
  std::uint64_t max_iterations = 0;

  void attach(CLI::App* app) {
    app->add_option("--edge-range", edge_range,
                    "Max edge length (default: 10% of diagonal, 2.0 for arms)");
    app->add_option("--resolution", resolution,
                    "Edge validation resolution (default: 1% of diagonal)");
    app->add_option("--wx", w_x, "Configuration distance weight (default 1.0)");
    app->add_option("--wc", w_c, "Cost distance weight (default 1.0)");
    app->add_flag("--no-balance", no_balance, "Disable balanced tree growth");
    app->add_flag("--no-simplify", no_simplify, "Disable path simplification");
    app->add_flag("--stop-on-first", stop_on_first,
                  "Stop after the first solution");
    app->add_option("--max-iterations", max_iterations,
                    "Iteration cap (0 = unlimited)");
  }

  aorrtc::PlannerConfig to_config(double budget, std::uint64_t seed) const {
    aorrtc::PlannerConfig cfg;
    cfg.edge_range = edge_range;
    cfg.validation_resolution = resolution;
    cfg.weights = {w_x, w_c};
    cfg.balance_trees = !no_balance;
    cfg.simplify = !no_simplify;
    cfg.stop_on_first_solution = stop_on_first;
    if (max_iterations > 0) cfg.max_iterations = max_iterations;
    cfg.time_budget = budget;
    cfg.rng_seed = seed;
    return cfg;
  }
};

std::unique_ptr<aorrtc::Clock> make_clock(bool deterministic) {
  if (deterministic) return std::make_unique<aorrtc::TickClock>();
  return std::make_unique<aorrtc::SteadyClock>();
}

int run_plan(const std::string& problem_file, const std::string& planner,
             double budget, std::uint64_t seed, bool deterministic,
             const CommonPlannerFlags& flags, const std::string& dump_path) {
  const aorrtc::Problem problem = aorrtc::load_problem(problem_file);
  aorrtc::PlannerConfig cfg = flags.to_config(budget, seed);
  aorrtc::Rng rng(seed);
  auto clock = make_clock(deterministic);

  const auto print_event = [](const aorrtc::AnytimeEvent& e, const aorrtc::Path&) {
    std::printf("t=%-10.4f cost=%-12.6f waypoints=%zu\n", e.elapsed, e.cost,
                e.waypoints);
  };

  aorrtc::AnytimeRecord record;
  if (planner == "aorrtc") {
    record = aorrtc::aorrtc(problem, cfg, rng, *clock, print_event);
  } else if (planner == "aorrtc-nosimplify") {
    cfg.simplify = false;
    record = aorrtc::aorrtc(problem, cfg, rng, *clock, print_event);
  } else if (planner == "artc") {
    record = aorrtc::anytime_rrt_connects(problem, cfg, rng, *clock, print_event);
  } else if (planner == "rrtc") {
    const auto out = aorrtc::rrt_connect_plain(problem, cfg, rng, *clock);
    if (out.path) {
      std::printf("t=%-10.4f cost=%-12.6f waypoints=%zu\n", clock->now(),
                  aorrtc::path_cost(*out.path), out.path->size());
      record.final_path = *out.path;
      record.reason = aorrtc::StopReason::solved;
    }
  } else {
    std::cerr << "unknown planner: " << planner << "\n";
    return 2;
  }

  if (!record.final_path) {
    std::printf("no solution (reason: %s)\n",
                record.reason == aorrtc::StopReason::bound_infeasible
                    ? "bound infeasible"
                    : "timeout");
    return 1;
  }
  std::printf("final cost: %.6f (%zu waypoints)\n",
              aorrtc::path_cost(*record.final_path), record.final_path->size());
  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    for (const auto& x : *record.final_path) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        out << (i ? "," : "") << x[i];
      }
      out << '\n';
    }
  }
  return 0;
}

int run_bench(const std::string& suite_file, const std::string& planners,
              std::size_t seeds, std::uint64_t base_seed, double budget,
              std::size_t jobs, bool deterministic, const std::string& out_dir,
              const std::vector<double>& epsilons,
              const CommonPlannerFlags& flags) {
  const aorrtc::Suite suite = aorrtc::load_suite(suite_file);
  aorrtc::BenchOptions opts;
  opts.planners.clear();
  std::stringstream ss(planners);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) opts.planners.push_back(token);
  }
  opts.seeds = seeds;
  opts.base_seed = base_seed;
  opts.budget = budget;
  opts.jobs = jobs;
  opts.deterministic = deterministic;
  opts.planner_cfg = flags.to_config(budget, base_seed);

  const aorrtc::SuiteReport report = aorrtc::run_suite(suite, opts);

  std::filesystem::create_directories(out_dir);
  {
    std::ofstream os(std::filesystem::path(out_dir) / "trials.csv");
    aorrtc::write_trials_csv(report, os);
  }
  {
    std::ofstream os(std::filesystem::path(out_dir) / "summary.csv");
    aorrtc::write_summary_csv(report, os);
  }
  std::map<std::string, double> oracles;
  for (const auto& sp : suite.problems) {
    if (sp.oracle_cost) oracles[sp.id] = *sp.oracle_cost;
  }
  if (!oracles.empty()) {
    const auto rows = aorrtc::near_optimality_report(report, oracles, epsilons);
    std::ofstream os(std::filesystem::path(out_dir) / "near_optimality.csv");
    aorrtc::write_near_optimality_csv(rows, os);
  }

  for (const auto& s : report.summaries) {
    std::printf("%-16s %-18s success %zu/%zu", s.problem_id.c_str(),
                s.planner_id.c_str(), s.solved, s.trials);
    if (s.median_final_cost) {
      std::printf("  median final cost %.6f", *s.median_final_cost);
    }
    std::printf("\n");
  }
  if (!report.requirements_met) {
    std::cerr << "suite requirements not met\n";
    return 1;
  }
  return 0;
}

int run_oracle(const std::string& problem_file, double resolution) {
  const aorrtc::Problem problem = aorrtc::load_problem(problem_file);
  const auto r = aorrtc::grid_oracle(problem, resolution);
  std::printf("oracle cost: %.9f\n", r.value);
  std::printf("resolution:  %.9f\n", r.resolution);
  std::printf("metrication bound: +%.2f%% (octile over Euclidean)\n",
              100.0 * r.metrication_bound);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AORRTC motion planning and benchmark harness"};
  app.require_subcommand(1);

  // plan
  auto* plan = app.add_subcommand("plan", "Plan a single problem");
  std::string problem_file, planner = "aorrtc", dump_path;
  double budget = 1.0;
  std::uint64_t seed = 0;
  bool deterministic = false;
  CommonPlannerFlags plan_flags;
  plan->add_option("--problem", problem_file, "Problem JSON file")->required();
  plan->add_option("--planner", planner,
                   "aorrtc | aorrtc-nosimplify | artc | rrtc");
  plan->add_option("--budget", budget, "Time budget in seconds");
  plan->add_option("--seed", seed, "RNG seed");
  plan->add_flag("--deterministic", deterministic,
                 "Virtual clock (reproducible timings)");
  plan->add_option("--dump-path", dump_path, "Write final path as CSV");
  plan_flags.attach(plan);

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  std::string suite_file, planners = "aorrtc", out_dir = "bench_out";
  std::size_t seeds = 10, jobs = 1;
  std::uint64_t base_seed = 0;
  bool bench_deterministic = false;
  std::vector<double> epsilons{0.0, 0.01, 0.02, 0.05, 0.1, 0.25, 0.5};
  CommonPlannerFlags bench_flags;
  bench->add_option("--suite", suite_file, "Suite JSON file")->required();
  bench->add_option("--planners", planners, "Comma-separated planner list");
  bench->add_option("--seeds", seeds, "Number of seeds per trial");
  bench->add_option("--base-seed", base_seed, "Suite base seed");
  bench->add_option("--budget", budget, "Time budget per trial in seconds");
  bench->add_option("--out-dir", out_dir, "Output directory for CSV files");
  bench->add_option("--jobs", jobs, "Parallel worker count");
  bench->add_flag("--deterministic", bench_deterministic,
                  "Virtual clock (byte-reproducible CSVs)");
  bench->add_option("--epsilons", epsilons,
                    "Suboptimality factors for the near-optimality report");
  bench_flags.attach(bench);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Grid oracle for 2D problems");
  std::string oracle_problem;
  double oracle_resolution = 1.0 / 512.0;
  oracle->add_option("--problem", oracle_problem, "Problem JSON file")->required();
  oracle->add_option("--resolution", oracle_resolution, "Grid spacing");

  CLI11_PARSE(app, argc, argv);

  try {
    if (plan->parsed()) {
      return run_plan(problem_file, planner, budget, seed, deterministic,
                      plan_flags, dump_path);
    }
    if (bench->parsed()) {
      return run_bench(suite_file, planners, seeds, base_seed, budget, jobs,
                       bench_deterministic, out_dir, epsilons, bench_flags);
    }
    if (oracle->parsed()) {
      return run_oracle(oracle_problem, oracle_resolution);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
