#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "aorrtc/augmented.hpp"
#include "aorrtc/clock.hpp"
#include "aorrtc/informed.hpp"
#include "aorrtc/problem.hpp"
#include "aorrtc/simplify.hpp"
#include "aorrtc/space.hpp"
#include "aorrtc/world.hpp"

namespace aorrtc {

struct PlannerConfig {
  MetricWeights weights;
  double edge_range = 0.0;             // <=0: 10% of diagonal (2.0 for arms)
  double validation_resolution = 0.0;  // <=0: 1% of diagonal
  bool balance_trees = true;
  bool simplify = true;
  bool cost_resampling = true;
  bool stop_on_first_solution = false;
  std::uint64_t rng_seed = 0;
  double time_budget = 1.0;  // seconds
  std::optional<std::uint64_t> max_iterations;
  SimplifyConfig simplify_cfg;

  double resolved_edge_range(const Problem& p) const {
    if (edge_range > 0.0) return edge_range;
    return p.world.is_arm() ? 2.0 : 0.1 * p.space.diagonal();
  }

  double resolved_resolution(const Problem& p) const {
    if (validation_resolution > 0.0) return validation_resolution;
    return 0.01 * p.space.diagonal();
  }
};

enum class StopReason { solved, timeout, bound_infeasible };

struct SearchOutcome {
  std::optional<Path> path;
  std::uint64_t iterations = 0;
  std::size_t vertices_built = 0;
  StopReason reason = StopReason::timeout;
  // Final trees, kept for inspection and debugging dumps.
  std::optional<SearchTree> start_tree;
  std::optional<SearchTree> goal_tree;
};

struct AnytimeEvent {
  double elapsed = 0.0;
  double cost = 0.0;
  std::size_t waypoints = 0;
};

struct AnytimeRecord {
  std::vector<AnytimeEvent> events;
  std::optional<Path> final_path;
  StopReason reason = StopReason::timeout;
  std::uint64_t total_iterations = 0;
  // First inner search, before any simplification.
  std::optional<SearchOutcome> first_search;
};

using SolutionCallback = std::function<void(const AnytimeEvent&, const Path&)>;

namespace detail {

/// How the inner search treats the cost dimension.
enum class CostMode {
  augmented,       // full Algorithm-1 machinery
  informed_only,   // informed x sampling, no c_rand / filter / resampling
};

struct ExtendResult {
  VertexId id = 0;
  double c_new = 0.0;
};

/// Adds x_new to the tree, running the cost-resampling loop to look for a
/// cheaper parent. The loop stops when the same parent recurs or the
/// candidate edge fails validation; the initiating edge must already be
/// validated by the caller.
inline ExtendResult extend(SearchTree& tree, VertexId near_id,
                           const Configuration& x_new, const World& world,
                           double resolution, const MetricWeights& w,
                           bool resample, Rng& rng) {
  VertexId x_p = near_id;
  double c_new =
      tree.vertex(x_p).c_v + cost(tree.vertex(x_p).x_v, x_new);
  if (resample) {
    const double g_hat = cost(tree.root().x_v, x_new);
    VertexId x_near = near_id;
    while (true) {
      x_p = x_near;
      c_new = tree.vertex(x_p).c_v + cost(tree.vertex(x_p).x_v, x_new);
      const double c_rand = resample_lower(c_new, g_hat, rng);
      const auto cand = tree.nearest(x_new, c_rand, w);
      if (!cand || *cand == x_p) break;
      if (!validate(world, tree.vertex(*cand).x_v, x_new, resolution)) break;
      x_near = *cand;
    }
  }
  const AugmentedVertex& v = tree.insert(x_new, c_new, x_p);
  return {v.id, v.c_v};
}

/// Greedy connect toward x; returns the bridge vertex id in tree_b when the
/// growth reaches x with a valid final edge. Each nearest query is limited
/// to the remaining cost budget c_max - c.
inline std::optional<VertexId> connect(SearchTree& tree_b, const Configuration& x,
                                       double c, double c_max, const World& world,
                                       double range, double resolution,
                                       const MetricWeights& w, CostMode mode,
                                       bool resample, Rng& rng, Clock& clock,
                                       double deadline) {
  const double budget =
      (mode == CostMode::augmented && !std::isinf(c_max)) ? c_max - c
                                                          : kInfiniteCost;
  while (true) {
    if (clock.now() > deadline) return std::nullopt;
    const auto near = tree_b.nearest(x, budget, w);
    if (!near) return std::nullopt;
    const Configuration& x_near = tree_b.vertex(*near).x_v;
    const Configuration x_new = steer(x_near, x, range);
    if (!validate(world, x_near, x_new, resolution)) return std::nullopt;
    const ExtendResult ext =
        extend(tree_b, *near, x_new, world, resolution, w, resample, rng);
    if (x_new == x) return ext.id;
  }
}

inline SearchOutcome rrt_connect_impl(const Problem& problem, double c_max,
                                      const PlannerConfig& cfg, Rng& rng,
                                      Clock& clock, double deadline,
                                      CostMode mode) {
  SearchOutcome out;
  const double range = cfg.resolved_edge_range(problem);
  const double resolution = cfg.resolved_resolution(problem);
  const MetricWeights& w = cfg.weights;
  const bool resample = mode == CostMode::augmented && cfg.cost_resampling;

  InformedSampler sampler(problem.space, problem.start, problem.goal);
  if (!std::isinf(c_max) && c_max < sampler.c_min_theoretical()) {
    out.reason = StopReason::bound_infeasible;
    return out;
  }

  // Independent streams so that disabling cost resampling leaves the
  // configuration sample sequence untouched.
  Rng rng_sample(rng());
  Rng rng_resample(rng());

  std::vector<SearchTree> trees{SearchTree(problem.start),
                                SearchTree(problem.goal)};
  int ta = 0;
  int tb = 1;

  while (true) {
    if (clock.now() > deadline) break;
    if (cfg.max_iterations && out.iterations >= *cfg.max_iterations) break;
    ++out.iterations;

    if (cfg.balance_trees && trees[tb].size() < trees[ta].size()) {
      std::swap(ta, tb);
    }

    bool solved = false;
    do {
      const auto x_rand = sampler.sample(c_max, rng_sample);
      if (!x_rand) break;  // wasted iteration

      double c_rand = kInfiniteCost;
      if (mode == CostMode::augmented) {
        const double g_hat = cost(trees[ta].root().x_v, *x_rand);
        const double h_hat = cost(trees[tb].root().x_v, *x_rand);
        const auto c = sample_cost_bound(g_hat, h_hat, c_max, rng_sample);
        if (!c) break;  // empty cost interval, discard the sample
        c_rand = *c;
      }

      const auto near = trees[ta].nearest(*x_rand, c_rand, w);
      if (!near) break;
      const Configuration& x_near = trees[ta].vertex(*near).x_v;
      const Configuration x_new = steer(x_near, *x_rand, range);
      if (!validate(problem.world, x_near, x_new, resolution)) break;

      const ExtendResult ext = extend(trees[ta], *near, x_new, problem.world,
                                      resolution, w, resample, rng_resample);
      const auto bridge = connect(trees[tb], x_new, ext.c_new, c_max,
                                  problem.world, range, resolution, w, mode,
                                  resample, rng_resample, clock, deadline);
      if (!bridge) break;

      Path path = (ta == 0)
                      ? extract_path(trees[0], trees[1], ext.id, *bridge)
                      : extract_path(trees[0], trees[1], *bridge, ext.id);
      const double c = path_cost(path);
      if (mode == CostMode::augmented && !std::isinf(c_max) && !(c < c_max)) {
        // Steering/greedy connection produced a non-improving path;
        // discard it and keep searching under the same bound.
        break;
      }
      out.path = std::move(path);
      out.reason = StopReason::solved;
      solved = true;
    } while (false);
    if (solved) break;

    if (!cfg.balance_trees) std::swap(ta, tb);
  }

  out.vertices_built = trees[0].size() + trees[1].size();
  out.start_tree = std::move(trees[0]);
  out.goal_tree = std::move(trees[1]);
  return out;
}

inline SimplifyConfig resolved_simplify_cfg(const PlannerConfig& cfg,
                                            const Problem& problem) {
  SimplifyConfig s = cfg.simplify_cfg;
  s.resolution = cfg.resolved_resolution(problem);
  return s;
}

/// Simplification per call is capped at 10% of the remaining global budget.
inline double simplify_deadline(Clock& clock, double global_deadline) {
  const double now = clock.now();
  const double remaining = global_deadline - now;
  return now + 0.1 * std::max(remaining, 0.0);
}

/// Shared outer anytime loop of aorrtc and anytime_rrt_connects.
inline AnytimeRecord anytime_loop(const Problem& problem,
                                  const PlannerConfig& cfg, Rng& rng,
                                  Clock& clock, const SolutionCallback& on_solution,
                                  CostMode mode) {
  problem.check();
  AnytimeRecord record;
  const double deadline = clock.now() + cfg.time_budget;
  const SimplifyConfig scfg = resolved_simplify_cfg(cfg, problem);
  const double resolution = cfg.resolved_resolution(problem);

  SearchOutcome first =
      rrt_connect_impl(problem, kInfiniteCost, cfg, rng, clock, deadline, mode);
  record.total_iterations = first.iterations;
  if (!first.path) {
    record.reason = first.reason;
    record.first_search = std::move(first);
    return record;
  }

  Path best = *first.path;
  record.first_search = std::move(first);
  if (cfg.simplify) {
    Path s = simplify(best, problem.world, scfg, rng, &clock,
                      simplify_deadline(clock, deadline));
    if (validate_path(problem.world, s, resolution)) best = std::move(s);
  }
  double c_min = path_cost(best);
  record.events.push_back({clock.now(), c_min, best.size()});
  if (on_solution) on_solution(record.events.back(), best);

  while (!cfg.stop_on_first_solution && clock.now() < deadline) {
    if (cfg.max_iterations && record.total_iterations >= *cfg.max_iterations) {
      break;
    }
    PlannerConfig inner = cfg;
    if (cfg.max_iterations) {
      inner.max_iterations = *cfg.max_iterations - record.total_iterations;
    }
    SearchOutcome out =
        rrt_connect_impl(problem, c_min, inner, rng, clock, deadline, mode);
    record.total_iterations += out.iterations;
    if (out.reason == StopReason::bound_infeasible) break;
    if (!out.path) continue;  // deadline hit mid-search

    Path cand = *out.path;
    if (cfg.simplify) {
      Path s = simplify(cand, problem.world, scfg, rng, &clock,
                        simplify_deadline(clock, deadline));
      if (validate_path(problem.world, s, resolution)) cand = std::move(s);
    }
    const double c = path_cost(cand);
    // Re-measure and accept only verified improvements.
    if (c < c_min && validate_path(problem.world, cand, resolution)) {
      best = std::move(cand);
      c_min = c;
      record.events.push_back({clock.now(), c_min, best.size()});
      if (on_solution) on_solution(record.events.back(), best);
    }
  }

  record.final_path = std::move(best);
  record.reason = StopReason::solved;
  return record;
}

}  // namespace detail

/// One cost-bounded RRT-Connect search in the augmented space.
inline SearchOutcome rrt_connect(const Problem& problem, double c_max,
                                 const PlannerConfig& cfg, Rng& rng, Clock& clock,
                                 double deadline) {
  return detail::rrt_connect_impl(problem, c_max, cfg, rng, clock, deadline,
                                  detail::CostMode::augmented);
}

/// Baseline RRT-Connect: a single unbounded search, no simplification.
inline SearchOutcome rrt_connect_plain(const Problem& problem,
                                       const PlannerConfig& cfg, Rng& rng,
                                       Clock& clock) {
  problem.check();
  const double deadline = clock.now() + cfg.time_budget;
  return detail::rrt_connect_impl(problem, kInfiniteCost, cfg, rng, clock,
                                  deadline, detail::CostMode::augmented);
}

/// Anytime asymptotically-optimal RRT-Connect: repeated searches in the
/// cost-augmented space under a shrinking bound, simplifying each solution.
inline AnytimeRecord aorrtc(const Problem& problem, const PlannerConfig& cfg,
                            Rng& rng, Clock& clock,
                            const SolutionCallback& on_solution = nullptr) {
  return detail::anytime_loop(problem, cfg, rng, clock, on_solution,
                              detail::CostMode::augmented);
}

/// Baseline: iterated RRT-Connect with informed configuration sampling but no
/// cost dimension; a restart's solution is accepted only when cheaper.
inline AnytimeRecord anytime_rrt_connects(
    const Problem& problem, const PlannerConfig& cfg, Rng& rng, Clock& clock,
    const SolutionCallback& on_solution = nullptr) {
  return detail::anytime_loop(problem, cfg, rng, clock, on_solution,
                              detail::CostMode::informed_only);
}

}  // namespace aorrtc
