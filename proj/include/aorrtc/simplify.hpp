#pragma once

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "aorrtc/clock.hpp"
#include "aorrtc/space.hpp"
#include "aorrtc/world.hpp"

namespace aorrtc {

struct SimplifyConfig {
  int shortcut_rounds = 100;
  int spline_passes = 2;
  int max_no_improve = 20;
  double resolution = 0.01;
};

namespace detail {

struct ArcPoint {
  std::size_t segment;  // index of the segment [i, i+1] containing the point
  Configuration point;
};

inline ArcPoint locate_by_arc_length(const Path& path,
                                     const std::vector<double>& cumulative,
                                     double s) {
  std::size_t i = 0;
  while (i + 2 < path.size() && cumulative[i + 1] < s) ++i;
  const double seg_len = cumulative[i + 1] - cumulative[i];
  const double t = seg_len > 0.0 ? (s - cumulative[i]) / seg_len : 0.0;
  return {i, interpolate(path[i], path[i + 1], std::clamp(t, 0.0, 1.0))};
}

inline std::vector<double> cumulative_lengths(const Path& path) {
  std::vector<double> c(path.size(), 0.0);
  for (std::size_t i = 1; i < path.size(); ++i) {
    c[i] = c[i - 1] + cost(path[i - 1], path[i]);
  }
  return c;
}

}  // namespace detail

/// Randomized shortcutting: repeatedly tries to replace the stretch between
/// two random arc-length points with a straight edge. Sampling by arc length
/// favors long segments. Cost never increases and the output stays
/// collision-free.
inline Path shortcut(const Path& path, const World& world,
                     const SimplifyConfig& cfg, Rng& rng, Clock* clock = nullptr,
                     double deadline = std::numeric_limits<double>::infinity()) {
  if (path.size() < 3) return path;
  Path current = path;
  auto cumulative = detail::cumulative_lengths(current);
  int no_improve = 0;
  for (int round = 0; round < cfg.shortcut_rounds; ++round) {
    if (no_improve >= cfg.max_no_improve) break;
    if (clock && clock->now() > deadline) break;
    const double total = cumulative.back();
    if (total <= 0.0) break;
    std::uniform_real_distribution<double> dist(0.0, total);
    double s1 = dist(rng);
    double s2 = dist(rng);
    if (s1 > s2) std::swap(s1, s2);
    const auto p1 = detail::locate_by_arc_length(current, cumulative, s1);
    const auto p2 = detail::locate_by_arc_length(current, cumulative, s2);
    if (p1.segment == p2.segment) {
      ++no_improve;
      continue;
    }
    // Prefer the cut between the waypoints bracketing the sampled stretch:
    // it removes at least as much and lets the path reach a straight line
    // exactly instead of only in the limit.
    const std::size_t va = p1.segment;
    const std::size_t vb = p2.segment + 1;
    const double bracket_removed = cumulative[vb] - cumulative[va];
    const double bracket_added = cost(current[va], current[vb]);
    if (bracket_added < bracket_removed - 1e-12 &&
        validate(world, current[va], current[vb], cfg.resolution)) {
      Path next(current.begin(), current.begin() + va + 1);
      next.insert(next.end(), current.begin() + vb, current.end());
      current = std::move(next);
      cumulative = detail::cumulative_lengths(current);
      no_improve = 0;
      continue;
    }
    const double removed = (cumulative[p1.segment + 1] - s1) +
                           (cumulative[p2.segment] - cumulative[p1.segment + 1]) +
                           (s2 - cumulative[p2.segment]);
    const double added = cost(p1.point, p2.point);
    // The two partial-segment edges must be re-validated as well: discretized
    // checks are not closed under taking subsegments, and the output has to
    // re-validate edge by edge at the same resolution.
    if (!(added < removed - 1e-12) ||
        !validate(world, p1.point, p2.point, cfg.resolution) ||
        !validate(world, current[p1.segment], p1.point, cfg.resolution) ||
        !validate(world, p2.point, current[p2.segment + 1], cfg.resolution)) {
      ++no_improve;
      continue;
    }
    Path next(current.begin(), current.begin() + p1.segment + 1);
    if (next.back() != p1.point) next.push_back(p1.point);
    if (next.back() != p2.point) next.push_back(p2.point);
    for (std::size_t i = p2.segment + 1; i < current.size(); ++i) {
      if (next.back() != current[i]) next.push_back(current[i]);
    }
    current = std::move(next);
    cumulative = detail::cumulative_lengths(current);
    no_improve = 0;
  }
  return current;
}

/// One corner-cutting pass: each interior waypoint is replaced by the points
/// at 3/4 of the incoming and 1/4 of the outgoing segment when the cut edge
/// validates. Endpoints are fixed; corners that would collide are kept.
inline Path bspline_smooth(const Path& path, const World& world,
                           const SimplifyConfig& cfg) {
  if (path.size() < 3) return path;
  Path out;
  out.reserve(2 * path.size());
  out.push_back(path.front());
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    const Configuration q1 = interpolate(path[i - 1], path[i], 0.75);
    const Configuration q2 = interpolate(path[i], path[i + 1], 0.25);
    if (validate(world, q1, q2, cfg.resolution)) {
      out.push_back(q1);
      out.push_back(q2);
    } else {
      out.push_back(path[i]);
    }
  }
  out.push_back(path.back());
  return out;
}

/// Full simplification pipeline: shortcut, spline passes, final shortcut.
/// The deadline truncates passes but never corrupts the path.
inline Path simplify(const Path& path, const World& world,
                     const SimplifyConfig& cfg, Rng& rng, Clock* clock = nullptr,
                     double deadline = std::numeric_limits<double>::infinity()) {
  Path current = shortcut(path, world, cfg, rng, clock, deadline);
  for (int pass = 0; pass < cfg.spline_passes; ++pass) {
    if (clock && clock->now() > deadline) return current;
    Path smoothed = bspline_smooth(current, world, cfg);
    // Corner cuts only check the cut edge; the flanking subsegments can fail
    // discretized re-validation at shifted sample points. Keep the pass only
    // when the whole path still re-validates.
    if (!validate_path(world, smoothed, cfg.resolution)) break;
    current = std::move(smoothed);
  }
  if (clock && clock->now() > deadline) return current;
  return shortcut(current, world, cfg, rng, clock, deadline);
}

}  // namespace aorrtc
