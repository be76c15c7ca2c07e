#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "aorrtc/problem.hpp"
#include "aorrtc/space.hpp"
#include "aorrtc/world.hpp"

namespace aorrtc {

struct GridOracleResult {
  double value = 0.0;       // octile grid shortest-path cost
  double resolution = 0.0;  // grid spacing used
  // The grid value never underestimates the true optimum, but can exceed it
  // by up to this fraction (octile metrication) plus O(resolution) snapping.
  double metrication_bound = 0.0;
};

/// Dijkstra over an 8-connected grid with octile edge weights, restricted to
/// valid cells. An upper bound on the true optimum for 2D point worlds.
inline GridOracleResult grid_oracle(const Problem& problem, double resolution) {
  if (problem.space.dimension != 2 || problem.world.is_arm()) {
    throw std::invalid_argument("grid_oracle: requires a 2D point world");
  }
  if (!(resolution > 0.0)) {
    throw std::invalid_argument("grid_oracle: resolution must be positive");
  }
  const auto& space = problem.space;
  const auto nx = static_cast<std::int64_t>(
                      std::round((space.upper[0] - space.lower[0]) / resolution)) +
                  1;
  const auto ny = static_cast<std::int64_t>(
                      std::round((space.upper[1] - space.lower[1]) / resolution)) +
                  1;
  const auto index = [&](std::int64_t i, std::int64_t j) { return i * ny + j; };
  const auto point = [&](std::int64_t i, std::int64_t j) {
    return Configuration{space.lower[0] + static_cast<double>(i) * resolution,
                         space.lower[1] + static_cast<double>(j) * resolution};
  };

  std::vector<char> valid(static_cast<std::size_t>(nx * ny));
  for (std::int64_t i = 0; i < nx; ++i) {
    for (std::int64_t j = 0; j < ny; ++j) {
      valid[index(i, j)] = is_valid(problem.world, point(i, j)) ? 1 : 0;
    }
  }

  const auto snap = [&](const Configuration& x) {
    const auto i = static_cast<std::int64_t>(
        std::round((x[0] - space.lower[0]) / resolution));
    const auto j = static_cast<std::int64_t>(
        std::round((x[1] - space.lower[1]) / resolution));
    return std::pair<std::int64_t, std::int64_t>{std::clamp<std::int64_t>(i, 0, nx - 1),
                                                 std::clamp<std::int64_t>(j, 0, ny - 1)};
  };
  const auto [si, sj] = snap(problem.start);
  const auto [gi, gj] = snap(problem.goal);
  if (!valid[index(si, sj)] || !valid[index(gi, gj)]) {
    throw std::runtime_error("grid_oracle: start or goal cell invalid");
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(valid.size(), kInf);
  using Node = std::pair<double, std::int64_t>;
  std::priority_queue<Node, std::vector<Node>, std::greater<>> queue;
  dist[index(si, sj)] = 0.0;
  queue.push({0.0, index(si, sj)});

  const std::int64_t di[8] = {1, -1, 0, 0, 1, 1, -1, -1};
  const std::int64_t dj[8] = {0, 0, 1, -1, 1, -1, 1, -1};
  const double sqrt2 = std::sqrt(2.0);

  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    if (u == index(gi, gj)) break;
    const std::int64_t ui = u / ny;
    const std::int64_t uj = u % ny;
    for (int k = 0; k < 8; ++k) {
      const std::int64_t vi = ui + di[k];
      const std::int64_t vj = uj + dj[k];
      if (vi < 0 || vi >= nx || vj < 0 || vj >= ny) continue;
      const std::int64_t v = index(vi, vj);
      if (!valid[v]) continue;
      // Diagonal moves may not cut obstacle corners.
      if (k >= 4 && (!valid[index(ui, vj)] || !valid[index(vi, uj)])) continue;
      const double w = (k < 4 ? resolution : resolution * sqrt2);
      if (dist[u] + w < dist[v]) {
        dist[v] = dist[u] + w;
        queue.push({dist[v], v});
      }
    }
  }

  const double grid_cost = dist[index(gi, gj)];
  if (!std::isfinite(grid_cost)) {
    throw std::runtime_error("grid_oracle: goal unreachable on grid");
  }
  GridOracleResult r;
  r.value = cost(problem.start, point(si, sj)) + grid_cost +
            cost(point(gi, gj), problem.goal);
  r.resolution = resolution;
  // Worst-case octile/Euclidean ratio: sqrt(4 - 2*sqrt(2)) ~ 1.0824.
  r.metrication_bound = std::sqrt(4.0 - 2.0 * std::sqrt(2.0)) - 1.0;
  return r;
}

}  // namespace aorrtc
