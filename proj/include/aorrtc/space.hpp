#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace aorrtc {

/// A point in the n-dimensional configuration space.
using Configuration = std::vector<double>;

/// An ordered waypoint sequence from start to goal.
using Path = std::vector<Configuration>;

using Rng = std::mt19937_64;

/// Axis-aligned box domain for the configuration space.
struct ConfigurationSpace {
  std::size_t dimension = 0;
  std::vector<double> lower;
  std::vector<double> upper;

  ConfigurationSpace() = default;
  ConfigurationSpace(std::vector<double> lo, std::vector<double> hi)
      : dimension(lo.size()), lower(std::move(lo)), upper(std::move(hi)) {
    if (dimension == 0 || upper.size() != dimension) {
      throw std::invalid_argument("ConfigurationSpace: bounds size mismatch");
    }
    for (std::size_t i = 0; i < dimension; ++i) {
      if (!(lower[i] < upper[i])) {
        throw std::invalid_argument("ConfigurationSpace: lower must be < upper");
      }
    }
  }

  static ConfigurationSpace unit_box(std::size_t n) {
    return ConfigurationSpace(std::vector<double>(n, 0.0),
                              std::vector<double>(n, 1.0));
  }

  bool contains(const Configuration& x) const {
    if (x.size() != dimension) return false;
    for (std::size_t i = 0; i < dimension; ++i) {
      if (x[i] < lower[i] || x[i] > upper[i]) return false;
    }
    return true;
  }

  double diagonal() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dimension; ++i) {
      const double d = upper[i] - lower[i];
      s += d * d;
    }
    return std::sqrt(s);
  }
};

/// Euclidean edge cost c(a, b). The admissible estimate c-hat coincides
/// with this for straight-line edges.
inline double cost(const Configuration& a, const Configuration& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("cost: dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline double squared_distance(const Configuration& a, const Configuration& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

/// Point on segment [a, b] at parameter t in [0, 1].
inline Configuration interpolate(const Configuration& a, const Configuration& b,
                                 double t) {
  Configuration r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] + t * (b[i] - a[i]);
  }
  return r;
}

/// Truncates the move from x_from toward x_to to at most `range`.
inline Configuration steer(const Configuration& x_from, const Configuration& x_to,
                           double range) {
  if (!(range > 0.0)) {
    throw std::invalid_argument("steer: range must be positive");
  }
  const double d = cost(x_from, x_to);
  if (d <= range) return x_to;
  return interpolate(x_from, x_to, range / d);
}

/// One i.i.d.-uniform coordinate per dimension; deterministic given the rng
/// state.
inline Configuration sample_uniform(const ConfigurationSpace& space, Rng& rng) {
  Configuration x(space.dimension);
  for (std::size_t i = 0; i < space.dimension; ++i) {
    std::uniform_real_distribution<double> dist(space.lower[i], space.upper[i]);
    x[i] = dist(rng);
  }
  return x;
}

/// Total cost c(sigma) of a waypoint path.
inline double path_cost(const Path& path) {
  if (path.size() < 2) {
    throw std::invalid_argument("path_cost: path needs at least 2 waypoints");
  }
  double s = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    s += cost(path[i - 1], path[i]);
  }
  return s;
}

}  // namespace aorrtc
