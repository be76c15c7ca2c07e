#pragma once

#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "aorrtc/space.hpp"

namespace aorrtc {

namespace detail {

/// Uniform sample from the n-dimensional unit ball (Gaussian direction,
/// radius U^(1/n)).
inline std::vector<double> sample_unit_ball(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> v(n);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& vi : v) {
      vi = normal(rng);
      norm2 += vi * vi;
    }
  } while (norm2 == 0.0);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double r = std::pow(u01(rng), 1.0 / static_cast<double>(n));
  const double scale = r / std::sqrt(norm2);
  for (auto& vi : v) vi *= scale;
  return v;
}

/// Orthonormal basis whose first column is `dir` (Gram-Schmidt against the
/// identity, skipping near-parallel seed columns).
inline std::vector<std::vector<double>> rotation_to_axis(
    const std::vector<double>& dir) {
  const std::size_t n = dir.size();
  std::vector<std::vector<double>> basis;
  basis.push_back(dir);
  for (std::size_t k = 0; basis.size() < n && k < n; ++k) {
    std::vector<double> e(n, 0.0);
    e[k] = 1.0;
    for (const auto& b : basis) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += e[i] * b[i];
      for (std::size_t i = 0; i < n; ++i) e[i] -= dot * b[i];
    }
    double norm2 = 0.0;
    for (double ei : e) norm2 += ei * ei;
    if (norm2 < 1e-12) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& ei : e) ei *= inv;
    basis.push_back(std::move(e));
  }
  return basis;  // basis[j] is the j-th column
}

}  // namespace detail

/// Direct sampler for the informed set X_fhat: the prolate hyperspheroid
/// with foci at the start and goal and transverse diameter c_max.
class InformedSampler {
 public:
  InformedSampler(const ConfigurationSpace& space, Configuration x_start,
                  Configuration x_goal)
      : space_(space), start_(std::move(x_start)), goal_(std::move(x_goal)),
        c_min_(cost(start_, goal_)) {
    const std::size_t n = space_.dimension;
    std::vector<double> dir(n);
    if (c_min_ > 0.0) {
      for (std::size_t i = 0; i < n; ++i) dir[i] = (goal_[i] - start_[i]) / c_min_;
    } else {
      dir[0] = 1.0;
    }
    basis_ = detail::rotation_to_axis(dir);
    center_.resize(n);
    for (std::size_t i = 0; i < n; ++i) center_[i] = 0.5 * (start_[i] + goal_[i]);
  }

  double c_min_theoretical() const { return c_min_; }
  const Configuration& start() const { return start_; }
  const Configuration& goal() const { return goal_; }

  /// Admissible estimates relative to the two roots.
  double g_hat(const Configuration& x) const { return cost(start_, x); }
  double h_hat(const Configuration& x) const { return cost(goal_, x); }

  /// Draws x with ghat(x) + hhat(x) <= c_max. Unbounded c_max falls back to
  /// plain uniform sampling; bound rejection gives up after max_attempts.
  std::optional<Configuration> sample(double c_max, Rng& rng,
                                      int max_attempts = 100) const {
    if (std::isinf(c_max)) return sample_uniform(space_, rng);
    if (c_max < c_min_) return std::nullopt;
    const std::size_t n = space_.dimension;
    const double a = c_max / 2.0;
    const double b =
        std::sqrt(std::max(0.0, c_max * c_max - c_min_ * c_min_)) / 2.0;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
      const auto ball = detail::sample_unit_ball(n, rng);
      Configuration x = center_;
      for (std::size_t j = 0; j < n; ++j) {
        const double s = (j == 0 ? a : b) * ball[j];
        for (std::size_t i = 0; i < n; ++i) x[i] += s * basis_[j][i];
      }
      if (space_.contains(x) && g_hat(x) + h_hat(x) <= c_max) return x;
    }
    return std::nullopt;
  }

 private:
  ConfigurationSpace space_;
  Configuration start_;
  Configuration goal_;
  double c_min_;
  Configuration center_;
  std::vector<std::vector<double>> basis_;
};

/// Cost bound for a new state: uniform over the open interval
/// (ghat, c_max - hhat). Empty interval means the sample cannot improve the
/// solution. Infinite c_max keeps the cost dimension inactive.
inline std::optional<double> sample_cost_bound(double g_hat, double h_hat,
                                               double c_max, Rng& rng) {
  if (g_hat < 0.0 || h_hat < 0.0) {
    throw std::invalid_argument("sample_cost_bound: negative estimate");
  }
  if (std::isinf(c_max)) return kInfiniteCost;
  const double hi = c_max - h_hat;
  if (!(g_hat < hi)) return std::nullopt;
  std::uniform_real_distribution<double> dist(g_hat, hi);
  return dist(rng);
}

/// Resampled cost bound for the extend loop: uniform over (g_hat, c_current),
/// or c_current itself when the interval is empty.
inline double resample_lower(double c_current, double g_hat, Rng& rng) {
  if (!(g_hat < c_current)) return c_current;
  std::uniform_real_distribution<double> dist(g_hat, c_current);
  return dist(rng);
}

}  // namespace aorrtc
