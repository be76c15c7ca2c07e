#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/binomial.hpp>

namespace aorrtc {

/// Exact Clopper-Pearson confidence bounds for a binomial proportion,
/// Beta-quantile formulation. `alpha` is the total two-sided error.
inline std::pair<double, double> clopper_pearson(std::size_t successes,
                                                 std::size_t trials,
                                                 double alpha = 0.01) {
  if (trials == 0 || successes > trials) {
    throw std::invalid_argument("clopper_pearson: bad counts");
  }
  const double k = static_cast<double>(successes);
  const double n = static_cast<double>(trials);
  double lower = 0.0;
  double upper = 1.0;
  if (successes > 0) {
    boost::math::beta_distribution<double> lo(k, n - k + 1.0);
    lower = boost::math::quantile(lo, alpha / 2.0);
  }
  if (successes < trials) {
    boost::math::beta_distribution<double> hi(k + 1.0, n - k);
    upper = boost::math::quantile(hi, 1.0 - alpha / 2.0);
  }
  return {lower, upper};
}

/// One-sided upper Clopper-Pearson bound at confidence level 1 - alpha.
inline double clopper_pearson_upper_one_sided(std::size_t successes,
                                              std::size_t trials,
                                              double alpha = 0.01) {
  if (trials == 0 || successes > trials) {
    throw std::invalid_argument("clopper_pearson: bad counts");
  }
  if (successes == trials) return 1.0;
  boost::math::beta_distribution<double> hi(static_cast<double>(successes) + 1.0,
                                            static_cast<double>(trials - successes));
  return boost::math::quantile(hi, 1.0 - alpha);
}

inline double median(std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("median: empty sample");
  }
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2]
                    : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

/// Nonparametric (order-statistic) confidence interval for the median at
/// confidence 1 - alpha: the tightest symmetric pair of order statistics
/// whose binomial coverage reaches the target.
inline std::pair<double, double> median_ci(std::vector<double> values,
                                           double alpha = 0.01) {
  if (values.empty()) {
    throw std::invalid_argument("median_ci: empty sample");
  }
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  boost::math::binomial_distribution<double> bin(static_cast<double>(n), 0.5);
  std::size_t lo = 0;
  std::size_t hi = n - 1;
  for (std::size_t k = 0; 2 * k < n; ++k) {
    // Coverage of (order stat k+1, order stat n-k): P(k < X < n-k), X~Bin(n,1/2)
    const double tail = boost::math::cdf(bin, static_cast<double>(k));
    if (1.0 - 2.0 * tail >= 1.0 - alpha) {
      lo = k;
      hi = n - 1 - k;
    } else {
      break;
    }
  }
  return {values[lo], values[hi]};
}

/// Pearson chi-square statistic against uniform expected counts.
inline double chi_square_uniform(const std::vector<std::size_t>& counts) {
  std::size_t total = 0;
  for (auto c : counts) total += c;
  if (counts.empty() || total == 0) {
    throw std::invalid_argument("chi_square_uniform: empty counts");
  }
  const double expected =
      static_cast<double>(total) / static_cast<double>(counts.size());
  double stat = 0.0;
  for (auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return stat;
}

}  // namespace aorrtc
