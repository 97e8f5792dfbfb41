#include "hsgas/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/normal.hpp>

namespace hsgas {

namespace {

void check_args(std::uint64_t hits, std::uint64_t samples, double confidence_level) {
  if (samples == 0) {
    throw std::invalid_argument("make_estimate: samples must be positive");
  }
  if (hits > samples) {
    throw std::invalid_argument("make_estimate: hits exceed samples");
  }
  if (!(confidence_level > 0.0 && confidence_level < 1.0)) {
    throw std::invalid_argument("make_estimate: confidence level must lie in (0,1), got " +
                                std::to_string(confidence_level));
  }
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("normal_quantile: p must lie in (0,1)");
  }
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

std::pair<double, double> clopper_pearson(std::uint64_t hits, std::uint64_t samples,
                                          double confidence_level) {
  check_args(hits, samples, confidence_level);
  const double alpha = 1.0 - confidence_level;
  const double n = static_cast<double>(samples);
  const double h = static_cast<double>(hits);
  double low = 0.0;
  double high = 1.0;
  if (hits > 0) {
    low = boost::math::quantile(
        boost::math::beta_distribution<double>(h, n - h + 1.0), alpha / 2.0);
  }
  if (hits < samples) {
    high = boost::math::quantile(
        boost::math::beta_distribution<double>(h + 1.0, n - h), 1.0 - alpha / 2.0);
  }
  return {low, high};
}

MCEstimate make_estimate(std::uint64_t hits, std::uint64_t samples,
                         double confidence_level) {
  check_args(hits, samples, confidence_level);
  MCEstimate e;
  e.hits = hits;
  e.samples = samples;
  e.confidence_level = confidence_level;
  e.mean = static_cast<double>(hits) / static_cast<double>(samples);
  e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(samples));

  if (hits == 0) {
    e.ci_low = 0.0;
    e.ci_high = std::min(1.0, 3.0 / static_cast<double>(samples));
  } else if (hits < 100) {
    // Near-empty counts are exactly where the normal approximation fails.
    std::tie(e.ci_low, e.ci_high) = clopper_pearson(hits, samples, confidence_level);
  } else {
    const double z = normal_quantile(0.5 * (1.0 + confidence_level));
    e.ci_low = std::max(0.0, e.mean - z * e.std_error);
    e.ci_high = std::min(1.0, e.mean + z * e.std_error);
  }
  return e;
}

}  // namespace hsgas
