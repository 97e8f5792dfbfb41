#pragma once

#include <cstdint>
#include <utility>

namespace hsgas {

// Bernoulli hit-fraction estimate with a binomial confidence interval.
struct MCEstimate {
  double mean = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  double std_error = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double confidence_level = 0.0;
};

// Interval policy: rule of three (ci_high = 3/samples) at zero hits,
// Clopper-Pearson below 100 hits, normal approximation otherwise.
MCEstimate make_estimate(std::uint64_t hits, std::uint64_t samples,
                         double confidence_level);

// Inverse standard normal CDF.
double normal_quantile(double p);

// Exact (Clopper-Pearson) binomial interval for `hits` successes in
// `samples` trials.
std::pair<double, double> clopper_pearson(std::uint64_t hits, std::uint64_t samples,
                                          double confidence_level);

}  // namespace hsgas
