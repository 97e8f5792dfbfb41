#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace hsgas {

// How Monte Carlo table entries enter the bound: by their mean, or by their
// upper confidence limit (which can only lower the reported radius).
enum class Mode { mean, conservative };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& text);  // throws std::invalid_argument

// One run of the estimate -> table -> bound pipeline.
struct RunConfig {
  int d = 2;
  std::uint64_t samples_per_k = 0;  // 0 = auto: 1e7 for d <= 3, 1e6 above
  std::uint64_t master_seed = 42;
  std::uint64_t chunk_size = 100000;
  double confidence_level = 0.95;
  Mode mode = Mode::mean;
  double search_cap = 1000.0;
  int curve_samples = 0;
  std::optional<std::string> output_path;
  // The table builder records a warning when an entry's relative standard
  // error exceeds this target.
  double rel_error_target = 0.05;

  std::uint64_t resolved_samples_per_k() const;
  void validate() const;  // throws std::invalid_argument
};

}  // namespace hsgas
