#include "hsgas/run_config.hpp"

#include <stdexcept>

namespace hsgas {

std::string to_string(Mode mode) {
  return mode == Mode::mean ? "mean" : "conservative";
}

Mode mode_from_string(const std::string& text) {
  if (text == "mean") return Mode::mean;
  if (text == "conservative") return Mode::conservative;
  throw std::invalid_argument("unknown mode '" + text +
                              "' (expected 'mean' or 'conservative')");
}

std::uint64_t RunConfig::resolved_samples_per_k() const {
  if (samples_per_k > 0) return samples_per_k;
  return d <= 3 ? 10000000ull : 1000000ull;
}

void RunConfig::validate() const {
  if (d < 1) throw std::invalid_argument("config: dimension must be >= 1");
  if (chunk_size == 0) throw std::invalid_argument("config: chunk_size must be positive");
  if (!(confidence_level > 0.0 && confidence_level < 1.0)) {
    throw std::invalid_argument("config: confidence_level must lie in (0,1)");
  }
  if (!(search_cap > 0.0)) throw std::invalid_argument("config: search_cap must be positive");
  if (curve_samples < 0) throw std::invalid_argument("config: curve_samples must be >= 0");
  if (!(rel_error_target > 0.0)) {
    throw std::invalid_argument("config: rel_error_target must be positive");
  }
}

}  // namespace hsgas
