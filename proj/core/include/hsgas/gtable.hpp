#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsgas/run_config.hpp"
#include "hsgas/stats.hpp"

namespace hsgas {

enum class Source { exact, monte_carlo };

std::string to_string(Source source);
Source source_from_string(const std::string& text);  // throws std::invalid_argument

struct GTildeEntry {
  int k = 0;
  double value = 0.0;                     // in [0, 1]; equals estimate->mean for MC entries
  Source source = Source::exact;
  std::optional<MCEstimate> estimate;     // present iff source == monte_carlo
  std::optional<std::string> exact_form;  // present iff source == exact
};

// Normalized exclusion volumes gtilde_d(k) for k = 0..k_max: the probability
// that k independent uniform points in the unit d-ball are pairwise more
// than unit distance apart. gtilde_d(0) = gtilde_d(1) = 1 by definition and
// the values are non-increasing in k.
struct GTildeTable {
  int d = 0;
  std::vector<GTildeEntry> entries;  // contiguous k = 0..k_max
  int k_max = 0;
  std::string truncation_note;
  // Zero-hit Monte Carlo entry one past k_max, kept so conservative-mode
  // evaluation can cover the unobserved tail with its rule-of-three limit.
  std::optional<GTildeEntry> zero_tail;
};

// Hit-or-miss estimator: draw k points uniformly in the unit d-ball and
// count configurations that are pairwise more than unit distance apart.
// Work is split into fixed-size chunks, each on its own substream keyed by
// (master_seed, d, k, chunk index); the result is bit-identical for any
// thread count. threads = 0 picks the hardware concurrency.
MCEstimate estimate_g_tilde(int d, int k, std::uint64_t samples,
                            std::uint64_t master_seed, std::uint64_t chunk_size,
                            double confidence_level, int threads = 0);

// Closed forms where implemented: k = 0, 1 for all d; d = 2, k = 2; d = 1,
// k = 2 and the exact zeros d = 1, k >= 3. Absent otherwise.
std::optional<double> exact_g_tilde(int d, int k);

// Human-readable formula string for the closed forms above.
std::optional<std::string> exact_g_tilde_form(int d, int k);

// Packing arguments that force gtilde_d(k) = 0 exactly: d = 1, k >= 3 and
// d = 2, k >= 6.
bool gtilde_known_zero(int d, int k);

// Termination guard for the table builder: 3^d, saturated at 2^63-1. Any
// point set pairwise more than unit distance apart in the unit ball packs
// radius-1/2 balls into a radius-3/2 ball, so it has at most 3^d points.
std::uint64_t gtilde_hard_cap(int d);

// Build the table for config.d, ascending in k: exact values where
// implemented, Monte Carlo otherwise; stops at the first exact zero, at the
// first zero-hit Monte Carlo run (entry kept as zero_tail), or at the hard
// cap. Deterministic for a fixed config, independent of thread count.
GTildeTable build_gtable(const RunConfig& config, int threads = 0);

}  // namespace hsgas
