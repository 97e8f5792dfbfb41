#include "hsgas/gtable.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hsgas/geometry.hpp"
#include "hsgas/rng.hpp"

namespace hsgas {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Sum f(chunk_index) over all chunks. Workers pull indices from a shared
// counter; the merge is integer addition, so the total is identical for any
// worker count.
std::uint64_t sum_over_chunks(std::uint64_t num_chunks, int threads,
                              const std::function<std::uint64_t(std::uint64_t)>& f) {
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = hw > 0 ? static_cast<int>(hw) : 1;
  }
  if (static_cast<std::uint64_t>(threads) > num_chunks) {
    threads = static_cast<int>(num_chunks);
  }
  if (threads <= 1) {
    std::uint64_t total = 0;
    for (std::uint64_t c = 0; c < num_chunks; ++c) total += f(c);
    return total;
  }
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> total{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      std::uint64_t local = 0;
      for (;;) {
        const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
        if (c >= num_chunks) break;
        local += f(c);
      }
      total.fetch_add(local, std::memory_order_relaxed);
    });
  }
  for (auto& th : pool) th.join();
  return total.load();
}

// Hits in one chunk. Points are drawn lazily: a configuration is rejected at
// the first pair at distance <= 1, skipping the remaining draws. The draw
// count varies per configuration but stays confined to this chunk's
// substream.
std::uint64_t chunk_hits(int d, int k, std::uint64_t n, RandomStream stream) {
  if (k <= 1) return n;  // vacuously valid
  std::vector<double> buf(static_cast<std::size_t>(k) * d);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < n; ++s) {
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) {
      double* pj = buf.data() + static_cast<std::size_t>(j) * d;
      sample_point_in_unit_ball(d, stream, {pj, static_cast<std::size_t>(d)});
      for (int i = 0; i < j; ++i) {
        const double* pi = buf.data() + static_cast<std::size_t>(i) * d;
        double dd = 0.0;
        for (int c = 0; c < d; ++c) {
          const double t = pi[c] - pj[c];
          dd += t * t;
        }
        if (dd <= 1.0) {
          ok = false;
          break;
        }
      }
    }
    hits += ok ? 1 : 0;
  }
  return hits;
}

std::string format_value(double v) {
  char out[64];
  std::snprintf(out, sizeof(out), "%.6g", v);
  return out;
}

}  // namespace

std::string to_string(Source source) {
  return source == Source::exact ? "exact" : "monte_carlo";
}

Source source_from_string(const std::string& text) {
  if (text == "exact") return Source::exact;
  if (text == "monte_carlo") return Source::monte_carlo;
  throw std::invalid_argument("unknown source '" + text +
                              "' (expected 'exact' or 'monte_carlo')");
}

MCEstimate estimate_g_tilde(int d, int k, std::uint64_t samples,
                            std::uint64_t master_seed, std::uint64_t chunk_size,
                            double confidence_level, int threads) {
  if (d < 1) throw std::invalid_argument("estimate_g_tilde: dimension must be >= 1");
  if (k < 0) throw std::invalid_argument("estimate_g_tilde: k must be >= 0");
  if (samples == 0) throw std::invalid_argument("estimate_g_tilde: samples must be positive");
  if (chunk_size == 0) throw std::invalid_argument("estimate_g_tilde: chunk_size must be positive");

  const std::uint64_t num_chunks = (samples + chunk_size - 1) / chunk_size;
  const std::uint64_t hits = sum_over_chunks(
      num_chunks, threads, [&](std::uint64_t c) {
        const std::uint64_t begin = c * chunk_size;
        const std::uint64_t n = std::min(chunk_size, samples - begin);
        RandomStream stream = RandomStream::substream(
            master_seed, {static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(k), c});
        return chunk_hits(d, k, n, std::move(stream));
      });
  return make_estimate(hits, samples, confidence_level);
}

std::optional<double> exact_g_tilde(int d, int k) {
  if (d < 1 || k < 0) {
    throw std::invalid_argument("exact_g_tilde: require d >= 1 and k >= 0");
  }
  if (k == 0 || k == 1) return 1.0;  // empty product / single point in the full ball
  if (d == 1) {
    if (k == 2) return 0.25;
    return 0.0;  // three points pairwise > 1 apart need span > 2
  }
  if (d == 2 && k == 2) return 3.0 * std::sqrt(3.0) / (4.0 * kPi);
  return std::nullopt;
}

std::optional<std::string> exact_g_tilde_form(int d, int k) {
  if (k == 0) return std::string("1 (empty product)");
  if (k == 1) return std::string("1 (single point fills the whole ball)");
  if (d == 1) {
    if (k == 2) return std::string("1/4");
    return std::string("0 (span of three points pairwise > 1 apart exceeds the interval)");
  }
  if (d == 2 && k == 2) return std::string("3*sqrt(3)/(4*pi)");
  return std::nullopt;
}

bool gtilde_known_zero(int d, int k) {
  // d=1: a third point pairwise > 1 from two others needs span > 2.
  // d=2: six points pairwise > 1 apart do not fit in the closed unit disk
  // (the optimal six-point spread is the boundary hexagon at distance
  // exactly 1).
  return (d == 1 && k >= 3) || (d == 2 && k >= 6);
}

std::uint64_t gtilde_hard_cap(int d) {
  std::uint64_t cap = 1;
  for (int i = 0; i < d; ++i) {
    if (cap > (~0ull >> 1) / 3) return ~0ull >> 1;
    cap *= 3;
  }
  return cap;
}

GTildeTable build_gtable(const RunConfig& config, int threads) {
  config.validate();
  const int d = config.d;
  const std::uint64_t samples = config.resolved_samples_per_k();
  const std::uint64_t cap = gtilde_hard_cap(d);

  GTildeTable table;
  table.d = d;
  std::string warnings;

  for (std::uint64_t k = 0;; ++k) {
    const int ki = static_cast<int>(k);
    if (gtilde_known_zero(d, ki)) {
      table.truncation_note =
          "gtilde_" + std::to_string(d) + "(k) = 0 exactly for k >= " + std::to_string(k) +
          (d == 1 ? " (three points pairwise > 1 apart cannot fit in [-1,1])"
                  : " (six points pairwise > 1 apart cannot fit in the closed unit disk)");
      break;
    }
    if (auto exact = exact_g_tilde(d, ki)) {
      GTildeEntry entry;
      entry.k = ki;
      entry.value = *exact;
      entry.source = Source::exact;
      entry.exact_form = exact_g_tilde_form(d, ki);
      table.entries.push_back(std::move(entry));
    } else {
      MCEstimate est = estimate_g_tilde(d, ki, samples, config.master_seed,
                                        config.chunk_size, config.confidence_level,
                                        threads);
      GTildeEntry entry;
      entry.k = ki;
      entry.value = est.mean;
      entry.source = Source::monte_carlo;
      entry.estimate = est;
      if (est.hits == 0) {
        // A missing positive tail is covered in conservative mode by the
        // rule-of-three limit of this entry.
        table.zero_tail = std::move(entry);
        table.truncation_note =
            "Monte Carlo recorded 0 hits in " + std::to_string(samples) +
            " samples at k = " + std::to_string(k) +
            "; mean-mode table ends at k_max = " + std::to_string(k - 1) +
            ", rule-of-three upper limit " + format_value(est.ci_high) +
            " kept for conservative mode";
        break;
      }
      if (est.std_error > config.rel_error_target * est.mean) {
        warnings += "; warning: relative std. error " +
                    format_value(est.std_error / est.mean) + " at k = " +
                    std::to_string(k) + " exceeds target " +
                    format_value(config.rel_error_target);
      }
      table.entries.push_back(std::move(entry));
    }
    if (k >= cap) {
      table.truncation_note = "reached hard cap k = 3^d = " + std::to_string(cap);
      break;
    }
  }

  table.k_max = table.entries.empty() ? 0 : table.entries.back().k;
  table.truncation_note += warnings;
  return table;
}

}  // namespace hsgas
