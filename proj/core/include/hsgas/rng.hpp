#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace hsgas {

// splitmix64 finalizer, used only to derive substream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Seed of the substream identified by `path` under `master`. Chunked
// estimators key their substreams as {d, k, chunk_index}, which makes the
// merged result independent of how chunks are assigned to workers.
constexpr std::uint64_t substream_seed(std::uint64_t master,
                                       std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = mix64(master);
  for (std::uint64_t p : path) s = mix64(s ^ mix64(p));
  return s;
}

// Seeded deterministic pseudo-random stream. The mappings from raw 64-bit
// draws to doubles live here rather than in std:: distributions, whose output
// is implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  static RandomStream substream(std::uint64_t master,
                                std::initializer_list<std::uint64_t> path) {
    return RandomStream(substream_seed(master, path));
  }

  std::uint64_t next_u64() { return engine_(); }

  // [0, 1) with 53-bit resolution
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // [-1, 1)
  double uniform_sym() { return 2.0 * uniform01() - 1.0; }

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();  // 1 - u1 in (0, 1], so the log is finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double t = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace hsgas
