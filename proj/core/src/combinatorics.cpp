#include "hsgas/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace hsgas {

namespace {

// C(m, r) with an overflow check; every intermediate of the multiplicative
// loop is itself a binomial coefficient, hence an exact integer.
std::uint64_t binomial_checked(std::uint64_t m, std::uint64_t r) {
  if (r > m - r) r = m - r;
  unsigned __int128 b = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    b = b * (m - r + i) / i;
    if (b > ~0ull) {
      throw std::overflow_error("cayley_count: count exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(b);
}

}  // namespace

void validate_degree_sequence(const DegreeSequence& degrees) {
  const std::size_t n = degrees.size();
  if (n < 2) {
    throw std::invalid_argument("degree sequence: need at least 2 vertices");
  }
  long long sum = 0;
  for (int deg : degrees) {
    if (deg < 1) {
      throw std::invalid_argument("degree sequence: every degree must be >= 1");
    }
    sum += deg;
  }
  const long long expected = 2 * static_cast<long long>(n) - 2;
  if (sum != expected) {
    throw std::invalid_argument("degree sequence: degrees sum to " +
                                std::to_string(sum) + ", expected 2n-2 = " +
                                std::to_string(expected));
  }
}

std::uint64_t cayley_count(const DegreeSequence& degrees) {
  validate_degree_sequence(degrees);
  // (n-2)! / prod (d_i - 1)! is the multinomial of the branching factors
  // s_i = d_i - 1; build it cancellation-first as prod_i C(s_1+...+s_i, s_i).
  unsigned __int128 count = 1;
  std::uint64_t placed = 0;
  for (int deg : degrees) {
    const std::uint64_t s = static_cast<std::uint64_t>(deg - 1);
    placed += s;
    count *= binomial_checked(placed, s);
    if (count > ~0ull) {
      throw std::overflow_error("cayley_count: count exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(count);
}

std::map<DegreeSequence, std::uint64_t> prufer_enumerate(int n) {
  if (n < 2 || n > 9) {
    throw std::out_of_range("prufer_enumerate: supported for 2 <= n <= 9, got " +
                            std::to_string(n));
  }
  std::map<DegreeSequence, std::uint64_t> histogram;
  const int len = n - 2;
  std::vector<int> seq(static_cast<std::size_t>(len), 0);
  DegreeSequence degrees(static_cast<std::size_t>(n), 1);
  for (;;) {
    for (int v : seq) degrees[static_cast<std::size_t>(v)] += 1;
    ++histogram[degrees];
    for (int& deg : degrees) deg = 1;
    // odometer over {0..n-1}^len
    int pos = len - 1;
    while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n - 1) {
      seq[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    seq[static_cast<std::size_t>(pos)] += 1;
  }
  return histogram;
}

}  // namespace hsgas
