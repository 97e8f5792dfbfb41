#include "hsgas/bounds.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace hsgas {

namespace {

double coefficient(const GTildeEntry& entry, Mode mode) {
  if (mode == Mode::conservative && entry.estimate) return entry.estimate->ci_high;
  return entry.value;
}

// a^k / k! without forming either factor.
double power_over_factorial(double a, int k) {
  double term = 1.0;
  for (int s = 1; s <= k; ++s) term *= a / s;
  return term;
}

void check_table(const GTildeTable& table) {
  if (table.d < 1) throw std::invalid_argument("table: dimension must be >= 1");
  if (table.entries.empty()) throw std::invalid_argument("table: no entries");
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    if (table.entries[i].k != static_cast<int>(i)) {
      throw std::invalid_argument("table: entries must be contiguous from k = 0");
    }
  }
  if (table.k_max != table.entries.back().k) {
    throw std::invalid_argument("table: k_max does not match the last entry");
  }
}

struct Fnv1a {
  std::uint64_t state = 0xcbf29ce484222325ull;

  void feed(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      state ^= (v >> (8 * i)) & 0xffull;
      state *= 0x100000001b3ull;
    }
  }
  void feed(double v) { feed(std::bit_cast<std::uint64_t>(v)); }
};

}  // namespace

double c_polynomial(const GTildeTable& table, double a, Mode mode) {
  check_table(table);
  if (!(a >= 0.0)) throw std::invalid_argument("c_polynomial: a must be >= 0");
  double sum = 0.0;
  double term = 1.0;  // a^s / s!
  for (const GTildeEntry& entry : table.entries) {
    sum += coefficient(entry, mode) * term;
    term *= a / (entry.k + 1);
  }
  if (mode == Mode::conservative && table.zero_tail && table.zero_tail->estimate) {
    sum += table.zero_tail->estimate->ci_high *
           power_over_factorial(a, table.zero_tail->k);
  }
  return sum;
}

OptimizeResult optimize_a(const GTildeTable& table, Mode mode, double search_cap) {
  check_table(table);
  if (!(search_cap > 0.0)) {
    throw std::invalid_argument("optimize_a: search_cap must be positive");
  }
  bool has_quadratic_or_higher = false;
  for (const GTildeEntry& entry : table.entries) {
    if (entry.k >= 2 && coefficient(entry, mode) > 0.0) {
      has_quadratic_or_higher = true;
      break;
    }
  }
  if (mode == Mode::conservative && table.zero_tail && table.zero_tail->estimate &&
      table.zero_tail->estimate->ci_high > 0.0) {
    has_quadratic_or_higher = true;
  }
  if (!has_quadratic_or_higher) {
    throw DegenerateTableError(
        "optimize_a: every coefficient with s >= 2 vanishes; a/C(a) increases toward "
        "1 as a grows and the optimization is vacuous (the bound degenerates to the "
        "1/V_d(R) scale)");
  }

  // log f(e^t) = t - log C(e^t) is strictly concave (log C is convex in
  // log a), so the maximizer is unique. Comparing nearly equal f values can
  // only localize it to ~sqrt(eps) relative, so instead solve the
  // stationarity condition C(a) - a C'(a) = 0 directly:
  //   g(a) = sum_s v_s (1 - s) a^s / s!
  // has g(0) = 1 and is strictly decreasing for a > 0, hence bisection on
  // its unique root converges to full precision.
  const auto stationarity = [&](double a) {
    double sum = 0.0;
    double term = 1.0;  // a^s / s!
    for (const GTildeEntry& entry : table.entries) {
      sum += coefficient(entry, mode) * (1.0 - entry.k) * term;
      term *= a / (entry.k + 1);
    }
    if (mode == Mode::conservative && table.zero_tail && table.zero_tail->estimate) {
      const int k = table.zero_tail->k;
      sum += table.zero_tail->estimate->ci_high * (1.0 - k) *
             power_over_factorial(a, k);
    }
    return sum;
  };

  OptimizeResult result;
  if (stationarity(search_cap) >= 0.0) {
    // f is still increasing at the cap; the maximum over (0, cap] sits on
    // the boundary.
    result.a_star = search_cap;
    result.bound = search_cap / c_polynomial(table, search_cap, mode);
    return result;
  }
  double lo = 0.0;  // g(0) = 1 > 0
  double hi = search_cap;
  for (int it = 0; it < 200 && (hi - lo) > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (stationarity(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  result.a_star = 0.5 * (lo + hi);
  result.bound = result.a_star / c_polynomial(table, result.a_star, mode);
  return result;
}

double classical_bound() { return std::exp(-1.0); }

double pressure_series_tail(double x) {
  if (x < 0.0) throw std::invalid_argument("pressure_series_tail: x must be >= 0");
  if (x >= 1.0) {
    throw std::domain_error("pressure_series_tail: series diverges for x >= 1");
  }
  return x + (1.0 - x) * std::log1p(-x);
}

std::string table_fingerprint(const GTildeTable& table) {
  Fnv1a hash;
  hash.feed(static_cast<std::uint64_t>(table.d));
  hash.feed(static_cast<std::uint64_t>(table.k_max));
  const auto feed_entry = [&hash](const GTildeEntry& entry) {
    hash.feed(static_cast<std::uint64_t>(entry.k));
    hash.feed(static_cast<std::uint64_t>(entry.source == Source::exact ? 1 : 2));
    hash.feed(entry.value);
    if (entry.estimate) {
      hash.feed(entry.estimate->hits);
      hash.feed(entry.estimate->samples);
      hash.feed(entry.estimate->ci_low);
      hash.feed(entry.estimate->ci_high);
      hash.feed(entry.estimate->confidence_level);
    }
  };
  for (const GTildeEntry& entry : table.entries) feed_entry(entry);
  if (table.zero_tail) feed_entry(*table.zero_tail);
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx",
                static_cast<unsigned long long>(hash.state));
  return out;
}

BoundReport bound_report(const GTildeTable& table, Mode mode, int curve_samples,
                         double search_cap) {
  if (curve_samples < 0) {
    throw std::invalid_argument("bound_report: curve_samples must be >= 0");
  }
  const OptimizeResult opt = optimize_a(table, mode, search_cap);
  BoundReport report;
  report.d = table.d;
  report.mode = mode;
  report.a_star = opt.a_star;
  report.c_at_a_star = c_polynomial(table, opt.a_star, mode);
  report.bound = opt.bound;
  report.classical = classical_bound();
  report.improvement_ratio = report.bound / report.classical;
  report.gtable_fingerprint = table_fingerprint(table);
  if (curve_samples > 0) {
    report.curve.reserve(static_cast<std::size_t>(curve_samples));
    const double t0 = std::log(opt.a_star / 10.0);
    const double t1 = std::log(opt.a_star * 10.0);
    for (int i = 0; i < curve_samples; ++i) {
      const double t = curve_samples == 1
                           ? std::log(opt.a_star)
                           : t0 + (t1 - t0) * i / (curve_samples - 1);
      const double a = std::exp(t);
      report.curve.push_back({a, a / c_polynomial(table, a, mode)});
    }
  }
  return report;
}

}  // namespace hsgas
