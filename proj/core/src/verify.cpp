#include "hsgas/verify.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "hsgas/bounds.hpp"
#include "hsgas/combinatorics.hpp"
#include "hsgas/geometry.hpp"
#include "hsgas/gtable.hpp"
#include "hsgas/rng.hpp"

namespace hsgas {

namespace {

std::string fmt(const char* format, ...) {
  char out[256];
  va_list args;
  va_start(args, format);
  std::vsnprintf(out, sizeof(out), format, args);
  va_end(args);
  return out;
}

GTildeTable make_exact_table(const std::vector<double>& values) {
  GTildeTable table;
  table.d = 1;
  for (std::size_t k = 0; k < values.size(); ++k) {
    GTildeEntry entry;
    entry.k = static_cast<int>(k);
    entry.value = values[k];
    entry.source = Source::exact;
    entry.exact_form = std::string("synthetic");
    table.entries.push_back(std::move(entry));
  }
  table.k_max = static_cast<int>(values.size()) - 1;
  table.truncation_note = "synthetic";
  return table;
}

CheckResult check_sampler_moment(int d, std::uint64_t samples, std::uint64_t seed) {
  RandomStream stream =
      RandomStream::substream(seed, {0xb011ull, static_cast<std::uint64_t>(d)});
  std::vector<double> x(static_cast<std::size_t>(d));
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    sample_point_in_unit_ball(d, stream, x);
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    sum += r2;
    sum_sq += r2 * r2;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double variance = sum_sq / n - mean * mean;
  const double se = std::sqrt(variance / n);
  const double expected = static_cast<double>(d) / (d + 2);
  const bool ok = std::abs(mean - expected) <= 4.0 * se;
  return {fmt("sampler radial moment, d=%d", d), ok,
          fmt("mean |x|^2 = %.6f vs d/(d+2) = %.6f (4 se = %.2g)", mean, expected,
              4.0 * se)};
}

CheckResult check_d1_exact(const VerifyOptions& options) {
  const double e2 = exact_g_tilde(1, 2).value_or(-1.0);
  const double e3 = exact_g_tilde(1, 3).value_or(-1.0);
  if (e2 != 0.25 || e3 != 0.0) {
    return {"d=1 exact values", false,
            fmt("exact gtilde_1(2) = %.6g (want 0.25), gtilde_1(3) = %.6g (want 0)", e2,
                e3)};
  }
  const MCEstimate est = estimate_g_tilde(1, 2, options.mc_samples, options.master_seed,
                                          100000, 0.95, options.threads);
  const double sigma = std::max(est.std_error, 1e-12);
  const bool ok = std::abs(est.mean - 0.25) <= 5.0 * sigma;
  return {"d=1 exact values", ok,
          fmt("MC gtilde_1(2) = %.6f vs 1/4 (5 sigma = %.2g)", est.mean, 5.0 * sigma)};
}

CheckResult check_g22_closed_form(const VerifyOptions& options) {
  constexpr double kPi = 3.141592653589793238462643383279502884;
  const double exact = exact_g_tilde(2, 2).value();
  const double reference =
      options.g22_reference.value_or(3.0 * std::sqrt(3.0) / (4.0 * kPi));
  if (std::abs(exact - reference) > 1e-12) {
    return {"gtilde_2(2) closed form vs Monte Carlo", false,
            fmt("closed form %.12f != reference %.12f", exact, reference)};
  }
  const MCEstimate est = estimate_g_tilde(2, 2, options.mc_samples, options.master_seed,
                                          100000, 0.95, options.threads);
  const double sigma = std::max(est.std_error, 1e-12);
  const bool ok = std::abs(est.mean - reference) <= 5.0 * sigma;
  return {"gtilde_2(2) closed form vs Monte Carlo", ok,
          fmt("MC %.6f vs closed form %.6f (5 sigma = %.2g)", est.mean, reference,
              5.0 * sigma)};
}

CheckResult check_cayley_vs_prufer() {
  for (int n = 2; n <= 7; ++n) {
    const auto histogram = prufer_enumerate(n);
    std::uint64_t total = 0;
    for (const auto& [degrees, count] : histogram) {
      if (cayley_count(degrees) != count) {
        return {"degree-sequence counts vs Prufer enumeration", false,
                fmt("mismatch at n=%d", n)};
      }
      total += count;
    }
    std::uint64_t expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= static_cast<std::uint64_t>(n);
    if (total != expected) {
      return {"degree-sequence counts vs Prufer enumeration", false,
              fmt("total %llu != n^(n-2) = %llu at n=%d",
                  static_cast<unsigned long long>(total),
                  static_cast<unsigned long long>(expected), n)};
    }
  }
  return {"degree-sequence counts vs Prufer enumeration", true,
          "all degree sequences match for n = 2..7"};
}

CheckResult check_series_tail() {
  double worst = 0.0;
  for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    double partial = 0.0;
    double power = x;  // x^n
    for (int n = 2; n <= 200000; ++n) {
      power *= x;
      const double term = power / (static_cast<double>(n) * (n - 1));
      partial += term;
      if (term < 1e-18) break;
    }
    worst = std::max(worst, std::abs(pressure_series_tail(x) - partial));
  }
  return {"pressure series tail closed form", worst <= 1e-10,
          fmt("max |closed form - partial sum| = %.2e", worst)};
}

CheckResult check_synthetic_optimizer() {
  const double sqrt2 = std::sqrt(2.0);
  const auto flat = optimize_a(make_exact_table({1.0, 1.0, 1.0}), Mode::mean, 1000.0);
  if (std::abs(flat.a_star - sqrt2) > 1e-8 ||
      std::abs(flat.bound - (sqrt2 - 1.0)) > 1e-8) {
    return {"optimizer on synthetic tables", false,
            fmt("table (1,1,1): a* = %.12f (want sqrt(2)), bound = %.12f (want "
                "sqrt(2)-1)",
                flat.a_star, flat.bound)};
  }
  const auto d1 = optimize_a(make_exact_table({1.0, 1.0, 0.25}), Mode::mean, 1000.0);
  if (std::abs(d1.a_star - 2.0 * sqrt2) > 1e-8 ||
      std::abs(d1.bound - (2.0 - sqrt2)) > 1e-8) {
    return {"optimizer on synthetic tables", false,
            fmt("table (1,1,1/4): a* = %.12f (want 2 sqrt(2)), bound = %.12f (want "
                "2-sqrt(2))",
                d1.a_star, d1.bound)};
  }
  return {"optimizer on synthetic tables", true,
          fmt("(1,1,1) -> bound %.9f; (1,1,1/4) -> bound %.9f", flat.bound, d1.bound)};
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  for (int d : {1, 2, 3, 5}) {
    results.push_back(check_sampler_moment(d, options.mc_samples, options.master_seed));
  }
  results.push_back(check_d1_exact(options));
  results.push_back(check_g22_closed_form(options));
  results.push_back(check_cayley_vs_prufer());
  results.push_back(check_series_tail());
  results.push_back(check_synthetic_optimizer());
  return results;
}

}  // namespace hsgas
