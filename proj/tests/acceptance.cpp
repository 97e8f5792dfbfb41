// Acceptance suite: runs every headline requirement end to end, printing one
// pass/fail line per criterion, and exits nonzero if any fail. argv[1] is the
// path of the command-line binary (used by the file-determinism criterion).

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hsgas/bounds.hpp"
#include "hsgas/combinatorics.hpp"
#include "hsgas/geometry.hpp"
#include "hsgas/gtable.hpp"
#include "hsgas/rng.hpp"
#include "hsgas/run_config.hpp"
#include "hsgas/serialize.hpp"

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

int g_failures = 0;
std::string g_cli;
std::filesystem::path g_dir;

class Criterion {
 public:
  explicit Criterion(std::string label) : label_(std::move(label)) {
    start_ = std::chrono::steady_clock::now();
  }

  void require(bool ok, const std::string& detail) {
    if (!ok) failures_.push_back(detail);
    notes_.push_back((ok ? "" : "!! ") + detail);
  }

  void finish(double runtime_limit_seconds = 0.0) {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (runtime_limit_seconds > 0.0 && elapsed > runtime_limit_seconds) {
      const std::string detail = "runtime " + std::to_string(elapsed) +
                                 " s exceeds " + std::to_string(runtime_limit_seconds) +
                                 " s";
      failures_.push_back(detail);
      notes_.push_back("!! " + detail);
    }
    char timing[32];
    std::snprintf(timing, sizeof(timing), " (%.2f s)", elapsed);
    if (failures_.empty()) {
      std::cout << "[PASS] " << label_;
      for (const auto& n : notes_) std::cout << " | " << n;
      std::cout << timing << "\n";
    } else {
      ++g_failures;
      std::cout << "[FAIL] " << label_;
      for (const auto& n : notes_) std::cout << " | " << n;
      std::cout << timing << "\n";
    }
  }

 private:
  std::string label_;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
  std::chrono::steady_clock::time_point start_;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char out[160];
  std::snprintf(out, sizeof(out), format, a, b, c);
  return out;
}

hsgas::RunConfig default_d2_config() {
  hsgas::RunConfig config;
  config.d = 2;
  return config;  // defaults: 1e7 samples/k, seed 42, chunk 1e5, 95% CI
}

// 1. Exact g~_2(2) and its Monte Carlo reproduction.
void criterion_1() {
  Criterion c("criterion 1: exact constant g~_2(2)");
  const double reference = 3.0 * std::sqrt(3.0) / (4.0 * kPi);
  const double closed = hsgas::exact_g_tilde(2, 2).value_or(-1.0);
  c.require(std::abs(closed - reference) <= 1e-12,
            fmt("closed form %.12f vs 3sqrt(3)/(4pi) %.12f", closed, reference));
  const auto estimate = hsgas::estimate_g_tilde(2, 2, 10000000, 42, 100000, 0.95);
  c.require(std::abs(estimate.mean - reference) <= 0.002,
            fmt("MC %.6f within 0.002 of %.6f", estimate.mean, reference));
  c.finish(10.0);
}

// 2. The published d=2 Monte Carlo digits at the default budget.
void criterion_2() {
  Criterion c("criterion 2: d=2 table values");
  const auto g3 = hsgas::estimate_g_tilde(2, 3, 10000000, 42, 100000, 0.95);
  c.require(g3.mean >= 0.057 && g3.mean <= 0.061,
            fmt("g~_2(3) = %.6f in [0.057, 0.061]", g3.mean));
  const auto g4 = hsgas::estimate_g_tilde(2, 4, 10000000, 42, 100000, 0.95);
  c.require(g4.mean >= 0.0008 && g4.mean <= 0.0018,
            fmt("g~_2(4) = %.6f in [0.0008, 0.0018]", g4.mean));
  const auto g5 = hsgas::estimate_g_tilde(2, 5, 10000000, 42, 100000, 0.95);
  c.require(g5.mean <= 0.0003, fmt("g~_2(5) = %.2e <= 3e-4", g5.mean));
  c.finish(60.0);
}

// 3 and 4 share the default-config d=2 table.
void criteria_3_and_4() {
  hsgas::GTildeTable table;
  {
    Criterion c("criterion 3: headline d=2 bound");
    table = hsgas::build_gtable(default_d2_config());
    const auto report = hsgas::bound_report(table, hsgas::Mode::mean, 0);
    c.require(report.bound >= 0.505 && report.bound <= 0.515,
              fmt("bound %.6f in [0.505, 0.515]", report.bound));
    c.require(report.improvement_ratio >= 1.37 && report.improvement_ratio <= 1.40,
              fmt("ratio %.4f in [1.37, 1.40]", report.improvement_ratio));
    c.require(std::abs(hsgas::classical_bound() - std::exp(-1.0)) <= 1e-12,
              fmt("classical %.12f = exp(-1)", hsgas::classical_bound()));
    c.finish();
  }
  {
    Criterion c("criterion 4: near-optimality of a = sqrt(8pi/(3sqrt3))");
    const double a_closed = std::sqrt(8.0 * kPi / (3.0 * std::sqrt(3.0)));
    const double f_closed = a_closed / hsgas::c_polynomial(table, a_closed, hsgas::Mode::mean);
    const auto opt = hsgas::optimize_a(table, hsgas::Mode::mean, 1000.0);
    c.require(f_closed >= 0.999 * opt.bound,
              fmt("f(a_closed) = %.6f vs 0.999 f(a*) = %.6f (ratio %.5f)", f_closed,
                  0.999 * opt.bound, f_closed / opt.bound));
    c.finish();
  }
}

// 5. The d=1 analytic chain.
void criterion_5() {
  Criterion c("criterion 5: d=1 analytic chain");
  const auto estimate = hsgas::estimate_g_tilde(1, 2, 1000000, 42, 100000, 0.95);
  c.require(std::abs(estimate.mean - 0.25) <= 5.0 * estimate.std_error,
            fmt("MC g~_1(2) = %.6f within 5 sigma of 1/4", estimate.mean));
  hsgas::RunConfig config;
  config.d = 1;
  const auto table = hsgas::build_gtable(config);
  const auto opt = hsgas::optimize_a(table, hsgas::Mode::mean, 1000.0);
  const double expected = 2.0 - std::sqrt(2.0);
  c.require(std::abs(opt.bound - expected) <= 1e-8,
            fmt("bound %.10f vs 2 - sqrt(2) = %.10f", opt.bound, expected));
  c.finish();
}

// 6. The hand-solved synthetic table.
void criterion_6() {
  Criterion c("criterion 6: synthetic optimizer oracle");
  hsgas::GTildeTable table;
  table.d = 1;
  for (int k = 0; k <= 2; ++k) {
    hsgas::GTildeEntry entry;
    entry.k = k;
    entry.value = 1.0;
    entry.source = hsgas::Source::exact;
    entry.exact_form = "1";
    table.entries.push_back(entry);
  }
  table.k_max = 2;
  table.truncation_note = "synthetic";
  const auto opt = hsgas::optimize_a(table, hsgas::Mode::mean, 1000.0);
  c.require(std::abs(opt.a_star - std::sqrt(2.0)) <= 1e-8,
            fmt("a* = %.10f vs sqrt(2)", opt.a_star));
  c.require(std::abs(opt.bound - (std::sqrt(2.0) - 1.0)) <= 1e-8,
            fmt("bound = %.10f vs sqrt(2) - 1", opt.bound));
  c.finish();
}

// 7. Tree counts against exhaustive enumeration.
void criterion_7() {
  Criterion c("criterion 7: combinatorics oracle");
  bool all_match = true;
  bool totals_match = true;
  for (int n = 2; n <= 7; ++n) {
    const auto histogram = hsgas::prufer_enumerate(n);
    std::uint64_t total = 0;
    for (const auto& [degrees, count] : histogram) {
      if (hsgas::cayley_count(degrees) != count) all_match = false;
      total += count;
    }
    std::uint64_t expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= static_cast<std::uint64_t>(n);
    if (total != expected) totals_match = false;
  }
  c.require(all_match, "every degree-sequence count matches for n = 2..7");
  c.require(totals_match, "totals equal n^(n-2) for n = 2..7");
  c.finish(30.0);
}

// 8. Series tail closed form.
void criterion_8() {
  Criterion c("criterion 8: tail closed form");
  double worst = 0.0;
  for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    double partial = 0.0;
    double power = x;
    for (int n = 2; n <= 1000000; ++n) {
      power *= x;
      const double term = power / (static_cast<double>(n) * (n - 1));
      partial += term;
      if (term < 1e-18) break;
    }
    worst = std::max(worst, std::abs(hsgas::pressure_series_tail(x) - partial));
  }
  c.require(worst <= 1e-10, fmt("max deviation %.2e <= 1e-10", worst));
  c.finish();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_cli(const std::string& args) {
  const std::string command = g_cli + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 9. Byte-identical files across runs and worker counts.
void criterion_9() {
  Criterion c("criterion 9: determinism of table files");
  const auto path = (g_dir / "det.json").string();
  const std::string flags =
      "estimate --dim 2 --samples 1000000 --seed 42 --out " + path;
  c.require(run_cli(flags + " --threads 1") == 0, "run with --threads 1");
  const std::string first = slurp(path);
  c.require(run_cli(flags + " --threads 1") == 0, "identical rerun");
  const std::string second = slurp(path);
  c.require(run_cli(flags + " --threads 8") == 0, "run with --threads 8");
  const std::string third = slurp(path);
  c.require(!first.empty() && first == second, "reruns byte-identical");
  c.require(first == third, "--threads 1 vs --threads 8 byte-identical");

  // Same contract at the library level.
  hsgas::RunConfig config = default_d2_config();
  config.samples_per_k = 500000;
  const auto once = hsgas::to_json(
      hsgas::TableDocument{hsgas::build_gtable(config, 1), config, "x"});
  const auto again = hsgas::to_json(
      hsgas::TableDocument{hsgas::build_gtable(config, 8), config, "x"});
  c.require(once == again, "library tables byte-identical across worker counts");
  c.finish();
}

// 10. Sampler radial statistics.
void criterion_10() {
  Criterion c("criterion 10: sampler statistics");
  for (int d : {1, 2, 3, 5}) {
    hsgas::RandomStream stream =
        hsgas::RandomStream::substream(42, {7001, static_cast<std::uint64_t>(d)});
    const int n = 1000000;
    std::vector<double> x(static_cast<std::size_t>(d));
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
      hsgas::sample_point_in_unit_ball(d, stream, x);
      double r2 = 0.0;
      for (double v : x) r2 += v * v;
      sum += r2;
      sum_sq += r2 * r2;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sum_sq / n - mean * mean) / n);
    const double expected = static_cast<double>(d) / (d + 2);
    c.require(std::abs(mean - expected) <= 4.0 * se,
              fmt("d=%.0f: mean |x|^2 off by %.2e (4 se = %.2e)", double(d),
                  std::abs(mean - expected), 4.0 * se));
  }
  c.finish();
}

// Full default-config reproduction through the command-line tool.
void cli_pipeline() {
  Criterion c("cli pipeline: estimate --dim 2 && bound at defaults");
  const auto table_path = (g_dir / "pipeline_d2.json").string();
  c.require(run_cli("estimate --dim 2 --out " + table_path) == 0, "estimate exits 0");
  c.require(run_cli("bound " + table_path) == 0, "bound exits 0");
  const auto report_path = (g_dir / "pipeline_d2.bound.json").string();
  const auto report = hsgas::report_document_from_json(slurp(report_path));
  c.require(report.report.bound >= 0.505 && report.report.bound <= 0.515,
            fmt("reported bound %.6f in [0.505, 0.515]", report.report.bound));
  c.require(report.report.improvement_ratio >= 1.37 &&
                report.report.improvement_ratio <= 1.40,
            fmt("reported ratio %.4f in [1.37, 1.40]", report.report.improvement_ratio));
  c.finish(60.0);
}

// The d=3 run is property-checked only.
void d3_properties() {
  Criterion c("d=3 properties: monotone table, bound > 1/e, conservative <= mean");
  hsgas::RunConfig config;
  config.d = 3;
  config.samples_per_k = 1000000;
  const auto table = hsgas::build_gtable(config);
  bool monotone = true;
  for (std::size_t i = 1; i < table.entries.size(); ++i) {
    if (table.entries[i - 1].value < table.entries[i].value) monotone = false;
  }
  c.require(monotone, "table values non-increasing");
  const auto mean_report = hsgas::bound_report(table, hsgas::Mode::mean, 0);
  const auto conservative_report =
      hsgas::bound_report(table, hsgas::Mode::conservative, 0);
  c.require(mean_report.bound > hsgas::classical_bound(),
            fmt("bound %.6f > 1/e", mean_report.bound));
  c.require(conservative_report.bound <= mean_report.bound,
            fmt("conservative %.6f <= mean %.6f", conservative_report.bound,
                mean_report.bound));
  c.finish();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-hsgas-binary>\n";
    return 2;
  }
  g_cli = argv[1];
  g_dir = std::filesystem::current_path() / "acceptance_tmp";
  std::filesystem::remove_all(g_dir);
  std::filesystem::create_directories(g_dir);

  criterion_1();
  criterion_2();
  criteria_3_and_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  cli_pipeline();
  d3_properties();

  if (g_failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
  return 1;
}
