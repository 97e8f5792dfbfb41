// Command-line driver for the hard-sphere analyticity bound pipeline:
// estimate -> table -> bound -> report/curve, plus a built-in verification
// suite.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsgas/bounds.hpp"
#include "hsgas/gtable.hpp"
#include "hsgas/run_config.hpp"
#include "hsgas/serialize.hpp"
#include "hsgas/verify.hpp"
#include "hsgas/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitVerify = 4;

struct Options {
  hsgas::RunConfig config;
  int threads = 0;
  std::string config_path;
  std::string table_path;
  std::string out_path;
  std::string mode_text = "mean";
  int curve = -1;  // not requested
  std::uint64_t verify_samples = 1000000;
  bool tamper_g22 = false;
};

// Fields of the optional JSON config file; explicit command-line flags win.
void apply_config_file(const std::string& path, Options& opts,
                       const std::map<std::string, CLI::Option*>& flags) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(hsgas::read_file(path));
  } catch (const nlohmann::json::parse_error& err) {
    throw hsgas::ParseError(std::string("config file: invalid JSON: ") + err.what());
  }
  if (!j.is_object()) throw hsgas::ParseError("config file: expected a JSON object");

  const auto unset = [&flags](const char* name) {
    auto it = flags.find(name);
    return it == flags.end() || it->second == nullptr || it->second->count() == 0;
  };
  try {
    if (j.contains("d") && unset("d")) opts.config.d = j.at("d").get<int>();
    if (j.contains("samples_per_k") && unset("samples")) {
      opts.config.samples_per_k = j.at("samples_per_k").get<std::uint64_t>();
    }
    if (j.contains("master_seed") && unset("seed")) {
      opts.config.master_seed = j.at("master_seed").get<std::uint64_t>();
    }
    if (j.contains("chunk_size") && unset("chunk-size")) {
      opts.config.chunk_size = j.at("chunk_size").get<std::uint64_t>();
    }
    if (j.contains("confidence_level") && unset("confidence")) {
      opts.config.confidence_level = j.at("confidence_level").get<double>();
    }
    if (j.contains("mode") && unset("mode")) {
      opts.mode_text = j.at("mode").get<std::string>();
    }
    if (j.contains("search_cap") && unset("search-cap")) {
      opts.config.search_cap = j.at("search_cap").get<double>();
    }
    if (j.contains("curve_samples") && unset("curve")) {
      opts.curve = j.at("curve_samples").get<int>();
    }
    if (j.contains("output_path") && unset("out")) {
      opts.out_path = j.at("output_path").get<std::string>();
    }
    if (j.contains("rel_error_target")) {
      opts.config.rel_error_target = j.at("rel_error_target").get<double>();
    }
    if (j.contains("threads") && unset("threads")) {
      opts.threads = j.at("threads").get<int>();
    }
  } catch (const nlohmann::json::exception& err) {
    throw hsgas::ParseError(std::string("config file: ") + err.what());
  }
}

std::string six_digits(double v) {
  std::ostringstream out;
  out << std::setprecision(6) << v;
  return out.str();
}

void print_table_summary(const hsgas::GTildeTable& table, const hsgas::RunConfig& config,
                         double elapsed_seconds) {
  std::cout << "gtilde table, d = " << table.d
            << " (samples/k = " << config.resolved_samples_per_k()
            << ", seed = " << config.master_seed << ", "
            << six_digits(100.0 * config.confidence_level) << "% CI)\n";
  std::cout << std::left << std::setw(6) << "  k" << std::setw(13) << "value"
            << std::setw(13) << "source" << std::setw(12) << "std_error"
            << std::setw(13) << "ci_low" << std::setw(13) << "ci_high" << "\n";
  const auto print_entry = [](const hsgas::GTildeEntry& entry) {
    std::cout << "  " << std::left << std::setw(4) << entry.k << std::setw(13)
              << six_digits(entry.value) << std::setw(13) << to_string(entry.source);
    if (entry.estimate) {
      std::cout << std::setw(12) << six_digits(entry.estimate->std_error)
                << std::setw(13) << six_digits(entry.estimate->ci_low) << std::setw(13)
                << six_digits(entry.estimate->ci_high);
    }
    std::cout << "\n";
  };
  for (const auto& entry : table.entries) print_entry(entry);
  if (table.zero_tail) {
    std::cout << "  zero-hit tail entry (conservative mode only):\n";
    print_entry(*table.zero_tail);
  }
  std::cout << "truncation: " << table.truncation_note << "\n";
  std::cout << "elapsed: " << six_digits(elapsed_seconds) << " s\n";
}

int run_estimate(Options& opts) {
  opts.config.mode = hsgas::mode_from_string(opts.mode_text);
  if (!opts.out_path.empty()) opts.config.output_path = opts.out_path;
  opts.config.validate();

  const auto start = std::chrono::steady_clock::now();
  const hsgas::GTildeTable table = hsgas::build_gtable(opts.config, opts.threads);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string path = opts.config.output_path.value_or(
      "gtable_d" + std::to_string(opts.config.d) + ".json");
  hsgas::TableDocument doc{table, opts.config, hsgas::kToolVersion};
  hsgas::write_file(path, hsgas::to_json(doc));

  print_table_summary(table, opts.config, elapsed);
  std::cout << "wrote: " << path << "\n";
  return kExitOk;
}

int run_bound(Options& opts, bool curve_by_default) {
  const hsgas::Mode mode = hsgas::mode_from_string(opts.mode_text);
  int curve_samples = opts.curve;
  if (curve_samples < 0) curve_samples = curve_by_default ? 200 : 0;

  const hsgas::TableDocument doc =
      hsgas::table_document_from_json(hsgas::read_file(opts.table_path));
  const hsgas::BoundReport report =
      hsgas::bound_report(doc.table, mode, curve_samples, opts.config.search_cap);

  std::string out = opts.out_path;
  if (out.empty()) {
    std::filesystem::path p(opts.table_path);
    p.replace_extension("");
    out = p.string() + ".bound.json";
  }
  hsgas::write_file(out, hsgas::to_json(hsgas::ReportDocument{report, hsgas::kToolVersion}));

  std::cout << "bound on |z|*V_d(R): " << six_digits(report.bound)
            << "   (pressure analytic strictly below this value)\n"
            << "classical (1/e):     " << six_digits(report.classical) << "\n"
            << "improvement ratio:   " << six_digits(report.improvement_ratio) << "\n"
            << "a*:                  " << six_digits(report.a_star) << "\n"
            << "C(a*):               " << six_digits(report.c_at_a_star) << "\n"
            << "mode:                " << to_string(report.mode) << "\n";
  std::cout << "wrote: " << out << "\n";

  if (!report.curve.empty()) {
    std::filesystem::path csv(out);
    csv.replace_extension(".curve.csv");
    hsgas::write_file(csv.string(), hsgas::curve_csv(report));
    std::cout << "wrote: " << csv.string() << "\n";
  }
  return kExitOk;
}

int run_verify(const Options& opts) {
  hsgas::VerifyOptions vo;
  vo.master_seed = opts.config.master_seed;
  vo.mc_samples = opts.verify_samples;
  vo.threads = opts.threads;
  if (opts.tamper_g22) vo.g22_reference = 0.5;  // negative-control fixture

  const auto results = hsgas::run_verify_suite(vo);
  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
              << "\n";
    if (!r.passed) ++failures;
  }
  if (failures > 0) {
    std::cerr << "error: verify: " << failures << " check(s) failed\n";
    return kExitVerify;
  }
  std::cout << "all " << results.size() << " checks passed\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Improved analyticity bounds for the hard-sphere gas pressure"};
  app.set_version_flag("--version", std::string("hsgas ") + hsgas::kToolVersion);
  app.require_subcommand(1);

  Options opts;
  std::map<std::string, CLI::Option*> estimate_flags;
  std::map<std::string, CLI::Option*> bound_flags;
  std::map<std::string, CLI::Option*> curve_flags;

  auto* estimate = app.add_subcommand(
      "estimate", "Estimate the gtilde table for one dimension and write it as JSON");
  estimate_flags["d"] = estimate->add_option("--dim", opts.config.d, "Dimension d >= 1");
  estimate_flags["samples"] = estimate->add_option(
      "--samples", opts.config.samples_per_k, "Monte Carlo samples per k (0 = auto)");
  estimate_flags["seed"] =
      estimate->add_option("--seed", opts.config.master_seed, "Master seed");
  estimate_flags["chunk-size"] =
      estimate->add_option("--chunk-size", opts.config.chunk_size, "Samples per chunk");
  estimate_flags["confidence"] = estimate->add_option(
      "--confidence", opts.config.confidence_level, "Confidence level in (0,1)");
  estimate_flags["mode"] =
      estimate->add_option("--mode", opts.mode_text, "Bound mode: mean or conservative")
          ->check(CLI::IsMember({"mean", "conservative"}));
  estimate_flags["out"] = estimate->add_option("--out", opts.out_path, "Output table path");
  estimate_flags["threads"] =
      estimate->add_option("--threads", opts.threads, "Worker cap (0 = hardware)");
  estimate->add_option("--config", opts.config_path, "JSON config file");

  const auto add_bound_flags = [&](CLI::App* cmd,
                                   std::map<std::string, CLI::Option*>& flags) {
    cmd->add_option("table", opts.table_path, "Serialized gtilde table (JSON)")
        ->required();
    flags["mode"] = cmd->add_option("--mode", opts.mode_text,
                                    "Bound mode: mean or conservative")
                        ->check(CLI::IsMember({"mean", "conservative"}));
    flags["search-cap"] =
        cmd->add_option("--search-cap", opts.config.search_cap, "Upper end of the a search");
    flags["curve"] = cmd->add_option("--curve", opts.curve,
                                     "Also tabulate N points of (a, a/C(a))");
    flags["out"] = cmd->add_option("--out", opts.out_path, "Output report path");
    cmd->add_option("--config", opts.config_path, "JSON config file");
  };
  auto* bound = app.add_subcommand(
      "bound", "Maximize a/C_d(a) over a table and report the improved bound");
  add_bound_flags(bound, bound_flags);
  auto* curve = app.add_subcommand(
      "curve", "Like bound, but always tabulates the (a, a/C(a)) curve");
  add_bound_flags(curve, curve_flags);

  auto* verify = app.add_subcommand("verify", "Run the built-in oracle suite");
  verify->add_option("--seed", opts.config.master_seed, "Master seed");
  verify->add_option("--samples", opts.verify_samples, "Monte Carlo samples per check");
  verify->add_option("--threads", opts.threads, "Worker cap (0 = hardware)");
  verify->add_flag("--tamper-g22", opts.tamper_g22)->group("");  // test fixture, hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (!opts.config_path.empty()) {
      const auto& active_flags = estimate->parsed() ? estimate_flags
                                 : bound->parsed()  ? bound_flags
                                                    : curve_flags;
      apply_config_file(opts.config_path, opts, active_flags);
    }
    if (estimate->parsed()) return run_estimate(opts);
    if (bound->parsed()) return run_bound(opts, false);
    if (curve->parsed()) return run_bound(opts, true);
    if (verify->parsed()) return run_verify(opts);
  } catch (const hsgas::IoError& err) {
    std::cerr << "error: io: " << err.what() << "\n";
    return kExitIo;
  } catch (const hsgas::ParseError& err) {
    std::cerr << "error: parse: " << err.what() << "\n";
    return kExitIo;
  } catch (const hsgas::DegenerateTableError& err) {
    std::cerr << "error: degenerate: " << err.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& err) {
    std::cerr << "error: numeric: " << err.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}
