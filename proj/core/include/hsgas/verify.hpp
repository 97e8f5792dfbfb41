#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hsgas {

struct VerifyOptions {
  std::uint64_t master_seed = 42;
  std::uint64_t mc_samples = 1000000;
  int threads = 0;
  // Test hook: overrides the reference constant for the d=2, k=2 closed-form
  // check (a wrong value must make that check fail).
  std::optional<double> g22_reference;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Built-in oracle suite: sampler moments, d=1 exact values, the d=2, k=2
// closed form against Monte Carlo, degree-sequence counts against Prufer
// enumeration, the series tail closed form against partial sums, and the
// optimizer against hand-solved synthetic tables.
std::vector<CheckResult> run_verify_suite(const VerifyOptions& options = {});

}  // namespace hsgas
