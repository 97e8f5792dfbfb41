#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsgas/gtable.hpp"
#include "hsgas/run_config.hpp"

namespace hsgas {

// Raised when every coefficient with s >= 2 vanishes: a/C(a) then increases
// toward 1 with no interior maximizer and the optimization is vacuous.
class DegenerateTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Optimizer output: the improved bound on |z| * V_d(R) next to the classical
// 1/e criterion. The pressure is analytic for |z| * V_d(R) strictly below
// `bound`.
struct BoundReport {
  int d = 0;
  Mode mode = Mode::mean;
  double a_star = 0.0;
  double c_at_a_star = 0.0;
  double bound = 0.0;
  double classical = 0.0;            // exp(-1)
  double improvement_ratio = 0.0;    // bound / classical
  std::string gtable_fingerprint;
  std::vector<std::array<double, 2>> curve;  // optional (a, a/C(a)) pairs
};

// C_d(a) = sum_{s=0}^{k_max} v_s a^s / s!. Mean mode uses the table values;
// conservative mode substitutes each Monte Carlo coefficient by its upper
// confidence limit and includes the zero-hit tail entry. C_d(0) = 1 always.
double c_polynomial(const GTildeTable& table, double a, Mode mode);

struct OptimizeResult {
  double a_star = 0.0;
  double bound = 0.0;
};

// Maximize f(a) = a / C_d(a) over (0, search_cap]. C has nonnegative
// coefficients, so log C is convex in log a, f is unimodal, and the
// stationary point is the unique root of C(a) - a C'(a); bisection on that
// root resolves a_star well past the contractual 1e-10 relative accuracy.
// Throws DegenerateTableError when no s >= 2 coefficient is positive.
OptimizeResult optimize_a(const GTildeTable& table, Mode mode, double search_cap);

// The classical criterion 1/e on |z| * V_d(R).
double classical_bound();

// sum_{n>=2} x^n / (n(n-1)) = x + (1-x) log(1-x) for x in [0, 1).
// Throws std::domain_error for x >= 1 and std::invalid_argument for x < 0.
double pressure_series_tail(double x);

// FNV-1a content hash over the table's semantic fields, as 16 hex digits.
std::string table_fingerprint(const GTildeTable& table);

// Full report; when curve_samples > 0 also tabulates (a, f(a)) pairs
// log-uniformly spaced over [a_star/10, 10*a_star].
BoundReport bound_report(const GTildeTable& table, Mode mode, int curve_samples,
                         double search_cap = 1000.0);

}  // namespace hsgas
