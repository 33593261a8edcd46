#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "trigsum/trig_series.hpp"

namespace trigsum {

enum class Suite {
  finite_integer,
  negative_integer,
  half_integer,
  quarter_turn,
  lambda,
  phase_equivalence,
  all,
};

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

/// How the computed side of a case is produced.
enum class CaseMethod {
  partial,       // partial_sum
  cesaro,        // cesaro_sum
  abel,          // abel_sum with the default schedule
  phase,         // binomial_phase_power
  phase_poly,    // series_at_phase over the binomial row
  reduced,       // reduced_neg_int(-n, phi)
  quarter_turn,  // quarter_turn_sum(n)
  lambda,        // lambda_series_closed(-n)
  even_sum,      // exact 1 - (n over 2) + (n over 4) - ...
};

enum class ExpectedSource { closed_form, catalog, literal };

std::string_view to_string(CaseMethod m);
std::string_view to_string(ExpectedSource s);

struct SuiteCase {
  SeriesSpec spec;
  CaseMethod method = CaseMethod::partial;
  ExpectedSource expected_source = ExpectedSource::closed_form;
  double tolerance = 1e-10;
  std::size_t terms = 0;          // 0: method default
  double expected_value = 0.0;    // catalog and literal sources
  bool expect_divergent = false;  // passes only on a divergence signal
  std::string note;               // provenance of literal expectations
};

struct CaseOutcome {
  SuiteCase test;
  double computed = 0.0;
  double expected = 0.0;
  double abs_error = 0.0;
  bool passed = false;
  std::string error;  // exception text when evaluation failed
};

struct ReportSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseOutcome> cases;
  ReportSummary summary;
  double wall_time_s = 0.0;
};

struct SuiteOptions {
  std::optional<double> grid_step_deg;  // replaces the suite's own grid spacing
  std::optional<double> tolerance;      // replaces every case tolerance
  unsigned threads = 0;                 // 0: hardware concurrency
};

/// Angles k * step (degrees) with |k * step| < limit, as radians, ascending.
std::vector<Angle> symmetric_grid(double limit_deg, double step_deg, bool include_zero);

std::vector<SuiteCase> build_suite(Suite suite, const SuiteOptions& options = {});

CaseOutcome evaluate_case(const SuiteCase& test);

/// Evaluates cases concurrently; outcomes keep the input order.
std::vector<CaseOutcome> run_cases(const std::vector<SuiteCase>& cases, unsigned threads = 0);

VerificationReport run_suite(Suite suite, const SuiteOptions& options = {});

/// CSV body plus '#' trailer lines; the last line is the summary.
void write_report(std::ostream& out, const VerificationReport& report);

/// printf("%.17g") with inf/nan spelled out.
std::string format_number(double v);

}  // namespace trigsum
