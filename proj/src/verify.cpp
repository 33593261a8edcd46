#include "trigsum/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "trigsum/binom.hpp"
#include "trigsum/closed_forms.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/phase.hpp"

namespace trigsum {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SeriesSpec cos_spec(double n, Angle phi) { return {SeriesKind::cosine, ExponentN(n), phi}; }

double pick(SeriesKind kind, const PhaseSums& s) {
  return kind == SeriesKind::cosine ? s.cos_sum : s.sin_sum;
}

double even_index_sum(ExponentN n) {
  if (!n.is_nonnegative_integer())
    throw DomainError("even-index sum needs a nonnegative integer exponent");
  const auto ni = static_cast<std::int64_t>(n.value());
  __int128 acc = 0;
  for (std::int64_t k = 0, sign = 1; 2 * k <= ni; ++k, sign = -sign) {
    const auto c = exact_binom(n, 2 * k);
    if (!c) throw DomainError("even-index sum: exponent too large for the exact path");
    acc += sign * *c;
  }
  return static_cast<double>(acc);
}

double compute(const SuiteCase& t) {
  const SeriesSpec& s = t.spec;
  switch (t.method) {
    case CaseMethod::partial:
      return partial_sum(s, t.terms ? t.terms : kDefaultTermBudget).value;
    case CaseMethod::cesaro:
      return cesaro_sum(s, t.terms ? t.terms : kDefaultTermBudget).value;
    case CaseMethod::abel:
      if (t.terms == 0) return abel_sum(s).value;
      return abel_sum(s, t.terms, default_abel_radii(s.phi)).value;
    case CaseMethod::phase:
      return pick(s.kind, binomial_phase_power(static_cast<int>(s.n.value()), s.phi));
    case CaseMethod::phase_poly: {
      const auto row = binom_prefix(s.n, static_cast<std::size_t>(s.n.value()) + 1);
      return pick(s.kind, series_at_phase(row, s.phi));
    }
    case CaseMethod::reduced:
      return reduced_neg_int(static_cast<int>(-s.n.value()), s.phi).value;
    case CaseMethod::quarter_turn:
      return quarter_turn_sum(s.n).value;
    case CaseMethod::lambda:
      return lambda_series_closed(-s.n.value()).value;
    case CaseMethod::even_sum:
      return even_index_sum(s.n);
  }
  throw std::logic_error("unknown case method");
}

double expected_of(const SuiteCase& t) {
  if (t.expect_divergent) return kInf;
  if (t.expected_source == ExpectedSource::closed_form) return closed_form(t.spec).value;
  return t.expected_value;
}

void append_finite_integer(std::vector<SuiteCase>& out, const SuiteOptions& o) {
  const auto grid = symmetric_grid(179.0, o.grid_step_deg.value_or(1.0), true);
  for (int n = 0; n <= 10; ++n) {
    for (SeriesKind kind : {SeriesKind::cosine, SeriesKind::sine}) {
      for (Angle phi : grid) {
        SuiteCase c;
        c.spec = {kind, ExponentN(n), phi};
        c.method = CaseMethod::partial;
        c.terms = static_cast<std::size_t>(n) + 1;
        c.tolerance = 1e-10;
        out.push_back(c);
      }
    }
  }
}

void append_quarter_turn(std::vector<SuiteCase>& out) {
  struct Row {
    int n;
    double value;
    const char* note;
  };
  static constexpr Row kRows[] = {
      {2, 0.0, "1 - 1 = 2 cos(90deg) = 0"},
      {3, -2.0, "1 - 3 = 2^(3/2) cos(135deg) = -2"},
      {4, -4.0, "1 - 6 + 1 = 4 cos(180deg) = -4"},
      {5, -4.0, "1 - 10 + 5 = 2^(5/2) cos(225deg) = -4"},
      {6, 0.0, "1 - 15 + 15 - 1 = 8 cos(270deg) = 0"},
      {7, 8.0, "1 - 21 + 35 - 7 = 2^(7/2) cos(315deg) = 8"},
      {8, 16.0, "1 - 28 + 70 - 28 + 1 = 16 cos(360deg) = 16"},
  };
  for (const Row& r : kRows) {
    for (CaseMethod m : {CaseMethod::quarter_turn, CaseMethod::even_sum}) {
      SuiteCase c;
      c.spec = cos_spec(r.n, Angle{std::numbers::pi / 2.0});
      c.method = m;
      c.expected_source = ExpectedSource::literal;
      c.expected_value = r.value;
      c.tolerance = 1e-15;
      c.note = r.note;
      out.push_back(c);
    }
  }
}

void append_negative_integer(std::vector<SuiteCase>& out, const SuiteOptions& o) {
  const auto grid = symmetric_grid(170.0, o.grid_step_deg.value_or(2.0), false);
  for (int m = 1; m <= 6; ++m) {
    for (Angle phi : grid) {
      SuiteCase abel;
      abel.spec = cos_spec(-m, phi);
      abel.method = CaseMethod::abel;
      abel.tolerance = 1e-6;
      out.push_back(abel);

      SuiteCase reduced = abel;
      reduced.method = CaseMethod::reduced;
      reduced.tolerance = 1e-12;
      out.push_back(reduced);
    }
  }
}

void append_lambda(std::vector<SuiteCase>& out) {
  static constexpr double kValues[] = {0.5, 0.0, -0.25, -0.25, -0.125, 0.0};
  for (int lambda = 1; lambda <= 6; ++lambda) {
    SuiteCase c;
    c.spec = cos_spec(-lambda, Angle{std::numbers::pi / 2.0});
    c.method = CaseMethod::abel;
    c.expected_source = ExpectedSource::literal;
    c.expected_value = kValues[lambda - 1];
    c.tolerance = 1e-6;
    c.note = "cos(lambda * 45deg) / 2^(lambda/2)";
    out.push_back(c);
  }
}

void append_half_integer(std::vector<SuiteCase>& out) {
  for (const CatalogEntry& e : special_value_catalog()) {
    SuiteCase c;
    c.spec = e.spec;
    c.method = CaseMethod::abel;
    c.expected_source = ExpectedSource::catalog;
    c.tolerance = 1e-6;
    c.note = e.exact_form;
    if (e.divergent) {
      c.expect_divergent = true;
    } else {
      c.expected_value = static_cast<double>(e.value);
      if (detail::at_pole(e.spec.phi)) {
        // Converges (slowly) on the boundary; checked with plain partial sums.
        c.method = CaseMethod::partial;
        c.terms = kDefaultTermBudget;
        c.tolerance = 1e-3;
      }
    }
    out.push_back(c);
  }
}

void append_phase_equivalence(std::vector<SuiteCase>& out, const SuiteOptions& o) {
  const auto grid = symmetric_grid(179.0, o.grid_step_deg.value_or(1.0), true);
  for (int n = 0; n <= 20; ++n) {
    const double tol = 1e-12 * std::ldexp(1.0, n);
    for (SeriesKind kind : {SeriesKind::cosine, SeriesKind::sine}) {
      for (Angle phi : grid) {
        for (CaseMethod m : {CaseMethod::phase, CaseMethod::phase_poly}) {
          SuiteCase c;
          c.spec = {kind, ExponentN(n), phi};
          c.method = m;
          c.tolerance = tol;
          out.push_back(c);
        }
      }
    }
  }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::finite_integer, Suite::negative_integer, Suite::half_integer,
                  Suite::quarter_turn, Suite::lambda, Suite::phase_equivalence, Suite::all}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::finite_integer: return "finite_integer";
    case Suite::negative_integer: return "negative_integer";
    case Suite::half_integer: return "half_integer";
    case Suite::quarter_turn: return "quarter_turn";
    case Suite::lambda: return "lambda";
    case Suite::phase_equivalence: return "phase_equivalence";
    case Suite::all: return "all";
  }
  return "?";
}

std::string_view to_string(CaseMethod m) {
  switch (m) {
    case CaseMethod::partial: return "partial";
    case CaseMethod::cesaro: return "cesaro";
    case CaseMethod::abel: return "abel";
    case CaseMethod::phase: return "phase";
    case CaseMethod::phase_poly: return "phase_poly";
    case CaseMethod::reduced: return "reduced";
    case CaseMethod::quarter_turn: return "quarter_turn";
    case CaseMethod::lambda: return "lambda";
    case CaseMethod::even_sum: return "even_sum";
  }
  return "?";
}

std::string_view to_string(ExpectedSource s) {
  switch (s) {
    case ExpectedSource::closed_form: return "closed_form";
    case ExpectedSource::catalog: return "catalog";
    case ExpectedSource::literal: return "literal";
  }
  return "?";
}

std::vector<Angle> symmetric_grid(double limit_deg, double step_deg, bool include_zero) {
  if (!(step_deg > 0.0)) throw std::invalid_argument("grid step must be positive");
  const auto k_max = static_cast<long>(std::floor((limit_deg - 1e-9) / step_deg));
  std::vector<Angle> out;
  for (long k = -k_max; k <= k_max; ++k) {
    if (k == 0 && !include_zero) continue;
    out.push_back(Angle::from_degrees(static_cast<double>(k) * step_deg));
  }
  return out;
}

std::vector<SuiteCase> build_suite(Suite suite, const SuiteOptions& options) {
  std::vector<SuiteCase> out;
  const auto want = [&](Suite s) { return suite == s || suite == Suite::all; };
  if (want(Suite::finite_integer)) append_finite_integer(out, options);
  if (want(Suite::quarter_turn)) append_quarter_turn(out);
  if (want(Suite::negative_integer)) append_negative_integer(out, options);
  if (want(Suite::lambda)) append_lambda(out);
  if (want(Suite::half_integer)) append_half_integer(out);
  if (want(Suite::phase_equivalence)) append_phase_equivalence(out, options);
  if (options.tolerance) {
    for (SuiteCase& c : out) c.tolerance = *options.tolerance;
  }
  return out;
}

CaseOutcome evaluate_case(const SuiteCase& test) {
  CaseOutcome r;
  r.test = test;
  try {
    r.expected = expected_of(test);
  } catch (const std::exception& e) {
    r.expected = std::numeric_limits<double>::quiet_NaN();
    r.computed = std::numeric_limits<double>::quiet_NaN();
    r.abs_error = kInf;
    r.error = std::string("expected value: ") + e.what();
    return r;
  }

  try {
    r.computed = compute(test);
  } catch (const DivergenceError& e) {
    r.computed = kInf;
    r.error = e.what();
  } catch (const std::exception& e) {
    r.computed = std::numeric_limits<double>::quiet_NaN();
    r.abs_error = kInf;
    r.error = e.what();
    return r;
  }

  if (test.expect_divergent) {
    r.abs_error = std::isinf(r.computed) ? 0.0 : kInf;
    if (std::isinf(r.computed)) r.error.clear();
  } else if (!std::isfinite(r.computed)) {
    r.abs_error = kInf;
  } else {
    r.abs_error = std::abs(r.computed - r.expected);
  }
  const double scale = test.expect_divergent ? 1.0 : 1.0 + std::abs(r.expected);
  r.passed = r.abs_error <= test.tolerance * scale;
  return r;
}

std::vector<CaseOutcome> run_cases(const std::vector<SuiteCase>& cases, unsigned threads) {
  std::vector<CaseOutcome> out(cases.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) out[i] = evaluate_case(cases[i]);
  };
  if (threads <= 1) {
    worker();
    return out;
  }
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return out;
}

VerificationReport run_suite(Suite suite, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = std::string(to_string(suite));
  report.cases = run_cases(build_suite(suite, options), options.threads);
  report.summary.total = report.cases.size();
  for (const CaseOutcome& c : report.cases) {
    if (c.passed) ++report.summary.passed;
  }
  report.summary.failed = report.summary.total - report.summary.passed;
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_report(std::ostream& out, const VerificationReport& report) {
  out << "case,kind,n,phi_rad,method,computed,expected,abs_error,passed\n";
  for (std::size_t i = 0; i < report.cases.size(); ++i) {
    const CaseOutcome& c = report.cases[i];
    out << i << ',' << to_string(c.test.spec.kind) << ',' << format_number(c.test.spec.n.value())
        << ',' << format_number(c.test.spec.phi.radians) << ',' << to_string(c.test.method) << ','
        << format_number(c.computed) << ',' << format_number(c.expected) << ','
        << format_number(c.abs_error) << ',' << (c.passed ? "true" : "false") << '\n';
  }
  char wall[64];
  std::snprintf(wall, sizeof wall, "%.3f", report.wall_time_s);
  out << "# suite=" << report.suite << " wall_time=" << wall << "s\n";
  out << "# total=" << report.summary.total << " passed=" << report.summary.passed
      << " failed=" << report.summary.failed << '\n';
}

}  // namespace trigsum
