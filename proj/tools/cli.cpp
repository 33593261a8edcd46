#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "trigsum/closed_forms.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/phase.hpp"
#include "trigsum/trig_series.hpp"
#include "trigsum/verify.hpp"

namespace trigsum::cli {

namespace {

/// Raised inside subcommands for malformed values CLI11 cannot check itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Angle require_angle(const std::string& text, const char* flag) {
  auto a = parse_angle(text);
  if (!a) throw UsageError(std::string("malformed angle for ") + flag + ": '" + text + "'");
  return *a;
}

SeriesKind parse_kind(const std::string& text) {
  return text == "sin" ? SeriesKind::sine : SeriesKind::cosine;
}

enum class Method { partial, cesaro, abel, phase };

const std::map<std::string, Method>& method_names() {
  static const std::map<std::string, Method> names = {
      {"partial", Method::partial},
      {"cesaro", Method::cesaro},
      {"abel", Method::abel},
      {"phase", Method::phase},
  };
  return names;
}

SummationResult phase_result(const SeriesSpec& spec) {
  if (!spec.n.is_nonnegative_integer() || spec.n.value() > kMaxPhasePower)
    throw DomainError("phase method needs an integer exponent in 0..64");
  const int n = static_cast<int>(spec.n.value());
  const PhaseSums s = binomial_phase_power(n, spec.phi);
  return SummationResult{spec.kind == SeriesKind::cosine ? s.cos_sum : s.sin_sum,
                         SummationMethod::closed, static_cast<std::size_t>(n) + 1, 0.0,
                         classify(spec)};
}

SummationResult run_method(Method m, const SeriesSpec& spec, std::optional<std::size_t> terms) {
  switch (m) {
    case Method::partial: return partial_sum(spec, terms.value_or(kDefaultTermBudget));
    case Method::cesaro: return cesaro_sum(spec, terms.value_or(kDefaultTermBudget));
    case Method::abel: {
      const auto radii = default_abel_radii(spec.phi);
      return abel_sum(spec, terms.value_or(default_abel_terms(radii)), radii);
    }
    case Method::phase: return phase_result(spec);
  }
  throw std::logic_error("unknown method");
}

/// Methods that cannot be trusted for a convergence class; the run proceeds anyway.
std::optional<std::string> method_warning(Method m, const SeriesSpec& spec, ConvergenceClass c) {
  switch (m) {
    case Method::partial:
      if (c == ConvergenceClass::summable_only || c == ConvergenceClass::divergent)
        return "partial sums do not converge for a " + std::string(to_string(c)) + " series";
      break;
    case Method::cesaro:
      if (c == ConvergenceClass::divergent || spec.n.value() < -1.0)
        return "first-order Cesaro means do not settle for n < -1 or divergent series";
      break;
    default: break;
  }
  return std::nullopt;
}

std::string closed_text(const SeriesSpec& spec) {
  try {
    return format_number(closed_form(spec).value);
  } catch (const PoleError&) {
    return "pole";
  } catch (const DomainError&) {
    return "domain";
  }
}

struct SumArgs {
  std::string kind = "cos";
  double n = 0.0;
  std::string phi;
  std::string method = "partial";
  std::optional<std::size_t> terms;
  double tol = 1e-8;
};

int cmd_sum(const SumArgs& a, std::ostream& out, std::ostream& err) {
  const SeriesSpec spec{parse_kind(a.kind), ExponentN(a.n), require_angle(a.phi, "--phi")};
  const Method method = method_names().at(a.method);
  const ConvergenceClass cls = classify(spec);
  if (auto w = method_warning(method, spec, cls)) err << "warning: " << *w << '\n';

  SummationResult r;
  try {
    r = run_method(method, spec, a.terms);
  } catch (const DivergenceError& e) {
    out << "divergent: " << e.what() << '\n' << "convergence: " << to_string(cls) << '\n';
    return kDivergent;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  out << "kind: " << to_string(spec.kind) << '\n'
      << "n: " << format_number(spec.n.value()) << '\n'
      << "phi_rad: " << format_number(spec.phi.radians) << '\n'
      << "method: " << a.method << '\n'
      << "value: " << format_number(r.value) << '\n'
      << "terms_used: " << r.terms_used << '\n'
      << "residual_estimate: " << format_number(r.residual_estimate) << '\n'
      << "convergence: " << to_string(r.convergence) << '\n';
  const std::string closed = closed_text(spec);
  out << "closed: " << closed << '\n';
  if (closed != "pole" && closed != "domain") {
    const double c = closed_form(spec).value;
    const bool agrees = std::abs(r.value - c) <= a.tol * (1.0 + std::abs(c));
    out << "agrees_with_closed: " << (agrees ? "yes" : "no") << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  std::string suite;
  std::optional<double> grid_step;
  std::optional<double> tol;
  std::string report;
  unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Suite suite = *parse_suite(a.suite);
  if (a.grid_step && !(*a.grid_step > 0.0)) throw UsageError("--grid-step-deg must be positive");
  if (a.tol && !(*a.tol >= 0.0)) throw UsageError("--tol must be nonnegative");

  const std::string path = a.report.empty() ? a.suite + "_report.csv" : a.report;
  std::ofstream file;
  if (path != "-") {
    file.open(path, std::ios::out | std::ios::trunc);
    if (!file) throw IoError("cannot open report file '" + path + "'");
  }

  SuiteOptions options;
  options.grid_step_deg = a.grid_step;
  options.tolerance = a.tol;
  options.threads = a.threads;
  const VerificationReport report = run_suite(suite, options);

  if (path == "-") {
    write_report(out, report);
  } else {
    write_report(file, report);
    file.flush();
    if (!file) throw IoError("failed writing report file '" + path + "'");
  }

  constexpr std::size_t kShownFailures = 20;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < report.cases.size() && shown < kShownFailures; ++i) {
    const CaseOutcome& c = report.cases[i];
    if (c.passed) continue;
    ++shown;
    out << "FAIL case " << i << ": " << to_string(c.test.spec.kind) << " n=" << format_number(c.test.spec.n.value())
        << " phi=" << format_number(c.test.spec.phi.radians) << " method=" << to_string(c.test.method)
        << " computed=" << format_number(c.computed) << " expected=" << format_number(c.expected)
        << " abs_error=" << format_number(c.abs_error);
    if (!c.error.empty()) out << " (" << c.error << ")";
    out << '\n';
  }
  out << "suite " << report.suite << ": total=" << report.summary.total
      << " passed=" << report.summary.passed << " failed=" << report.summary.failed;
  if (path != "-") out << " report=" << path;
  out << '\n';
  return report.summary.failed == 0 ? kOk : kVerificationFailed;
}

struct TableArgs {
  std::string kind = "cos";
  double n = 0.0;
  std::string from;
  std::string to;
  std::string step;
  std::string methods;
  std::optional<std::size_t> terms;
  std::string out_path;
};

std::string table_cell(Method m, const SeriesSpec& spec, std::optional<std::size_t> terms) {
  try {
    return format_number(run_method(m, spec, terms).value);
  } catch (const DivergenceError&) {
    return "divergent";
  } catch (const PoleError&) {
    return "pole";
  } catch (const DomainError&) {
    return "domain";
  }
}

int cmd_table(const TableArgs& a, std::ostream& out) {
  std::vector<std::pair<std::string, Method>> methods;
  std::stringstream list(a.methods);
  for (std::string item; std::getline(list, item, ',');) {
    if (item.empty()) continue;
    auto it = method_names().find(item);
    if (it == method_names().end()) throw UsageError("unknown method '" + item + "'");
    methods.emplace_back(item, it->second);
  }
  if (methods.empty()) throw UsageError("--methods needs at least one method");

  const Angle from = require_angle(a.from, "--from");
  const Angle to = require_angle(a.to, "--to");
  const Angle step = require_angle(a.step, "--step");
  if (!(from.radians < to.radians)) throw UsageError("--from must be smaller than --to");
  if (!(step.radians > 0.0)) throw UsageError("--step must be positive");

  std::ofstream file;
  std::ostream* sink = &out;
  if (!a.out_path.empty()) {
    file.open(a.out_path, std::ios::out | std::ios::trunc);
    if (!file) throw IoError("cannot open output file '" + a.out_path + "'");
    sink = &file;
  }

  *sink << "phi_deg,phi_rad";
  for (const auto& m : methods) *sink << ',' << m.first;
  *sink << ",closed\n";

  const auto rows =
      static_cast<std::size_t>(std::floor((to.radians - from.radians) / step.radians + 1e-9)) + 1;
  for (std::size_t i = 0; i < rows; ++i) {
    const Angle phi{from.radians + static_cast<double>(i) * step.radians};
    const SeriesSpec spec{parse_kind(a.kind), ExponentN(a.n), phi};
    *sink << format_number(phi.degrees()) << ',' << format_number(phi.radians);
    for (const auto& m : methods) *sink << ',' << table_cell(m.second, spec, a.terms);
    *sink << ',' << closed_text(spec) << '\n';
  }
  if (file.is_open()) {
    file.flush();
    if (!file) throw IoError("failed writing '" + a.out_path + "'");
  }
  return kOk;
}

}  // namespace

std::optional<Angle> parse_angle(std::string_view text) {
  double scale_to_rad = 1.0;
  if (text.ends_with("deg")) {
    text.remove_suffix(3);
    scale_to_rad = std::numbers::pi / 180.0;
  } else if (text.ends_with("rad")) {
    text.remove_suffix(3);
  }
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
    return std::nullopt;
  return scale_to_rad == 1.0 ? Angle{v} : Angle::from_degrees(v);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binomial cosine/sine series: summation methods against closed forms", "trigsum"};
  app.require_subcommand(1);

  const std::vector<std::string> kinds = {"cos", "sin"};
  std::vector<std::string> method_list;
  for (const auto& [name, m] : method_names()) method_list.push_back(name);

  SumArgs sum;
  auto* sum_cmd = app.add_subcommand("sum", "Sum one series with a chosen method");
  sum_cmd->add_option("--kind", sum.kind, "cos or sin")->required()->check(CLI::IsMember(kinds));
  sum_cmd->add_option("--n", sum.n, "Exponent n")->required();
  sum_cmd->add_option("--phi", sum.phi, "Angle, e.g. 90deg or 1.5708rad")->required();
  sum_cmd->add_option("--method", sum.method, "partial, cesaro, abel or phase")
      ->check(CLI::IsMember(method_list));
  sum_cmd->add_option("--terms", sum.terms, "Term budget")->check(CLI::PositiveNumber);
  sum_cmd->add_option("--tol", sum.tol, "Tolerance for the closed-form comparison")
      ->check(CLI::NonNegativeNumber);

  VerifyArgs verify;
  std::vector<std::string> suites;
  for (Suite s : {Suite::finite_integer, Suite::negative_integer, Suite::half_integer,
                  Suite::quarter_turn, Suite::lambda, Suite::phase_equivalence, Suite::all})
    suites.emplace_back(to_string(s));
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and write a report");
  verify_cmd->add_option("--suite", verify.suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify_cmd->add_option("--grid-step-deg", verify.grid_step, "Angle grid spacing in degrees");
  verify_cmd->add_option("--tol", verify.tol, "Override every case tolerance");
  verify_cmd->add_option("--report", verify.report, "Report path ('-' for stdout)");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0: all cores)");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Tabulate methods and closed form over an angle grid");
  table_cmd->add_option("--kind", table.kind, "cos or sin")->required()->check(CLI::IsMember(kinds));
  table_cmd->add_option("--n", table.n, "Exponent n")->required();
  table_cmd->add_option("--from", table.from, "First angle")->required();
  table_cmd->add_option("--to", table.to, "Last angle")->required();
  table_cmd->add_option("--step", table.step, "Angle step")->required();
  table_cmd->add_option("--methods", table.methods, "Comma-separated methods")->required();
  table_cmd->add_option("--terms", table.terms, "Term budget")->check(CLI::PositiveNumber);
  table_cmd->add_option("--out", table.out_path, "Write the table to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sum_cmd) return cmd_sum(sum, out, err);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*table_cmd) return cmd_table(table, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const PoleError& e) {
    err << "pole: " << e.what() << '\n';
    return kDomainError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsage;
}

}  // namespace trigsum::cli
