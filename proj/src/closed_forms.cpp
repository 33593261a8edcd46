#include "trigsum/closed_forms.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "trigsum/errors.hpp"
#include "trigsum/radical.hpp"

namespace trigsum {

namespace {

long double int_power(long double base, std::int64_t e) {
  const bool invert = e < 0;
  auto u = static_cast<std::uint64_t>(invert ? -e : e);
  long double acc = 1.0L;
  while (u != 0) {
    if (u & 1U) acc *= base;
    base *= base;
    u >>= 1U;
  }
  return invert ? 1.0L / acc : acc;
}

std::string describe(ExponentN n, Angle phi) {
  return "n = " + std::to_string(n.value()) + ", phi = " + std::to_string(phi.radians);
}

/// 2^n cos^n(phi/2); trig selects cos or sin of n phi / 2.
ClosedFormValue general(ExponentN n, Angle phi, bool cosine) {
  const auto id = cosine ? ClosedFormId::general_cos : ClosedFormId::general_sin;
  const long double nl = n.value();
  const long double half_arg = nl * static_cast<long double>(phi.radians) / 2.0L;
  const long double trig = cosine ? std::cos(half_arg) : std::sin(half_arg);
  const bool pole = detail::at_pole(phi);

  if (n.is_integer()) {
    if (n.value() < 0.0 && pole) throw PoleError("closed form pole: " + describe(n, phi));
    const long double base = 2.0L * std::cos(static_cast<long double>(phi.radians) / 2.0L);
    const long double amp = int_power(base, static_cast<std::int64_t>(n.value()));
    return {static_cast<double>(amp * trig), true, id};
  }

  if (std::abs(phi.radians) > std::numbers::pi + detail::kAngleTolerance)
    throw DomainError("closed form needs phi in [-pi, pi] for non-integer n: " + describe(n, phi));
  if (pole) {
    if (n.value() < 0.0) throw PoleError("closed form pole: " + describe(n, phi));
    return {0.0, true, id};
  }
  const long double base = 2.0L * std::cos(static_cast<long double>(phi.radians) / 2.0L);
  const long double amp = std::exp(nl * std::log(base));
  return {static_cast<double>(amp * trig), true, id};
}

}  // namespace

std::string_view to_string(ClosedFormId id) {
  switch (id) {
    case ClosedFormId::general_cos: return "general_cos";
    case ClosedFormId::general_sin: return "general_sin";
    case ClosedFormId::reduced_neg_int: return "reduced_neg_int";
    case ClosedFormId::quarter_turn: return "quarter_turn";
    case ClosedFormId::lambda_series: return "lambda_series";
  }
  return "?";
}

ClosedFormValue cos_closed(ExponentN n, Angle phi) { return general(n, phi, true); }

ClosedFormValue sin_closed(ExponentN n, Angle phi) { return general(n, phi, false); }

ClosedFormValue closed_form(const SeriesSpec& spec) {
  return spec.kind == SeriesKind::cosine ? cos_closed(spec.n, spec.phi)
                                         : sin_closed(spec.n, spec.phi);
}

ClosedFormValue reduced_neg_int(int m, Angle phi) {
  if (m < 1 || m > 7) throw DomainError("reduced_neg_int: m must be in 1..7");
  if (detail::at_pole(phi)) throw PoleError("reduced_neg_int: pole at phi = " + std::to_string(phi.radians));

  const long double p = phi.radians;
  const long double c = std::cos(p);
  const long double half = std::cos(p / 2.0L);
  long double v = 0.0L;
  switch (m) {
    case 1: v = 0.5L; break;
    case 2: v = c / (2.0L * (1.0L + c)); break;
    case 3: v = std::cos(1.5L * p) / (8.0L * half * half * half); break;
    default:
      v = std::cos(static_cast<long double>(m) * p / 2.0L) /
          (std::ldexp(1.0L, m) * int_power(half, m));
      break;
  }
  return {static_cast<double>(v), true, ClosedFormId::reduced_neg_int};
}

double reduced_neg_three_rational(Angle phi) {
  if (detail::at_pole(phi)) throw PoleError("reduced form pole");
  const long double c = std::cos(static_cast<long double>(phi.radians));
  return static_cast<double>((-1.0L + 2.0L * c) / (4.0L * (1.0L + c)));
}

ClosedFormValue quarter_turn_sum(ExponentN n) {
  if (n.is_integer()) {
    // cos(k pi/4) for k = n mod 8 is 0, +-1 or +-1/sqrt(2); the latter pairs
    // with an odd n so 2^(n/2) / sqrt(2) = 2^((n-1)/2) stays exact.
    const auto ni = static_cast<std::int64_t>(n.value());
    const std::int64_t k = ((ni % 8) + 8) % 8;
    static constexpr int kSign[8] = {1, 1, 0, -1, -1, -1, 0, 1};
    const int sign = kSign[k];
    double v = 0.0;
    if (sign != 0) {
      const std::int64_t e = (k % 2 == 0) ? ni / 2 : (ni - 1) / 2;
      v = sign * std::ldexp(1.0, static_cast<int>(e));
    }
    return {v, true, ClosedFormId::quarter_turn};
  }
  const long double nl = n.value();
  const long double v =
      std::exp2(nl / 2.0L) * std::cos(nl * std::numbers::pi_v<long double> / 4.0L);
  return {static_cast<double>(v), true, ClosedFormId::quarter_turn};
}

ClosedFormValue lambda_series_closed(double lambda) {
  ClosedFormValue v = quarter_turn_sum(ExponentN(-lambda));
  v.form_id = ClosedFormId::lambda_series;
  return v;
}

std::vector<CatalogEntry> special_value_catalog() {
  using R = Radical;
  const Angle zero{0.0};
  const Angle third{std::numbers::pi / 3.0};
  const Angle quarter{std::numbers::pi / 2.0};
  const Angle half{std::numbers::pi};
  const ExponentN plus_half(0.5);
  const ExponentN minus_half(-0.5);

  auto entry = [](ExponentN n, Angle phi, const Radical& recipe) {
    return CatalogEntry{SeriesSpec{SeriesKind::cosine, n, phi}, recipe.to_string(), false,
                        recipe.evaluate()};
  };

  const R two = R::integer(2);
  const R one = R::integer(1);
  std::vector<CatalogEntry> out;
  out.push_back(entry(plus_half, zero, sqrt(two)));
  out.push_back(entry(plus_half, half, R::integer(0)));
  out.push_back(entry(plus_half, quarter, sqrt((one + sqrt(two)) / two)));
  out.push_back(entry(plus_half, third, R::rational(1, 2) * sqrt(R::integer(3) + two * sqrt(R::integer(3)))));
  out.push_back(entry(minus_half, zero, one / sqrt(two)));
  out.push_back(entry(minus_half, quarter, R::rational(1, 2) * sqrt(one + sqrt(two))));
  out.push_back(CatalogEntry{SeriesSpec{SeriesKind::cosine, minus_half, half}, "divergent", true,
                             std::numeric_limits<long double>::infinity()});
  return out;
}

}  // namespace trigsum
