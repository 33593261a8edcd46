#include "trigsum/binom.hpp"

#include <cmath>

namespace trigsum {

namespace {

bool has_exact_path(ExponentN n) {
  return n.is_integer() && std::abs(n.value()) <= kExactBinomLimit;
}

// Floating recurrence, also the fallback when 128-bit arithmetic overflows.
long double recurrence_binom(double n, std::int64_t k) {
  long double c = 1.0L;
  for (std::int64_t j = 0; j < k; ++j) {
    c = detail::binom_step(c, n, static_cast<std::size_t>(j));
    if (c == 0.0L) break;
  }
  return c;
}

}  // namespace

std::optional<__int128> exact_binom(ExponentN n, std::int64_t k) {
  if (!has_exact_path(n)) return std::nullopt;
  if (k < 0) return __int128{0};
  const auto ni = static_cast<__int128>(n.value());
  if (ni >= 0 && k > ni) return __int128{0};

  // (n - j) * c_j is always divisible by (j + 1) since the quotient is c_{j+1}.
  __int128 c = 1;
  for (std::int64_t j = 0; j < k; ++j) {
    __int128 prod = 0;
    if (__builtin_mul_overflow(c, ni - j, &prod)) return std::nullopt;
    c = prod / (j + 1);
  }
  return c;
}

double gen_binom(ExponentN n, std::int64_t k) {
  if (k < 0) return 0.0;
  if (k == 0) return 1.0;
  if (auto exact = exact_binom(n, k)) return static_cast<double>(*exact);
  return static_cast<double>(recurrence_binom(n.value(), k));
}

std::vector<double> binom_prefix(ExponentN n, std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  if (count == 0) return out;

  if (has_exact_path(n)) {
    const auto ni = static_cast<__int128>(n.value());
    __int128 c = 1;
    std::size_t j = 0;
    for (; j < count; ++j) {
      out.push_back(static_cast<double>(c));
      __int128 prod = 0;
      if (__builtin_mul_overflow(c, ni - static_cast<__int128>(j), &prod)) break;
      c = prod / static_cast<__int128>(j + 1);
    }
    if (j == count) return out;
    // Overflowed after element j; continue in floating point from there.
    long double cf = static_cast<long double>(c);
    cf = detail::binom_step(cf, n.value(), j);
    for (++j; j < count; ++j) {
      out.push_back(static_cast<double>(cf));
      cf = detail::binom_step(cf, n.value(), j);
    }
    return out;
  }

  long double c = 1.0L;
  for (std::size_t j = 0; j < count; ++j) {
    out.push_back(static_cast<double>(c));
    c = detail::binom_step(c, n.value(), j);
  }
  return out;
}

}  // namespace trigsum
