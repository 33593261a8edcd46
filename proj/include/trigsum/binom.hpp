#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "trigsum/exponent.hpp"

namespace trigsum {

/// Generalized binomial coefficient (n over k) for real n and integer k:
/// prod_{j<k} (n - j) / (j + 1), 1 for k == 0 and 0 for k < 0.
///
/// Integer n with |n| <= 64 goes through exact integer arithmetic and is
/// rounded once at the end. Everything else uses the forward recurrence
/// c_{k+1} = c_k * (n - k) / (k + 1) in extended precision.
double gen_binom(ExponentN n, std::int64_t k);

/// [gen_binom(n, 0), ..., gen_binom(n, count - 1)] in a single pass.
std::vector<double> binom_prefix(ExponentN n, std::size_t count);

/// Exact value of (n over k) when it is representable in 128-bit integers.
/// Empty when n is not an integer, |n| > 64, or the value overflows.
std::optional<__int128> exact_binom(ExponentN n, std::int64_t k);

inline constexpr double kExactBinomLimit = 64.0;

namespace detail {

/// One step of the coefficient recurrence, c_k -> c_{k+1}.
template <typename Real>
inline Real binom_step(Real c, double n, std::size_t k) {
  return c * (n - static_cast<double>(k)) / static_cast<double>(k + 1);
}

/// Long double overload keeps the ratio in extended precision.
inline long double binom_step(long double c, double n, std::size_t k) {
  return c * (static_cast<long double>(n) - static_cast<long double>(k)) /
         static_cast<long double>(k + 1);
}

}  // namespace detail
}  // namespace trigsum
