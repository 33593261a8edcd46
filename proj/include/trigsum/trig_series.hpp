#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "trigsum/exponent.hpp"

namespace trigsum {

enum class SeriesKind { cosine, sine };

/// sum_k (n over k) cos(k phi)  or  sum_k (n over k) sin(k phi).
struct SeriesSpec {
  SeriesKind kind = SeriesKind::cosine;
  ExponentN n;
  Angle phi;
};

enum class ConvergenceClass {
  finite,
  absolutely_convergent,
  conditionally_convergent,
  summable_only,
  divergent,
};

enum class SummationMethod { partial, cesaro, abel, closed };

struct SummationResult {
  double value = 0.0;
  SummationMethod method = SummationMethod::partial;
  std::size_t terms_used = 0;
  double residual_estimate = 0.0;
  ConvergenceClass convergence = ConvergenceClass::finite;
};

inline constexpr std::size_t kDefaultTermBudget = 100000;
inline constexpr double kDivergenceThreshold = 1e12;
inline constexpr std::array<double, 7> kBaseAbelRadii = {0.90, 0.925, 0.95, 0.965,
                                                         0.975, 0.985, 0.99};

std::string_view to_string(SeriesKind kind);
std::string_view to_string(ConvergenceClass c);
std::string_view to_string(SummationMethod m);

ConvergenceClass classify(const SeriesSpec& spec);

/// Sum of the first `terms` terms. residual_estimate is |last term|.
SummationResult partial_sum(const SeriesSpec& spec, std::size_t terms);

/// (C,1) mean of the first `terms` partial sums. residual_estimate compares
/// the mean of the last ceil(terms/4) partial sums with the window before it.
SummationResult cesaro_sum(const SeriesSpec& spec, std::size_t terms);

/// Abel mean: f(r) = sum_k (n over k) r^k trig(k phi) at each radius, then
/// polynomial extrapolation in (1 - r) to r = 1.
///
/// `radii` must be strictly increasing inside (0, 1), at least three of them,
/// and `terms` must satisfy max(radii)^terms < 1e-16. Each f(r) is summed until
/// its tail is negligible or `terms` is reached. Throws DivergenceError when
/// f(r) exceeds 1e12 in magnitude or grows like a power of 1/(1 - r).
SummationResult abel_sum(const SeriesSpec& spec, std::size_t terms, std::span<const double> radii);

/// abel_sum with default_abel_radii(spec.phi) and default_abel_terms.
SummationResult abel_sum(const SeriesSpec& spec);

/// The base schedule with every gap 1 - r shrunk by clamp(|cos(phi/2)|, 0.05, 1),
/// keeping the samples well inside the distance to the singularity at r = -e^{-i phi}.
std::vector<double> default_abel_radii(Angle phi);

/// Term cap that comfortably covers the largest radius.
std::size_t default_abel_terms(std::span<const double> radii);

/// cos(k phi) and sin(k phi) for k = 0..count-1 by angle addition.
struct MultipleAngles {
  std::vector<double> cos;
  std::vector<double> sin;
};
MultipleAngles multiple_angles(Angle phi, std::size_t count);

}  // namespace trigsum
