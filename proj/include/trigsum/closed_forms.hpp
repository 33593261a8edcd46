#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trigsum/exponent.hpp"
#include "trigsum/trig_series.hpp"

namespace trigsum {

enum class ClosedFormId { general_cos, general_sin, reduced_neg_int, quarter_turn, lambda_series };

struct ClosedFormValue {
  double value = 0.0;
  bool domain_ok = true;  // false: value carries no meaning
  ClosedFormId form_id = ClosedFormId::general_cos;
};

std::string_view to_string(ClosedFormId id);

/// 2^n cos^n(phi/2) cos(n phi/2), the sum of sum_k (n over k) cos(k phi).
///
/// Integer n: repeated multiplication, valid for every phi (periodic), with a
/// PoleError for negative n where cos(phi/2) = 0. Non-integer n: principal
/// branch exp(n ln(2 cos(phi/2))), phi restricted to [-pi, pi]; DomainError
/// outside, PoleError at +-pi for n < 0, and the limit 0 at +-pi for n > 0.
ClosedFormValue cos_closed(ExponentN n, Angle phi);

/// 2^n cos^n(phi/2) sin(n phi/2), same domain rules as cos_closed.
ClosedFormValue sin_closed(ExponentN n, Angle phi);

/// Closed form of either series.
ClosedFormValue closed_form(const SeriesSpec& spec);

/// Algebraic forms of the cosine sum for n = -m, m in 1..7:
///   m = 1: 1/2
///   m = 2: cos(phi) / (2 (1 + cos(phi)))
///   m = 3: cos(3 phi/2) / (8 cos^3(phi/2))
///   m >= 4: cos(m phi/2) / (2^m cos^m(phi/2))
ClosedFormValue reduced_neg_int(int m, Angle phi);

/// (-1 + 2 cos(phi)) / (4 (1 + cos(phi))), the rational-in-cos(phi) form for m = 3.
double reduced_neg_three_rational(Angle phi);

/// 2^(n/2) cos(n pi/4) = 1 - (n over 2) + (n over 4) - ...  Exact for integer n.
ClosedFormValue quarter_turn_sum(ExponentN n);

/// cos(lambda pi/4) / 2^(lambda/2), i.e. quarter_turn_sum(-lambda).
ClosedFormValue lambda_series_closed(double lambda);

struct CatalogEntry {
  SeriesSpec spec;
  std::string exact_form;  // radical recipe, or "divergent"
  bool divergent = false;
  long double value = 0.0L;  // evaluated recipe; +inf when divergent
};

/// Special values of the n = +-1/2 cosine series at phi in {0, pi/3, pi/2, pi}.
std::vector<CatalogEntry> special_value_catalog();

}  // namespace trigsum
