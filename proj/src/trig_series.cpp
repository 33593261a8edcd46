#include "trigsum/trig_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "trigsum/binom.hpp"
#include "trigsum/detail/double_double.hpp"
#include "trigsum/errors.hpp"

namespace trigsum {

namespace {

using detail::DoubleDouble;

// Stop summing f(r) once the tail bound falls below this fraction of the sum.
constexpr double kAbelTailTolerance = 1e-22;
// Log-log growth rate of |f(r)| against 1/(1 - r) that counts as divergence.
constexpr double kAbelGrowthSlope = 0.1;
constexpr double kMinRadiusScale = 0.05;

/// Coefficients (n over k) paired with r^k e^{ik phi}, advanced together.
template <typename Real>
class TermStream {
 public:
  TermStream(double n, Real w_re, Real w_im) : n_(n), w_re_(w_re), w_im_(w_im) {}

  Real coeff() const { return coeff_; }
  Real re() const { return z_re_; }
  Real im() const { return z_im_; }
  std::size_t index() const { return k_; }

  void advance() {
    coeff_ = detail::binom_step(coeff_, n_, k_);
    const Real re = z_re_ * w_re_ - z_im_ * w_im_;
    z_im_ = z_re_ * w_im_ + z_im_ * w_re_;
    z_re_ = re;
    ++k_;
  }

 private:
  double n_;
  Real w_re_;
  Real w_im_;
  Real coeff_ = Real(1.0);
  Real z_re_ = Real(1.0);
  Real z_im_ = Real(0.0);
  std::size_t k_ = 0;
};

TermStream<long double> unit_circle_stream(const SeriesSpec& spec) {
  const long double phi = spec.phi.radians;
  return TermStream<long double>(spec.n.value(), std::cos(phi), std::sin(phi));
}

long double pick(SeriesKind kind, long double re, long double im) {
  return kind == SeriesKind::cosine ? re : im;
}

struct RadiusSample {
  long double value = 0.0L;      // the requested series at this radius
  long double magnitude = 0.0L;  // |sum_k c_k r^k e^{ik phi}|
  long double tail_bound = 0.0L;
  std::size_t terms = 0;
};

RadiusSample sum_at_radius(const SeriesSpec& spec, double r, std::size_t max_terms) {
  const double n = spec.n.value();
  const DoubleDouble w_re = detail::dd::two_prod(r, std::cos(spec.phi.radians));
  const DoubleDouble w_im = detail::dd::two_prod(r, std::sin(spec.phi.radians));
  TermStream<DoubleDouble> stream(n, w_re, w_im);

  DoubleDouble sum_re;
  DoubleDouble sum_im;
  double r_pow = 1.0;
  RadiusSample out;
  out.tail_bound = 0.0L;
  for (std::size_t k = 0; k < max_terms; ++k) {
    sum_re += stream.coeff() * stream.re();
    sum_im += stream.coeff() * stream.im();
    out.terms = k + 1;
    stream.advance();
    r_pow *= r;

    const double c_next = std::abs(stream.coeff().hi);
    if (c_next == 0.0) {
      out.tail_bound = 0.0L;
      break;
    }
    // For j > n the ratios |n - j| / (j + 1) never exceed max(1, ratio at k + 1).
    const double j = static_cast<double>(k + 1);
    if (j <= n) continue;
    const double q = r * std::max(1.0, std::abs(n - j) / (j + 1.0));
    if (q >= 1.0) continue;
    const double tail = c_next * r_pow / (1.0 - q);
    const double scale = std::max({1.0, std::abs(sum_re.hi), std::abs(sum_im.hi)});
    out.tail_bound = tail;
    if (!std::isfinite(sum_re.hi) || !std::isfinite(sum_im.hi)) break;
    if (tail <= kAbelTailTolerance * scale) break;
  }
  const auto re = static_cast<long double>(sum_re);
  const auto im = static_cast<long double>(sum_im);
  out.value = pick(spec.kind, re, im);
  out.magnitude = std::hypot(re, im);
  return out;
}

void check_radii(std::span<const double> radii, std::size_t terms) {
  if (radii.size() < 3) throw std::invalid_argument("abel_sum: need at least three radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] < 1.0))
      throw std::invalid_argument("abel_sum: radius outside (0, 1)");
    if (i > 0 && !(radii[i] > radii[i - 1]))
      throw std::invalid_argument("abel_sum: radii must be strictly increasing");
  }
  if (terms == 0 || !(std::pow(radii.back(), static_cast<double>(terms)) < 1e-16))
    throw std::invalid_argument("abel_sum: term budget too small for the largest radius");
}

[[noreturn]] void throw_divergent(const SeriesSpec& spec, const std::string& why) {
  throw DivergenceError("series with n = " + std::to_string(spec.n.value()) + " at phi = " +
                        std::to_string(spec.phi.radians) + " is not Abel summable: " + why);
}

}  // namespace

std::string_view to_string(SeriesKind kind) {
  return kind == SeriesKind::cosine ? "cos" : "sin";
}

std::string_view to_string(ConvergenceClass c) {
  switch (c) {
    case ConvergenceClass::finite: return "finite";
    case ConvergenceClass::absolutely_convergent: return "absolutely_convergent";
    case ConvergenceClass::conditionally_convergent: return "conditionally_convergent";
    case ConvergenceClass::summable_only: return "summable_only";
    case ConvergenceClass::divergent: return "divergent";
  }
  return "?";
}

std::string_view to_string(SummationMethod m) {
  switch (m) {
    case SummationMethod::partial: return "partial";
    case SummationMethod::cesaro: return "cesaro";
    case SummationMethod::abel: return "abel";
    case SummationMethod::closed: return "closed";
  }
  return "?";
}

ConvergenceClass classify(const SeriesSpec& spec) {
  const ExponentN n = spec.n;
  if (n.is_nonnegative_integer()) return ConvergenceClass::finite;
  if (n.value() > 0.0) return ConvergenceClass::absolutely_convergent;
  // n < 0 from here on. At phi = pi every term after the first has the same sign.
  if (detail::at_pole(spec.phi)) return ConvergenceClass::divergent;
  if (n.value() > -1.0) return ConvergenceClass::conditionally_convergent;
  return ConvergenceClass::summable_only;
}

SummationResult partial_sum(const SeriesSpec& spec, std::size_t terms) {
  if (terms == 0) throw std::invalid_argument("partial_sum: terms must be positive");
  auto stream = unit_circle_stream(spec);
  long double sum = 0.0L;
  long double last = 0.0L;
  for (std::size_t k = 0; k < terms; ++k) {
    last = stream.coeff() * pick(spec.kind, stream.re(), stream.im());
    sum += last;
    stream.advance();
    if (stream.coeff() == 0.0L) {
      // Terminated row: every remaining term is zero.
      if (k + 1 < terms) last = 0.0L;
      break;
    }
  }
  return SummationResult{static_cast<double>(sum), SummationMethod::partial, terms,
                         static_cast<double>(std::abs(last)), classify(spec)};
}

SummationResult cesaro_sum(const SeriesSpec& spec, std::size_t terms) {
  if (terms < 2) throw std::invalid_argument("cesaro_sum: need at least two terms");
  auto stream = unit_circle_stream(spec);
  // Residual: largest distance of the last quarter of the running means from the final one.
  // Averaging partial sums hides oscillation, comparing means does not.
  const std::size_t window_start = terms - (terms + 3) / 4;
  long double running = 0.0L;
  long double total = 0.0L;
  std::vector<long double> means;
  means.reserve(terms - window_start);
  for (std::size_t k = 0; k < terms; ++k) {
    running += stream.coeff() * pick(spec.kind, stream.re(), stream.im());
    total += running;
    if (k >= window_start) means.push_back(total / static_cast<long double>(k + 1));
    stream.advance();
  }
  const long double mean = total / static_cast<long double>(terms);
  long double spread = 0.0L;
  for (long double m : means) spread = std::max(spread, std::abs(m - mean));

  return SummationResult{static_cast<double>(mean), SummationMethod::cesaro, terms,
                         static_cast<double>(spread), classify(spec)};
}

SummationResult abel_sum(const SeriesSpec& spec, std::size_t terms,
                         std::span<const double> radii) {
  check_radii(radii, terms);

  const std::size_t count = radii.size();
  std::vector<long double> gap(count);
  std::vector<long double> values(count);
  std::vector<long double> magnitude(count);
  std::size_t terms_used = 0;
  long double tail = 0.0L;

  for (std::size_t i = 0; i < count; ++i) {
    const RadiusSample s = sum_at_radius(spec, radii[i], terms);
    if (!std::isfinite(s.value) || !std::isfinite(s.magnitude) ||
        s.magnitude > kDivergenceThreshold) {
      throw_divergent(spec, "partial Abel mean exceeds 1e12");
    }
    gap[i] = 1.0L - static_cast<long double>(radii[i]);
    values[i] = s.value;
    magnitude[i] = s.magnitude;
    terms_used = std::max(terms_used, s.terms);
    tail = std::max(tail, s.tail_bound);
  }

  // Power-law growth towards r = 1 on the last two intervals.
  auto slope = [&](std::size_t a, std::size_t b) {
    if (magnitude[a] <= 0.0L || magnitude[b] <= 0.0L) return 0.0L;
    return std::log(magnitude[b] / magnitude[a]) / std::log(gap[a] / gap[b]);
  };
  if (slope(count - 3, count - 2) > kAbelGrowthSlope &&
      slope(count - 2, count - 1) > kAbelGrowthSlope) {
    throw_divergent(spec, "Abel means grow without bound as r -> 1");
  }

  // Neville tableau evaluated at gap = 0.
  std::vector<long double> p = values;
  long double lower_a = p[0];
  long double lower_b = p[0];
  for (std::size_t j = 1; j < count; ++j) {
    if (j == count - 1) {
      lower_a = p[0];
      lower_b = p[1];
    }
    for (std::size_t i = 0; i + j < count; ++i) {
      p[i] = (gap[i + j] * p[i] - gap[i] * p[i + 1]) / (gap[i + j] - gap[i]);
    }
  }
  const long double value = p[0];
  const long double correction = std::max(std::abs(value - lower_a), std::abs(value - lower_b));

  return SummationResult{static_cast<double>(value), SummationMethod::abel, terms_used,
                         static_cast<double>(correction + tail), classify(spec)};
}

std::vector<double> default_abel_radii(Angle phi) {
  const double scale = std::clamp(std::abs(std::cos(0.5 * phi.radians)), kMinRadiusScale, 1.0);
  std::vector<double> radii;
  radii.reserve(kBaseAbelRadii.size());
  for (double r : kBaseAbelRadii) radii.push_back(1.0 - (1.0 - r) * scale);
  return radii;
}

std::size_t default_abel_terms(std::span<const double> radii) {
  const double gap = radii.empty() ? 0.01 : 1.0 - radii.back();
  // e^{-200}: room for polynomial coefficient growth on top of r^N < 1e-16.
  const auto needed = static_cast<std::size_t>(std::ceil(200.0 / gap));
  return std::max(needed, kDefaultTermBudget);
}

SummationResult abel_sum(const SeriesSpec& spec) {
  const std::vector<double> radii = default_abel_radii(spec.phi);
  return abel_sum(spec, default_abel_terms(radii), radii);
}

MultipleAngles multiple_angles(Angle phi, std::size_t count) {
  MultipleAngles out;
  out.cos.reserve(count);
  out.sin.reserve(count);
  const long double c = std::cos(static_cast<long double>(phi.radians));
  const long double s = std::sin(static_cast<long double>(phi.radians));
  long double re = 1.0L;
  long double im = 0.0L;
  for (std::size_t k = 0; k < count; ++k) {
    out.cos.push_back(static_cast<double>(re));
    out.sin.push_back(static_cast<double>(im));
    const long double next = re * c - im * s;
    im = re * s + im * c;
    re = next;
  }
  return out;
}

}  // namespace trigsum
