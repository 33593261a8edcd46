#pragma once

#include <span>

#include "trigsum/exponent.hpp"

namespace trigsum {

/// Complex number as a plain (re, im) pair. Arithmetic is spelled out here so
/// that every rounding site in the phase-pair evaluation is visible.
template <typename Real>
struct Complex {
  Real re{};
  Real im{};

  friend constexpr Complex operator+(Complex a, Complex b) { return {a.re + b.re, a.im + b.im}; }
  friend constexpr Complex operator-(Complex a, Complex b) { return {a.re - b.re, a.im - b.im}; }
  friend constexpr Complex operator*(Complex a, Complex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr Complex operator*(Complex a, Real s) { return {a.re * s, a.im * s}; }
  friend constexpr bool operator==(Complex, Complex) = default;
};

template <typename Real>
constexpr Complex<Real> conj(Complex<Real> z) {
  return {z.re, -z.im};
}

template <typename Real>
Complex<Real> pow(Complex<Real> base, unsigned e) {
  Complex<Real> acc{Real(1), Real(0)};
  while (e != 0) {
    if (e & 1U) acc = acc * base;
    base = base * base;
    e >>= 1U;
  }
  return acc;
}

using ComplexValue = Complex<double>;

/// p = cos(phi) + i sin(phi) and its conjugate q, so that p q = 1.
struct PhasePair {
  ComplexValue p;
  ComplexValue q;
  Angle phi;
};

PhasePair make_phase_pair(Angle phi);

/// Principal square roots of p and q: the half-angle points (cos(phi/2), +-sin(phi/2)).
PhasePair half_phase_pair(Angle phi);

struct PhaseSums {
  double cos_sum = 0.0;
  double sin_sum = 0.0;
};

/// Delta(z) = sum_k coeffs[k] z^k evaluated at p and q by Horner's rule.
/// cos_sum = (Delta(p) + Delta(q)) / 2, sin_sum = (Delta(p) - Delta(q)) / 2i.
/// Throws InconsistencyError if either combination keeps an imaginary residue
/// above 1e-12 * sum |coeffs|; std::invalid_argument on empty input.
PhaseSums series_at_phase(std::span<const double> coeffs, Angle phi);

/// Delta(p) and Delta(q) themselves, for conjugate-symmetry checks.
struct PhaseValues {
  ComplexValue at_p;
  ComplexValue at_q;
};
PhaseValues polynomial_at_phase(std::span<const double> coeffs, Angle phi);

inline constexpr int kMaxPhasePower = 64;

/// (1 + p)^n by binary exponentiation, 0 <= n <= 64. Real and imaginary parts
/// are the cosine and sine series sums.
PhaseSums binomial_phase_power(int n, Angle phi);

}  // namespace trigsum
