#include "trigsum/phase.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "trigsum/errors.hpp"

namespace trigsum {

namespace {

constexpr double kResidueBound = 1e-12;

ComplexValue horner(std::span<const double> coeffs, ComplexValue z) {
  ComplexValue acc{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * z + ComplexValue{*it, 0.0};
  }
  return acc;
}

}  // namespace

PhasePair make_phase_pair(Angle phi) {
  const ComplexValue p{std::cos(phi.radians), std::sin(phi.radians)};
  return {p, conj(p), phi};
}

PhasePair half_phase_pair(Angle phi) {
  const ComplexValue root{std::cos(0.5 * phi.radians), std::sin(0.5 * phi.radians)};
  return {root, conj(root), phi};
}

PhaseValues polynomial_at_phase(std::span<const double> coeffs, Angle phi) {
  if (coeffs.empty()) throw std::invalid_argument("series_at_phase: empty coefficient list");
  const PhasePair pair = make_phase_pair(phi);
  return {horner(coeffs, pair.p), horner(coeffs, pair.q)};
}

PhaseSums series_at_phase(std::span<const double> coeffs, Angle phi) {
  const PhaseValues v = polynomial_at_phase(coeffs, phi);

  double weight = 0.0;
  for (double c : coeffs) weight += std::abs(c);
  const double bound = kResidueBound * weight;

  const ComplexValue sum = (v.at_p + v.at_q) * 0.5;
  const ComplexValue diff = (v.at_p - v.at_q) * 0.5;
  // diff / i = (diff.im, -diff.re): its imaginary part is -diff.re.
  if (std::abs(sum.im) > bound || std::abs(diff.re) > bound) {
    throw InconsistencyError("series_at_phase: imaginary residue " +
                             std::to_string(std::max(std::abs(sum.im), std::abs(diff.re))) +
                             " exceeds bound " + std::to_string(bound));
  }
  return {sum.re, diff.im};
}

PhaseSums binomial_phase_power(int n, Angle phi) {
  if (n < 0 || n > kMaxPhasePower)
    throw std::invalid_argument("binomial_phase_power: n must be in 0..64");
  const PhasePair pair = make_phase_pair(phi);
  const ComplexValue one_plus_p = ComplexValue{1.0, 0.0} + pair.p;
  const ComplexValue power = pow(one_plus_p, static_cast<unsigned>(n));
  return {power.re, power.im};
}

}  // namespace trigsum
