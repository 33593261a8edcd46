#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "trigsum/binom.hpp"
#include "trigsum/closed_forms.hpp"
#include "trigsum/phase.hpp"

using namespace trigsum;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Angle> grid() {
  std::vector<Angle> out;
  for (int d = -178; d <= 178; d += 1) out.push_back(Angle::from_degrees(d));
  return out;
}

double abs_sum(const std::vector<double>& c) {
  double s = 0.0;
  for (double x : c) s += std::abs(x);
  return s;
}

}  // namespace

TEST(PhasePair, Examples) {
  const PhasePair zero = make_phase_pair(Angle{0.0});
  EXPECT_EQ(zero.p, (ComplexValue{1.0, 0.0}));
  EXPECT_EQ(zero.q, (ComplexValue{1.0, 0.0}));

  const PhasePair axis = make_phase_pair(Angle{kPi / 2});
  EXPECT_NEAR(axis.p.re, 0.0, 1e-16);
  EXPECT_EQ(axis.p.im, 1.0);
  EXPECT_NEAR(axis.q.re, 0.0, 1e-16);
  EXPECT_EQ(axis.q.im, -1.0);

  const PhasePair third = make_phase_pair(Angle{kPi / 3});
  const ComplexValue pq = third.p * third.q;
  EXPECT_NEAR(pq.re, 1.0, 1e-15);
  EXPECT_NEAR(pq.im, 0.0, 1e-15);
}

TEST(PhasePair, UnitModulusAndConjugation) {
  for (int i = 0; i < 1000; ++i) {
    const Angle phi{oracle::uniform(-10.0, 10.0)};
    const PhasePair pair = make_phase_pair(phi);
    EXPECT_NEAR(std::hypot(pair.p.re, pair.p.im), 1.0, 1e-15);
    EXPECT_EQ(pair.q, conj(pair.p));
    EXPECT_EQ(conj(conj(pair.p)), pair.p);
    const ComplexValue pq = pair.p * pair.q;
    EXPECT_NEAR(pq.re, 1.0, 1e-15);
    EXPECT_EQ(pq.im, 0.0);
  }
}

TEST(SeriesAtPhase, Examples) {
  const std::vector<double> one = {1.0};
  for (double phi : {-2.0, 0.0, 1.3}) {
    const PhaseSums s = series_at_phase(one, Angle{phi});
    EXPECT_EQ(s.cos_sum, 1.0);
    EXPECT_EQ(s.sin_sum, 0.0);
  }
  const std::vector<double> row2 = {1, 2, 1};
  EXPECT_NEAR(series_at_phase(row2, Angle{kPi / 3}).cos_sum, 1.5, 1e-15);
  const std::vector<double> row3 = {1, 3, 3, 1};
  EXPECT_NEAR(series_at_phase(row3, Angle{kPi / 2}).cos_sum, -2.0, 1e-15);
  EXPECT_THROW(series_at_phase(std::vector<double>{}, Angle{0.0}), std::invalid_argument);
}

TEST(SeriesAtPhase, MatchesDirectTrigSums) {
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> coeffs(1 + trial % 17);
    for (double& c : coeffs) c = oracle::uniform(-3.0, 3.0);
    const double phi = oracle::uniform(-kPi, kPi);
    std::vector<long double> lc(coeffs.begin(), coeffs.end());
    const PhaseSums s = series_at_phase(coeffs, Angle{phi});
    const double tol = 1e-14 * (1.0 + abs_sum(coeffs));
    EXPECT_NEAR(s.cos_sum, static_cast<double>(oracle::direct_series(lc, phi, true)), tol);
    EXPECT_NEAR(s.sin_sum, static_cast<double>(oracle::direct_series(lc, phi, false)), tol);
  }
}

TEST(SeriesAtPhase, ConjugateReality) {
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> coeffs(1 + trial % 25);
    for (double& c : coeffs) c = oracle::uniform(-100.0, 100.0);
    const PhaseValues v = polynomial_at_phase(coeffs, Angle{oracle::uniform(-kPi, kPi)});
    const ComplexValue gap = v.at_q - conj(v.at_p);
    EXPECT_LE(std::hypot(gap.re, gap.im), 1e-13 * abs_sum(coeffs));
  }
}

TEST(BinomialPhasePower, Examples) {
  for (double phi : {-1.0, 0.0, 2.0}) {
    const PhaseSums zero = binomial_phase_power(0, Angle{phi});
    EXPECT_EQ(zero.cos_sum, 1.0);
    EXPECT_EQ(zero.sin_sum, 0.0);
    const PhaseSums one = binomial_phase_power(1, Angle{phi});
    EXPECT_EQ(one.cos_sum, 1.0 + std::cos(phi));
    EXPECT_EQ(one.sin_sum, std::sin(phi));
  }
  // (1 + i)^4 = -4 exactly up to the rounding of cos(pi/2).
  const PhaseSums four = binomial_phase_power(4, Angle{kPi / 2});
  EXPECT_NEAR(four.cos_sum, -4.0, 1e-14);
  EXPECT_NEAR(four.sin_sum, 0.0, 1e-14);
  EXPECT_THROW(binomial_phase_power(-1, Angle{0.0}), std::invalid_argument);
  EXPECT_THROW(binomial_phase_power(65, Angle{0.0}), std::invalid_argument);
}

TEST(BinomialPhasePower, FourthPowerOfOnePlusIByHand) {
  // (1 + i)^2 = 2i, (2i)^2 = -4.
  const ComplexValue one_plus_i{1.0, 1.0};
  const ComplexValue sq = one_plus_i * one_plus_i;
  EXPECT_EQ(sq, (ComplexValue{0.0, 2.0}));
  EXPECT_EQ(sq * sq, (ComplexValue{-4.0, 0.0}));
  EXPECT_EQ(pow(one_plus_i, 4U), (ComplexValue{-4.0, 0.0}));
}

TEST(PhaseIdentities, HalfAngleFactorization) {
  // 1 + p = (sqrt p + sqrt q) sqrt p on the principal branch.
  for (Angle phi : grid()) {
    const PhasePair pair = make_phase_pair(phi);
    const PhasePair root = half_phase_pair(phi);
    const ComplexValue lhs = ComplexValue{1.0, 0.0} + pair.p;
    const ComplexValue rhs = (root.p + root.q) * root.p;
    EXPECT_NEAR(lhs.re, rhs.re, 1e-13);
    EXPECT_NEAR(lhs.im, rhs.im, 1e-13);
    // sqrt p + sqrt q = 2 cos(phi/2) > 0.
    EXPECT_GT((root.p + root.q).re, 0.0);
  }
}

TEST(PhaseIdentities, Moments) {
  for (Angle phi : grid()) {
    const PhasePair root = half_phase_pair(phi);
    for (unsigned twice_alpha = 1; twice_alpha <= 16; ++twice_alpha) {
      const double alpha = twice_alpha / 2.0;
      const ComplexValue pa = pow(root.p, twice_alpha);
      const ComplexValue qa = pow(root.q, twice_alpha);
      const ComplexValue sum = pa + qa;
      const ComplexValue diff = pa - qa;
      EXPECT_NEAR(sum.re, 2.0 * std::cos(alpha * phi.radians), 1e-12);
      EXPECT_NEAR(sum.im, 0.0, 1e-12);
      EXPECT_NEAR(diff.re, 0.0, 1e-12);
      EXPECT_NEAR(diff.im, 2.0 * std::sin(alpha * phi.radians), 1e-12);
    }
  }
}

TEST(PhaseIdentities, PathAgreement) {
  for (int n = 0; n <= 20; ++n) {
    const auto row = binom_prefix(n, static_cast<std::size_t>(n) + 1);
    const double tol = 1e-12 * std::ldexp(1.0, n);
    for (Angle phi : grid()) {
      const PhaseSums power = binomial_phase_power(n, phi);
      const PhaseSums poly = series_at_phase(row, phi);
      EXPECT_NEAR(power.cos_sum, poly.cos_sum, tol);
      EXPECT_NEAR(power.sin_sum, poly.sin_sum, tol);
      EXPECT_NEAR(power.cos_sum, cos_closed(n, phi).value, tol);
      EXPECT_NEAR(power.sin_sum, sin_closed(n, phi).value, tol);
    }
  }
}
