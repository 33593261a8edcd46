#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "trigsum/closed_forms.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/trig_series.hpp"

using namespace trigsum;

namespace {

constexpr double kPi = std::numbers::pi;

SeriesSpec cos_spec(double n, double phi) { return {SeriesKind::cosine, ExponentN(n), Angle{phi}}; }
SeriesSpec sin_spec(double n, double phi) { return {SeriesKind::sine, ExponentN(n), Angle{phi}}; }

}  // namespace

TEST(PartialSum, Examples) {
  EXPECT_EQ(partial_sum(cos_spec(2, 0.0), 3).value, 4.0);
  EXPECT_NEAR(partial_sum(cos_spec(4, kPi / 2), 5).value, -4.0, 1e-14);
  // 3*sin(90deg) + 3*sin(180deg) + sin(270deg) = 2; also 8 cos^3(45deg) sin(135deg).
  EXPECT_NEAR(partial_sum(sin_spec(3, kPi / 2), 4).value, 2.0, 1e-14);
}

TEST(PartialSum, ReportsLastTermAndClass) {
  const auto r = partial_sum(cos_spec(-0.5, 0.0), 3);
  // 1 - 1/2 + 3/8
  EXPECT_NEAR(r.value, 0.875, 1e-16);
  EXPECT_NEAR(r.residual_estimate, 0.375, 1e-16);
  EXPECT_EQ(r.terms_used, 3U);
  EXPECT_EQ(r.method, SummationMethod::partial);
  EXPECT_EQ(r.convergence, ConvergenceClass::conditionally_convergent);
  EXPECT_THROW(partial_sum(cos_spec(1, 0.0), 0), std::invalid_argument);
}

TEST(PartialSum, MatchesDirectEvaluation) {
  for (double n : {0.5, -0.5, 2.25, -1.5, 6.0}) {
    for (double phi : {-2.9, -1.0, 0.3, 1.7, 3.0}) {
      const auto coeffs = oracle::product_coefficients(n, 40);
      for (bool cosine : {true, false}) {
        const SeriesSpec spec = cosine ? cos_spec(n, phi) : sin_spec(n, phi);
        const long double ref = oracle::direct_series(coeffs, phi, cosine);
        EXPECT_NEAR(partial_sum(spec, 40).value, static_cast<double>(ref),
                    1e-13 * (1.0 + std::abs(static_cast<double>(ref))))
            << n << " " << phi;
      }
    }
  }
}

TEST(PartialSum, TerminatesForNonnegativeIntegers) {
  for (int n = 0; n <= 12; ++n) {
    for (double phi : {-3.0, -0.7, 0.0, 0.4, 2.2}) {
      for (const SeriesSpec& spec : {cos_spec(n, phi), sin_spec(n, phi)}) {
        const double exact_len = partial_sum(spec, n + 1).value;
        for (std::size_t more : {n + 2, n + 10, n + 1000}) {
          const auto r = partial_sum(spec, more);
          EXPECT_EQ(r.value, exact_len);
          EXPECT_EQ(r.residual_estimate, 0.0);
        }
      }
    }
  }
}

TEST(PartialSum, ParityIsExact) {
  for (int trial = 0; trial < 500; ++trial) {
    const double n = oracle::uniform(-3.0, 5.0);
    const double phi = oracle::uniform(-kPi, kPi);
    const std::size_t terms = 1 + static_cast<std::size_t>(oracle::uniform(0.0, 200.0));
    EXPECT_EQ(partial_sum(sin_spec(n, phi), terms).value,
              -partial_sum(sin_spec(n, -phi), terms).value);
    EXPECT_EQ(partial_sum(cos_spec(n, phi), terms).value,
              partial_sum(cos_spec(n, -phi), terms).value);
  }
}

TEST(MultipleAngles, AgreeWithDirectEvaluation) {
  std::vector<double> angles = {0.0, 1e-9, 1e-6, 1e-3, 0.5, 1.0, kPi / 3, 2.0, 3.0, kPi - 1e-6, kPi};
  for (int i = 0; i < 20; ++i) angles.push_back(oracle::uniform(-kPi, kPi));
  constexpr std::size_t kCount = 10001;
  for (double phi : angles) {
    const MultipleAngles m = multiple_angles(Angle{phi}, kCount);
    double worst = 0.0;
    for (std::size_t k = 0; k < kCount; ++k) {
      const long double arg = static_cast<long double>(k) * static_cast<long double>(phi);
      worst = std::max(worst, std::abs(m.cos[k] - static_cast<double>(std::cos(arg))));
      worst = std::max(worst, std::abs(m.sin[k] - static_cast<double>(std::sin(arg))));
    }
    EXPECT_LE(worst, 1e-11) << "phi=" << phi;
  }
}

TEST(CesaroSum, Examples) {
  const auto grandi = cesaro_sum(cos_spec(-1, kPi / 2), 400);
  EXPECT_NEAR(grandi.value, 0.5, 0.01);
  EXPECT_EQ(grandi.method, SummationMethod::cesaro);
  EXPECT_EQ(cesaro_sum(cos_spec(0, 0.77), 10).value, 1.0);
  EXPECT_EQ(cesaro_sum(cos_spec(0, 0.77), 10).residual_estimate, 0.0);
  EXPECT_THROW(cesaro_sum(cos_spec(-1, 0.0), 1), std::invalid_argument);
}

TEST(CesaroSum, ResidualTracksTheErrorWhenSummable) {
  for (double phi : {0.3, 1.0, kPi / 2, 2.5}) {
    const double closed = cos_closed(-1, Angle{phi}).value;
    const auto r = cesaro_sum(cos_spec(-1, phi), 4000);
    const double err = std::abs(r.value - closed);
    EXPECT_LE(err, 2.0 * r.residual_estimate) << phi;
    EXPECT_LT(r.residual_estimate, 1e-2) << phi;
  }
}

TEST(CesaroSum, FirstOrderMeansOscillateForNMinusTwo) {
  // 1 - 3 + 5 - 7 + ... has partial sums 1,1,-2,-2,3,3,...; over 2m terms they add
  // up to 2(1 - 2 + 3 - ... +- m), so the means swing between -1/2 and about +1/2.
  const auto at_2000 = cesaro_sum(cos_spec(-2, kPi / 2), 2000);
  EXPECT_NEAR(at_2000.value, -1000.0 / 2000.0, 1e-12);
  EXPECT_GT(at_2000.residual_estimate, 0.9);
  EXPECT_NEAR(cesaro_sum(cos_spec(-2, kPi / 2), 2002).value, 1002.0 / 2002.0, 1e-12);
  EXPECT_NEAR(abel_sum(cos_spec(-2, kPi / 2)).value, 0.0, 1e-8);
}

TEST(CesaroSum, ConvergesForConditionallyConvergentSeries) {
  const SeriesSpec spec = cos_spec(-0.5, 2.0);
  const double closed = cos_closed(-0.5, Angle{2.0}).value;
  EXPECT_NEAR(cesaro_sum(spec, 20000).value, closed, 1e-3);
}

TEST(AbelSum, Examples) {
  EXPECT_NEAR(abel_sum(cos_spec(-0.5, 0.0)).value, 0.70710678118654752, 1e-9);
  EXPECT_THROW(abel_sum(cos_spec(-0.5, kPi)), DivergenceError);
  EXPECT_NEAR(abel_sum(cos_spec(-3, kPi / 2)).value, -0.25, 1e-6);
}

TEST(AbelSum, ResultFields) {
  const auto r = abel_sum(cos_spec(-1, 1.0));
  EXPECT_NEAR(r.value, 0.5, 1e-10);
  EXPECT_EQ(r.method, SummationMethod::abel);
  EXPECT_GT(r.terms_used, 0U);
  EXPECT_GE(r.residual_estimate, 0.0);
  EXPECT_LT(r.residual_estimate, 1e-6);
  EXPECT_EQ(r.convergence, ConvergenceClass::summable_only);
}

TEST(AbelSum, RejectsBadRadii) {
  const SeriesSpec spec = cos_spec(-1, 1.0);
  const std::vector<double> two = {0.9, 0.95};
  const std::vector<double> outside = {0.9, 0.95, 1.0};
  const std::vector<double> zero = {0.0, 0.5, 0.9};
  const std::vector<double> unsorted = {0.9, 0.95, 0.93};
  const std::vector<double> repeated = {0.9, 0.95, 0.95};
  const std::vector<double> good = {0.9, 0.95, 0.99};
  EXPECT_THROW(abel_sum(spec, 100000, two), std::invalid_argument);
  EXPECT_THROW(abel_sum(spec, 100000, outside), std::invalid_argument);
  EXPECT_THROW(abel_sum(spec, 100000, zero), std::invalid_argument);
  EXPECT_THROW(abel_sum(spec, 100000, unsorted), std::invalid_argument);
  EXPECT_THROW(abel_sum(spec, 100000, repeated), std::invalid_argument);
  // 0.99^3000 ~ 8e-14 is not below 1e-16.
  EXPECT_THROW(abel_sum(spec, 3000, good), std::invalid_argument);
  EXPECT_NO_THROW(abel_sum(spec, 4000, good));
}

TEST(AbelSum, DivergenceSignals) {
  // |f(r)| = (1 - r)^-20 passes 1e12 already at r = 0.9.
  EXPECT_THROW(abel_sum(cos_spec(-20, kPi)), DivergenceError);
  // Power-law growth without reaching the threshold.
  EXPECT_THROW(abel_sum(cos_spec(-0.25, kPi)), DivergenceError);
  EXPECT_THROW(abel_sum(cos_spec(-1, -kPi)), DivergenceError);
  EXPECT_THROW(abel_sum(cos_spec(-2.5, 3 * kPi)), DivergenceError);
  // Near the pole but off it: large, finite, summable.
  const double phi = Angle::from_degrees(175.0).radians;
  EXPECT_NEAR(abel_sum(cos_spec(-0.5, phi)).value, cos_closed(-0.5, Angle{phi}).value, 1e-6);
}

TEST(AbelSum, AgreesWithPartialSumsOnConvergentSeries) {
  const std::vector<double> exponents = {0.0, 1.0, 3.0, 7.0, 10.0, 0.5, 1.5, 2.5, 4.75};
  for (double n : exponents) {
    for (double deg : {-160.0, -120.0, -45.0, 0.0, 10.0, 90.0, 150.0}) {
      const double phi = Angle::from_degrees(deg).radians;
      for (const SeriesSpec& spec : {cos_spec(n, phi), sin_spec(n, phi)}) {
        const ConvergenceClass c = classify(spec);
        ASSERT_TRUE(c == ConvergenceClass::finite || c == ConvergenceClass::absolutely_convergent);
        const double reference = partial_sum(spec, 1000000).value;
        const double abel = abel_sum(spec).value;
        EXPECT_NEAR(abel, reference, 1e-8 * (1.0 + std::abs(reference)))
            << "n=" << n << " deg=" << deg << " kind=" << to_string(spec.kind);
      }
    }
  }
}

TEST(AbelSum, SineSeries) {
  for (double n : {-1.0, -2.0, -0.5, 0.5, -3.5}) {
    for (double deg : {-100.0, 30.0, 140.0}) {
      const Angle phi = Angle::from_degrees(deg);
      const double expected = sin_closed(n, phi).value;
      EXPECT_NEAR(abel_sum(sin_spec(n, phi.radians)).value, expected, 1e-7 * (1 + std::abs(expected)))
          << n << " " << deg;
    }
  }
}

TEST(DefaultAbelRadii, Schedule) {
  const auto base = default_abel_radii(Angle{0.0});
  ASSERT_EQ(base.size(), kBaseAbelRadii.size());
  for (std::size_t i = 0; i < base.size(); ++i) EXPECT_NEAR(base[i], kBaseAbelRadii[i], 1e-15);

  for (double deg : {-179.0, -90.0, 45.0, 170.0, 180.0, 540.0}) {
    const auto radii = default_abel_radii(Angle::from_degrees(deg));
    for (std::size_t i = 0; i < radii.size(); ++i) {
      EXPECT_GT(radii[i], 0.0);
      EXPECT_LT(radii[i], 1.0);
      if (i > 0) {
        EXPECT_GT(radii[i], radii[i - 1]);
      }
    }
    EXPECT_LT(std::pow(radii.back(), static_cast<double>(default_abel_terms(radii))), 1e-16);
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(cos_spec(5, 1.0)), ConvergenceClass::finite);
  EXPECT_EQ(classify(cos_spec(-0.5, kPi)), ConvergenceClass::divergent);
  // All terms after the first are negative with |(1/2 over k)| ~ k^-3/2.
  EXPECT_EQ(classify(cos_spec(0.5, kPi)), ConvergenceClass::absolutely_convergent);
}

TEST(Classify, Rules) {
  EXPECT_EQ(classify(cos_spec(0, kPi)), ConvergenceClass::finite);
  EXPECT_EQ(classify(sin_spec(3, 0.2)), ConvergenceClass::finite);
  EXPECT_EQ(classify(cos_spec(2.5, 0.2)), ConvergenceClass::absolutely_convergent);
  EXPECT_EQ(classify(cos_spec(-0.5, 0.0)), ConvergenceClass::conditionally_convergent);
  EXPECT_EQ(classify(cos_spec(-0.9, 2.0)), ConvergenceClass::conditionally_convergent);
  EXPECT_EQ(classify(cos_spec(-0.5, -kPi)), ConvergenceClass::divergent);
  EXPECT_EQ(classify(cos_spec(-0.5, 3 * kPi)), ConvergenceClass::divergent);
  EXPECT_EQ(classify(cos_spec(-1.5, kPi)), ConvergenceClass::divergent);
  EXPECT_EQ(classify(cos_spec(-2, kPi)), ConvergenceClass::divergent);
  EXPECT_EQ(classify(cos_spec(-1, 0.0)), ConvergenceClass::summable_only);
  EXPECT_EQ(classify(cos_spec(-3, 0.0)), ConvergenceClass::summable_only);
  EXPECT_EQ(classify(cos_spec(-1.5, 0.0)), ConvergenceClass::summable_only);
  EXPECT_EQ(classify(cos_spec(-2, 1.0)), ConvergenceClass::summable_only);
  EXPECT_EQ(classify(cos_spec(-1, kPi / 2)), ConvergenceClass::summable_only);
}
