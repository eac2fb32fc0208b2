#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "sinest/error.hpp"
#include "sinest/model.hpp"
#include "test_support.hpp"

namespace sinest {
namespace {

using testing::kPhaseExact;
using testing::worked_example;

TEST(WrapPhase, MapsIntoHalfOpenInterval) {
  EXPECT_DOUBLE_EQ(wrap_phase(0.25), 0.25);
  EXPECT_DOUBLE_EQ(wrap_phase(kPi), -kPi);
  EXPECT_DOUBLE_EQ(wrap_phase(-kPi), -kPi);
  EXPECT_NEAR(wrap_phase(3.0 * kPi + 0.1), -kPi + 0.1, 1e-12);
  EXPECT_NEAR(wrap_phase(-7.0), -7.0 + kTwoPi, 1e-12);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> any(-100.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = any(rng);
    const double w = wrap_phase(x);
    ASSERT_GE(w, -kPi);
    ASSERT_LT(w, kPi);
    ASSERT_NEAR(std::sin(w), std::sin(x), 1e-9);
    ASSERT_NEAR(std::cos(w), std::cos(x), 1e-9);
  }
}

TEST(SinusoidParams, DerivedQuantities) {
  const auto p = worked_example();
  EXPECT_NEAR(p.omega(), 0.3141592653589793, 1e-15);
  EXPECT_DOUBLE_EQ(p.period(), 20.0);
  EXPECT_NEAR(p.time_delay(), 0.6109 / p.omega(), 1e-15);
  EXPECT_GT(p.time_delay(), 0.0);
  EXPECT_LT(SinusoidParams(1.0, 0.05, -0.3).time_delay(), 0.0);
}

TEST(SinusoidParams, WrapsPhaseInsteadOfRejecting) {
  EXPECT_NEAR(SinusoidParams(1.0, 1.0, kTwoPi + 0.5).phase_rad(), 0.5, 1e-12);
  EXPECT_DOUBLE_EQ(SinusoidParams(1.0, 1.0, kPi).phase_rad(), -kPi);
}

TEST(SinusoidParams, RejectsNonPositiveAmplitudeOrFrequency) {
  EXPECT_THROW(SinusoidParams(0.0, 1.0, 0.0), InvalidArgument);
  EXPECT_THROW(SinusoidParams(-1.0, 1.0, 0.0), InvalidArgument);
  EXPECT_THROW(SinusoidParams(1.0, 0.0, 0.0), InvalidArgument);
  EXPECT_THROW(SinusoidParams(1.0, NAN, 0.0), InvalidArgument);
}

TEST(TimeSeries, Invariants) {
  EXPECT_THROW(TimeSeries(0.0, 1.0, {1.0}), InvalidArgument);
  EXPECT_THROW(TimeSeries(0.0, 0.0, {1.0, 2.0}), InvalidArgument);
  EXPECT_THROW(TimeSeries(0.0, -1.0, {1.0, 2.0}), InvalidArgument);
  const TimeSeries s(2.0, 0.5, {1.0, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(s.time(2), 3.0);
  EXPECT_DOUBLE_EQ(s.mean(), 2.0);
}

TEST(Eval, WorkedExampleValues) {
  const auto p = worked_example();
  EXPECT_NEAR(eval(p, 0.0), 1.1472, 1e-3);
  EXPECT_EQ(eval(SinusoidParams(2.0, 0.05, 0.0), 0.0), 0.0);
  EXPECT_NEAR(eval(p, 8.0 + 1.0 / 18.0), 0.0, 1e-3);
}

TEST(Eval, ShiftByTimeDelayGivesPrimitiveSinusoid) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> amp(0.1, 10.0), freq(0.001, 2.0), phase(-kPi, kPi), t(-50.0, 50.0);
  for (int i = 0; i < 200; ++i) {
    const SinusoidParams p(amp(rng), freq(rng), phase(rng));
    for (int j = 0; j < 20; ++j) {
      const double tt = t(rng);
      ASSERT_NEAR(eval(p, tt - p.time_delay()), p.amplitude() * std::sin(p.omega() * tt),
                  1e-12 * std::max(1.0, p.amplitude() * p.omega() * std::abs(tt)));
    }
  }
}

TEST(Eval, OnePeriodIntegralVanishes) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> amp(0.1, 5.0), freq(0.01, 1.0), phase(-kPi, kPi);
  for (int i = 0; i < 50; ++i) {
    const SinusoidParams p(amp(rng), freq(rng), phase(rng));
    const double t0 = landmarks(p).t0.time;
    const double integral = testing::quadrature([&](double t) { return eval(p, t); }, t0, t0 + p.period());
    ASSERT_NEAR(integral, 0.0, 1e-9);
  }
}

TEST(GaussianSource, DeterministicPerSeed) {
  GaussianSource a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const double x = a.next();
    ASSERT_EQ(x, b.next());
    differs |= x != c.next();
  }
  EXPECT_TRUE(differs);
}

TEST(GaussianSource, FirstMoments) {
  GaussianSource g(2024);
  constexpr int kDraws = 200000;
  double sum = 0.0, sum_sq = 0.0, sum_4 = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const double x = g.next();
    sum += x;
    sum_sq += x * x;
    sum_4 += x * x * x * x;
  }
  const double mean = sum / kDraws;
  const double var = sum_sq / kDraws - mean * mean;
  // 5-sigma bands for the sample moments.
  EXPECT_NEAR(mean, 0.0, 5.0 / std::sqrt(kDraws));
  EXPECT_NEAR(var, 1.0, 5.0 * std::sqrt(2.0 / kDraws));
  EXPECT_NEAR(sum_4 / kDraws, 3.0, 5.0 * std::sqrt(96.0 / kDraws));
}

TEST(Synthesize, NoiseFreeEqualsEvalExactly) {
  const auto p = worked_example();
  const auto s = synthesize(p, NoiseSpec{NoiseKind::gaussian, 0.0, 9}, 100, 0.25, -3.0);
  for (std::size_t i = 0; i < s.size(); ++i) ASSERT_EQ(s[i], eval(p, -3.0 + 0.25 * static_cast<double>(i)));
  EXPECT_DOUBLE_EQ(s.time(99), -3.0 + 0.25 * 99);
}

TEST(Synthesize, SameSeedSameSeries) {
  const auto a = testing::worked_example_series(0.5, 17);
  const auto b = testing::worked_example_series(0.5, 17);
  const auto c = testing::worked_example_series(0.5, 18);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i], b[i]);
  EXPECT_NE(a[0], c[0]);
}

TEST(Synthesize, WorkedExampleMeanIsNearZero) {
  // Five whole periods, so the signal contributes nothing; the noise mean has
  // sd 0.05 and |mean| < 0.15 is a 3-sigma band.
  int inside = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    inside += std::abs(testing::worked_example_series(0.5, seed).mean()) < 0.15;
  }
  EXPECT_GE(inside, 49);
}

TEST(Synthesize, RejectsBadGrid) {
  const auto p = worked_example();
  EXPECT_THROW(synthesize(p, {}, 1), InvalidArgument);
  EXPECT_THROW(synthesize(p, {}, 10, 0.0), InvalidArgument);
  EXPECT_THROW(synthesize(p, {}, 10, -1.0), InvalidArgument);
  EXPECT_THROW(synthesize(p, NoiseSpec{NoiseKind::gaussian, -1.0, 0}, 10), InvalidArgument);
}

TEST(Landmarks, StructuralTableOfTimeDelayedSinusoid) {
  const SinusoidParams p(2.0, 0.05, kPhaseExact);
  const auto t = landmarks(p);
  EXPECT_NEAR(t.t0.time, -(1.0 + 17.0 / 18.0), 1e-9);
  EXPECT_NEAR(t.t_half_pi.time, 3.0 + 1.0 / 18.0, 1e-9);
  EXPECT_NEAR(t.t_pi.time, 8.0 + 1.0 / 18.0, 1e-9);
  EXPECT_NEAR(t.t_three_half_pi.time, 13.0 + 1.0 / 18.0, 1e-9);
  EXPECT_NEAR(t.t_two_pi.time, 18.0 + 1.0 / 18.0, 1e-9);
  EXPECT_NEAR(t.t_five_half_pi.time, 23.0 + 1.0 / 18.0, 1e-9);

  EXPECT_NEAR(t.t_half_pi.value, 2.0, 1e-12);
  EXPECT_NEAR(t.t_three_half_pi.value, -2.0, 1e-12);
  EXPECT_NEAR(t.t_pi.value, 0.0, 1e-12);
  EXPECT_NEAR(t.value_at_origin, 1.1472, 1e-4);

  EXPECT_NEAR(t.rise_to_first_zero, 5.0, 1e-9);
  EXPECT_NEAR(t.half_cycle, 10.0, 1e-9);
  EXPECT_NEAR(t.rise_to_next_peak, 5.0, 1e-9);
  EXPECT_NEAR(t.period, 20.0, 1e-9);
}

TEST(Landmarks, PrimitiveSinusoid) {
  const SinusoidParams p(1.0, 0.37, 0.0);
  const auto t = landmarks(p);
  EXPECT_EQ(t.t0.time, 0.0);
  EXPECT_NEAR(t.t_two_pi.time, p.period(), 1e-12);
}

TEST(Landmarks, TimeAheadSinusoidUsesT0ToT2Pi) {
  const SinusoidParams p(1.5, 0.05, -kPhaseExact);
  const auto t = landmarks(p);
  EXPECT_GT(t.t0.time, 0.0);
  EXPECT_NEAR(t.t0.time, -p.time_delay(), 1e-12);
  EXPECT_NEAR(t.period, t.t_two_pi.time - t.t0.time, 1e-12);
  EXPECT_NEAR(t.period, 20.0, 1e-9);
}

TEST(Landmarks, PhaseAtEachLandmarkIsMultipleOfPi) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> freq(0.01, 3.0), phase(-kPi, kPi);
  for (int i = 0; i < 200; ++i) {
    const SinusoidParams p(1.0, freq(rng), phase(rng));
    for (double k : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5}) {
      ASSERT_NEAR(p.omega() * landmark_time(p, k) + p.phase_rad(), k * kPi, 1e-12);
    }
  }
}

}  // namespace
}  // namespace sinest
