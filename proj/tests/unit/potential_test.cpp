#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "polar/potential.hpp"
#include "test_support.hpp"

namespace {

using namespace polar;
using polar::testing::arc_scan;
using polar::testing::dense_scan;
using polar::testing::random_config;
using polar::testing::rel_diff;
using polar::testing::sup_distance_from_equal;
constexpr double pi = std::numbers::pi;

TEST(PotentialValue, TwoPointRiesz) {
  // chords from i to +-1 are sqrt(2)
  EXPECT_NEAR(potential_value(riesz_kernel(2), equally_spaced(2), pi / 2), 1.0, 1e-15);
}

TEST(PotentialValue, NodeCoincidenceIsInfinite) {
  EXPECT_TRUE(std::isinf(potential_value(riesz_kernel(2), Configuration::from_unordered({0.0}), 0.0)));
}

TEST(PotentialValue, MultisetCountsMultiplicity) {
  const auto k = riesz_kernel(2);
  const auto doubled = Configuration::from_unordered({0.0, 0.0});
  EXPECT_DOUBLE_EQ(potential_value(k, doubled, 2.0),
                   2 * potential_value(k, Configuration::from_unordered({0.0}), 2.0));
}

TEST(PotentialValue, LogRootsOfUnityOracle) {
  // prod |z - z_k| = |z^n - 1| for the n-th roots of unity
  const Kernel k = log_kernel();
  for (int n = 1; n <= 64; ++n) {
    const auto c = equally_spaced(n);
    const double z = pi / n;  // z^n = -1
    EXPECT_NEAR(potential_value(k, c, z), -std::log(2.0), 1e-12) << n;
    const double w = 0.377;
    const double oracle = -std::log(std::abs(std::pow(std::polar(1.0, w), n) - 1.0));
    EXPECT_NEAR(potential_value(k, c, w), oracle, 1e-11) << n;
  }
}

TEST(ArcMinimum, SymmetricTwoPoints) {
  const auto m = arc_minimum(riesz_kernel(2), equally_spaced(2), 0);
  EXPECT_NEAR(m.angle, pi / 2, 1e-7);  // flat minimum: location to ~sqrt(eps)
  EXPECT_NEAR(m.value, 1.0, 1e-14);
}

TEST(ArcMinimum, SymmetricFourPoints) {
  const auto m = arc_minimum(riesz_kernel(2), equally_spaced(4), 0);
  EXPECT_NEAR(m.angle, pi / 4, 1e-7);
}

TEST(ArcMinimum, MatchesDenseScan) {
  const Kernel k = riesz_kernel(3);
  const auto c = Configuration::from_unordered({0, pi / 2});
  const auto m = arc_minimum(k, c, 1);  // from pi/2 around to 2pi
  auto [at, best] = arc_scan(k, c, pi / 2, 3 * pi / 2, 1'000'000);
  // refine the scan around its best cell
  const double cell = 3 * pi / 2 / 1'000'000;
  std::tie(at, best) = arc_scan(k, c, at - cell, 2 * cell, 10'000);
  EXPECT_NEAR(m.value, best, 1e-10);
  EXPECT_NEAR(m.angle, at, 1e-6);
  EXPECT_NEAR(m.angle, 5 * pi / 4, 1e-6);  // mirror symmetry of the pair
}

TEST(ArcMinimum, Errors) {
  const auto c = Configuration::from_unordered({0, 0, pi});
  try {
    arc_minimum(riesz_kernel(2), c, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "degenerate-arc");
  }
  EXPECT_THROW(arc_minimum(riesz_kernel(2), c, 1, 2), Error);
}

TEST(Polarization, ClosedFormValues) {
  const auto r2 = polarization(riesz_kernel(2), equally_spaced(2));
  EXPECT_NEAR(r2.value, 1.0, 1e-12);
  EXPECT_EQ(r2.witnesses.size(), 2u);
  EXPECT_NEAR(polarization(riesz_kernel(4), equally_spaced(2)).value, 0.5, 1e-12);
}

TEST(Polarization, SinglePointMinimumAtAntipode) {
  const auto r = polarization(riesz_kernel(2), Configuration::from_unordered({0.0}));
  EXPECT_NEAR(r.value, 0.25, 1e-15);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_NEAR(r.witnesses[0], pi, 1e-6);
}

TEST(Polarization, AllPointsCoincident) {
  const auto r = polarization(riesz_kernel(2), Configuration::from_unordered({1.0, 1.0, 1.0}));
  EXPECT_NEAR(r.value, 0.75, 1e-14);
  ASSERT_EQ(r.per_arc_minima.size(), 1u);
  EXPECT_NEAR(r.witnesses[0], 1.0 + pi, 1e-6);
}

TEST(Polarization, WitnessesWithinTolerance) {
  Rng rng(2);
  const Kernel k = riesz_kernel(2);
  for (int i = 0; i < 50; ++i) {
    const auto c = random_config(rng, 2 + i % 6);
    const auto r = polarization(k, c);
    ASSERT_FALSE(r.witnesses.empty());
    for (double w : r.witnesses) EXPECT_LE(std::abs(potential_value(k, c, w) - r.value), 1e-9);
    double lowest = kInf;
    for (const auto& m : r.per_arc_minima) lowest = std::min(lowest, m.value);
    EXPECT_EQ(lowest, r.value);
  }
}

TEST(Polarization, EquallySpacedArcsAgree) {
  for (double s : {0.5, 1.0, 2.0, 5.0}) {
    for (int n : {3, 7, 16}) {
      const auto r = polarization(riesz_kernel(s), equally_spaced(n));
      for (const auto& m : r.per_arc_minima) EXPECT_LE(rel_diff(m.value, r.value), 1e-10);
      EXPECT_EQ(r.witnesses.size(), static_cast<std::size_t>(n));
    }
  }
}

TEST(Polarization, RotationInvariance) {
  Rng rng(3);
  for (const Kernel& k : {riesz_kernel(1), riesz_kernel(2.5), log_kernel(), power_kernel(0.5)}) {
    for (int i = 0; i < 40; ++i) {
      const auto c = random_config(rng, 2 + i % 7);
      const double base = polarization(k, c).value;
      EXPECT_LE(rel_diff(polarization(k, c.rotated(rng.uniform(0, kTwoPi))).value, base), 1e-11);
      EXPECT_LE(rel_diff(polarization(k, c.reflected()).value, base), 1e-11);
    }
  }
}

TEST(Polarization, MatchesDenseGlobalScan) {
  Rng rng(77);
  for (const Kernel& k : {riesz_kernel(2), riesz_kernel(0.5), log_kernel(), power_kernel(0.7)}) {
    for (int i = 0; i < 6; ++i) {
      const auto c = random_config(rng, 1 + i);
      const double value = polarization(k, c).value;
      const double scanned = dense_scan(k, c, 1'000'000).second;
      EXPECT_LE(value, scanned + 1e-12);
      EXPECT_LE(rel_diff(value, scanned), 1e-8) << k.label() << " n=" << c.size();
    }
  }
}

TEST(Polarization, ContinuousInS) {
  for (int n : {2, 5, 16}) {
    for (double s = 0.5; s <= 6.0; s += 0.5) {
      const double a = polarization(riesz_kernel(s), equally_spaced(n)).value;
      const double b = polarization(riesz_kernel(s + 1e-6), equally_spaced(n)).value;
      EXPECT_LT(rel_diff(a, b), 1e-3);
    }
  }
}

TEST(Polarization, EqualSpacingIsStrictlyBest) {
  Rng rng(1234);
  for (const Kernel& k : {riesz_kernel(2), log_kernel(), power_kernel(0.5)}) {
    for (int n = 2; n <= 8; ++n) {
      const double best = polarization(k, equally_spaced(n)).value;
      for (int i = 0; i < 150; ++i) {
        const auto c = random_config(rng, n);
        if (sup_distance_from_equal(c) < 1e-6) continue;
        EXPECT_LT(polarization(k, c).value, best - 1e-12) << k.label() << " n=" << n;
      }
    }
  }
}

TEST(PotentialProfile, GridAndValues) {
  const auto rows = potential_profile(riesz_kernel(2), equally_spaced(2), 4);
  ASSERT_EQ(rows.size(), 4u);
  const double angles[] = {0, pi / 2, pi, 3 * pi / 2};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(rows[i].angle, angles[i], 1e-15);
  EXPECT_TRUE(std::isinf(rows[0].value));
  EXPECT_NEAR(rows[1].value, 1.0, 1e-15);
  EXPECT_TRUE(std::isinf(rows[2].value));
  EXPECT_NEAR(rows[3].value, 1.0, 1e-15);
  EXPECT_THROW(potential_profile(log_kernel(), equally_spaced(2), 1), Error);
}

TEST(PotentialProfile, NeverBelowPolarization) {
  Rng rng(9);
  const Kernel k = riesz_kernel(1.5);
  for (int i = 0; i < 3; ++i) {
    const auto c = random_config(rng, 3 + i);
    const double value = polarization(k, c).value;
    double lowest = kInf;
    for (const auto& row : potential_profile(k, c, 1'000'000)) lowest = std::min(lowest, row.value);
    EXPECT_GE(lowest, value - 1e-9);
  }
}

}  // namespace
