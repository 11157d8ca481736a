#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "polar/energy.hpp"
#include "polar/kernels.hpp"
#include "polar/potential.hpp"

namespace {

using namespace polar;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

TEST(Energy, EquallySpacedExamples) {
  EXPECT_NEAR(energy_equally_spaced(2, 2), 0.5, 1e-15);
  EXPECT_NEAR(energy_equally_spaced(2, 3), 2.0, 1e-14);
  EXPECT_NEAR(energy_equally_spaced(2, 4), 5.0, 1e-14);
  EXPECT_THROW(energy_equally_spaced(2, 1), Error);
  EXPECT_THROW(energy_equally_spaced(0, 3), Error);
}

TEST(Energy, MatchesPairwiseSum) {
  for (double s : {0.5, 1.0, 3.0})
    for (long n = 2; n <= 20; ++n)
      EXPECT_LE(rel(energy_equally_spaced(s, n), riesz_energy(s, equally_spaced(n).angles())), 1e-12);
}

TEST(Energy, TermPairingIsExact) {
  for (double s : {0.5, 2.0, 3.3})
    for (long n = 2; n <= 64; ++n)
      for (long k = 1; k < n; ++k) {
        const double a = riesz_chord_term(s, n, k), b = riesz_chord_term(s, n, n - k);
        EXPECT_EQ(std::memcmp(&a, &b, sizeof a), 0);
      }
}

TEST(PolarizationViaEnergy, Examples) {
  EXPECT_NEAR(polarization_via_energy(2, 2), 1.0, 1e-14);
  EXPECT_NEAR(polarization_via_energy(4, 2), 0.5, 1e-14);
  EXPECT_NEAR(polarization_via_energy(2, 1), 0.25, 1e-15);  // 2^-s at n = 1
  for (long n = 1; n <= 64; ++n) EXPECT_LE(rel(polarization_via_energy(2, n), n * n / 4.0), 1e-10);
}

TEST(PolarizationViaEnergy, MatchesNumericPolarization) {
  for (double s : {0.5, 1.0, 2.0, 3.0, 4.0}) {
    const Kernel k = riesz_kernel(s);
    for (long n = 1; n <= 32; ++n) {
      const double numeric = polarization(k, equally_spaced(n)).value;
      EXPECT_LE(rel(polarization_via_energy(s, n), numeric), 1e-9) << s << ' ' << n;
    }
  }
}

TEST(EnergyNumericMin, ThreePointsSpreadEvenly) {
  const auto [config, value] = energy_numeric_min(2, 3);
  EXPECT_NEAR(value, 2.0, 1e-9);
  for (double g : config.gaps()) EXPECT_NEAR(g, kTwoPi / 3, 1e-5);
}

TEST(EnergyNumericMin, AntipodalPair) {
  const auto [config, value] = energy_numeric_min(1, 2);
  EXPECT_NEAR(value, 1.0, 1e-10);
  EXPECT_NEAR(config.gaps()[0], std::numbers::pi, 1e-5);
}

TEST(EnergyNumericMin, FourPointsMatchClosedForm) {
  const auto [config, value] = energy_numeric_min(3, 4);
  EXPECT_LE(rel(value, energy_equally_spaced(3, 4)), 1e-6);
  EXPECT_GE(value, energy_equally_spaced(3, 4) * (1 - 1e-12));
}

TEST(EnergyNumericMin, EquallySpacedIsNeverBeaten) {
  for (long n = 2; n <= 8; ++n) {
    const auto [config, value] = energy_numeric_min(1.5, n, {2, 20000, 1e-12, 5});
    EXPECT_GE(value, energy_equally_spaced(1.5, n) * (1 - 1e-12)) << n;
    EXPECT_LE(rel(value, energy_equally_spaced(1.5, n)), 1e-5) << n;
  }
  EXPECT_THROW(energy_numeric_min(2, 13), Error);
  EXPECT_THROW(energy_numeric_min(2, 1), Error);
}

}  // namespace
