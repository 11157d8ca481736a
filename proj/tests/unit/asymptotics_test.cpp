#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "polar/asymptotics.hpp"
#include "polar/energy.hpp"
#include "polar/exact_series.hpp"
#include "polar/kernels.hpp"

namespace {

using namespace polar;
constexpr double pi = std::numbers::pi;

// Euler-Maclaurin: sum_{k<N} k^-s + N^(1-s)/(s-1) + N^-s/2
//   + sum_j B_2j/(2j)! s(s+1)...(s+2j-2) N^(-s-2j+1)
double zeta_euler_maclaurin(double s) {
  constexpr int N = 20;
  double sum = 0.0;
  for (int k = 1; k < N; ++k) sum += std::pow(k, -s);
  sum += std::pow(N, 1 - s) / (s - 1) + 0.5 * std::pow(N, -s);
  const auto b = bernoulli_numbers(20);
  double rising = s;  // s (s+1) ... (s + 2j - 2)
  double fact = 2.0;  // (2j)!
  for (int j = 1; j <= 10; ++j) {
    sum += b[2 * j].get_d() / fact * rising * std::pow(N, -s - 2 * j + 1);
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    fact *= (2.0 * j + 1) * (2.0 * j + 2);
  }
  return sum;
}

TEST(Zeta, EvenValuesAgainstExact) {
  EXPECT_LE(std::abs(zeta_real(2) - pi * pi / 6) / (pi * pi / 6), 1e-12);
  EXPECT_LE(std::abs(zeta_real(4) - std::pow(pi, 4) / 90) / (std::pow(pi, 4) / 90), 1e-12);
}

TEST(Zeta, AgainstEulerMaclaurin) {
  for (double s : {1.1, 1.5, 2.5, 3.0, 4.7, 7.0, 12.0, 30.0, 50.0}) {
    const double oracle = zeta_euler_maclaurin(s);
    EXPECT_LE(std::abs(zeta_real(s) - oracle) / oracle, 1e-12) << s;
  }
}

TEST(Zeta, Domain) {
  EXPECT_THROW(zeta_real(1.0), Error);
  EXPECT_THROW(zeta_real(0.5), Error);
}

TEST(Gamma, KnownValues) {
  EXPECT_NEAR(gamma_real(0.5), std::sqrt(pi), 1e-13);
  EXPECT_NEAR(gamma_real(1.0), 1.0, 1e-14);
  EXPECT_NEAR(gamma_real(1.5), std::sqrt(pi) / 2, 1e-13);
  EXPECT_THROW(gamma_real(0.0), Error);
  EXPECT_THROW(gamma_real(-1.5), Error);
}

TEST(Gamma, MatchesStdTgamma) {
  for (double x = 0.01; x < 20; x += 0.173)
    EXPECT_LE(std::abs(gamma_real(x) - std::tgamma(x)) / std::tgamma(x), 1e-12) << x;
}

TEST(Regime, Classification) {
  EXPECT_EQ(classify_regime(2.0), AsymptoticRegime::s_gt_1);
  EXPECT_EQ(classify_regime(1.0), AsymptoticRegime::s_eq_1);
  EXPECT_EQ(classify_regime(1.0 + 1e-15), AsymptoticRegime::s_eq_1);
  EXPECT_EQ(classify_regime(1.0 + 1e-9), AsymptoticRegime::s_gt_1);
  EXPECT_EQ(classify_regime(0.0), AsymptoticRegime::s_in_0_1);
  EXPECT_EQ(classify_regime(0.999), AsymptoticRegime::s_in_0_1);
  EXPECT_THROW(classify_regime(-0.1), Error);
}

TEST(DominantTerm, Examples) {
  for (long n : {1, 2, 7, 100}) {
    EXPECT_NEAR(dominant_term(2, n), n * n / 4.0, 1e-12 * n * n);
    EXPECT_NEAR(dominant_term(0, n), static_cast<double>(n), 1e-12 * n);
  }
  EXPECT_NEAR(dominant_term(1, 10), 10 * std::log(10.0) / pi, 1e-13);
  EXPECT_EQ(dominant_term(1, 1), 0.0);
}

TEST(DominantTerm, Shape) {
  for (double s : {1.2, 2.0, 3.5}) {
    for (long n = 1; n < 200; ++n) EXPECT_LT(dominant_term(s, n), dominant_term(s, n + 1));
  }
  for (double s : {0.0, 0.3, 0.9}) {
    const double c = dominant_term(s, 1);
    for (long n : {2L, 17L, 1000L, 123456L})
      EXPECT_NEAR(dominant_term(s, n) / n, c, 1e-14 * std::max(1.0, c));
  }
}

TEST(AsymptoticRatio, ClosedFormCases) {
  for (long n : {2L, 4L, 8L, 16L, 32L}) {
    const double m4 = std::pow(n, 4) / 48.0 + n * n / 24.0;
    EXPECT_NEAR(asymptotic_ratio(4, n, m4) - 1, 2.0 / (n * n), 1e-12);
    EXPECT_NEAR(asymptotic_ratio(2, n, n * n / 4.0), 1.0, 1e-12);
    EXPECT_NEAR(asymptotic_ratio(0, n, static_cast<double>(n)), 1.0, 1e-14);
  }
  EXPECT_THROW(asymptotic_ratio(1, 1, 1.0), Error);
}

TEST(AsymptoticRatio, ConvergenceTrend) {
  // numeric polarization of equally spaced points via the energy identity
  for (double s : {1.5, 3.0, 4.0}) {
    double prev = kInf;
    for (int k = 3; k <= 10; ++k) {
      const long n = 1L << k;
      const double err = std::abs(asymptotic_ratio(s, n, polarization_via_energy(s, n)) - 1);
      EXPECT_LE(err, prev) << s << ' ' << n;
      prev = err;
    }
    EXPECT_LT(prev, 0.05) << s;
  }
}

}  // namespace
