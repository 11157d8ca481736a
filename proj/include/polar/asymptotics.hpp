#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string_view>

#include "polar/error.hpp"

namespace polar {

/// Riemann zeta for real s > 1 via the alternating eta series,
/// zeta(s) = eta(s) / (1 - 2^(1-s)), with Borwein's Chebyshev-weighted
/// acceleration of eta on 64 terms.
inline double zeta_real(double s) {
  if (!(s > 1.0)) throw Error("domain", "zeta_real needs s > 1");
  constexpr int n = 64;
  // d_k = n sum_{i=0..k} (n+i-1)! 4^i / ((n-i)! (2i)!)
  std::array<double, n + 1> d{};
  double term = 1.0 / n;
  double acc = term;
  d[0] = n * acc;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i - 1.0) * (2.0 * i));
    acc += term;
    d[i] = n * acc;
  }
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * (d[k] - d[n]) / std::pow(k + 1.0, s);
  }
  const double eta = -sum / d[n];
  return eta / (1.0 - std::pow(2.0, 1.0 - s));
}

/// Gamma for x > 0 from the Lanczos approximation (g = 7, 9 terms), with
/// Gamma(x) = Gamma(x + 1) / x for x < 1 so the series is only used at x >= 1.
inline double gamma_real(double x) {
  if (!(x > 0.0)) throw Error("domain", "gamma_real needs x > 0");
  if (x < 1.0) return gamma_real(x + 1.0) / x;
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;
  const double z = x - 1.0;
  double a = c[0];
  for (int i = 1; i < 9; ++i) a += c[i] / (z + i);
  const double t = z + g + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

enum class AsymptoticRegime { s_gt_1, s_eq_1, s_in_0_1 };

inline std::string_view to_string(AsymptoticRegime r) {
  switch (r) {
    case AsymptoticRegime::s_gt_1: return "s_gt_1";
    case AsymptoticRegime::s_eq_1: return "s_eq_1";
    case AsymptoticRegime::s_in_0_1: return "s_in_0_1";
  }
  return "";
}

inline AsymptoticRegime classify_regime(double s) {
  if (!(s >= 0.0)) throw Error("domain", "asymptotic regime needs s >= 0");
  if (std::abs(s - 1.0) <= 1e-14) return AsymptoticRegime::s_eq_1;
  return s > 1.0 ? AsymptoticRegime::s_gt_1 : AsymptoticRegime::s_in_0_1;
}

/// Leading term of the n-point Riesz s-polarization of the circle:
///   s > 1:      2 zeta(s) / (2pi)^s (2^s - 1) n^s
///   s = 1:      n log n / pi
///   0 <= s < 1: 2^-s / sqrt(pi) Gamma((1-s)/2) / Gamma(1 - s/2) n
inline double dominant_term(double s, long n) {
  if (n < 1) throw Error("invalid-parameter", "dominant_term needs n >= 1");
  const double nn = static_cast<double>(n);
  switch (classify_regime(s)) {
    case AsymptoticRegime::s_gt_1:
      return 2.0 * zeta_real(s) / std::pow(2.0 * std::numbers::pi, s) * (std::pow(2.0, s) - 1.0) *
             std::pow(nn, s);
    case AsymptoticRegime::s_eq_1:
      return nn * std::log(nn) / std::numbers::pi;
    case AsymptoticRegime::s_in_0_1:
      return std::pow(2.0, -s) / std::sqrt(std::numbers::pi) * gamma_real((1.0 - s) / 2.0) /
             gamma_real(1.0 - s / 2.0) * nn;
  }
  return 0.0;
}

inline double asymptotic_ratio(double s, long n, double kernel_polarization) {
  const double dom = dominant_term(s, n);
  if (dom == 0.0) throw Error("division-by-zero", "dominant term vanishes");
  return kernel_polarization / dom;
}

}  // namespace polar
