#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "polar/error.hpp"

namespace polar {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Power series c_0 + c_1 x + ... + c_J x^J with exact rational
/// coefficients, truncated at a fixed order J. All arithmetic stays at J.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}
  TruncatedSeries(std::size_t order, std::vector<Rational> coeffs) : c_(order + 1) {
    for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) c_[i] = coeffs[i];
  }

  static TruncatedSeries constant(std::size_t order, const Rational& v) {
    TruncatedSeries s(order);
    s.c_[0] = v;
    return s;
  }

  std::size_t order() const noexcept { return c_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    check_orders(a, b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    check_orders(a, b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
  }
  friend TruncatedSeries operator*(const Rational& k, TruncatedSeries a) {
    for (Rational& v : a.c_) v *= k;
    return a;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_orders(a, b);
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; i + j < a.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return out;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.c_ == b.c_;
  }

 private:
  static void check_orders(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw Error("order-mismatch", "series truncation orders differ");
  }

  std::vector<Rational> c_;
};

/// exp(f) for f with zero constant term, from g' = f' g:
/// g_k = (1/k) sum_{j=1..k} j f_j g_{k-j}.
inline TruncatedSeries exp(const TruncatedSeries& f) {
  if (f[0] != 0) throw Error("domain", "exp needs a zero constant term");
  TruncatedSeries g(f.order());
  g[0] = 1;
  for (std::size_t k = 1; k <= f.order(); ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += Rational(static_cast<long>(j)) * f[j] * g[k - j];
    g[k] = acc / Rational(static_cast<long>(k));
  }
  return g;
}

/// log(f) for f with constant term 1, from f g' = f':
/// g_k = f_k - (1/k) sum_{j=1..k-1} j g_j f_{k-j}.
inline TruncatedSeries log(const TruncatedSeries& f) {
  if (f[0] != 1) throw Error("domain", "log needs constant term 1");
  TruncatedSeries g(f.order());
  for (std::size_t k = 1; k <= f.order(); ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j < k; ++j) acc += Rational(static_cast<long>(j)) * g[j] * f[k - j];
    g[k] = f[k] - acc / Rational(static_cast<long>(k));
  }
  return g;
}

/// f^s = exp(s log f) for f with constant term 1 and rational s.
inline TruncatedSeries pow(const TruncatedSeries& f, const Rational& s) {
  return exp(s * log(f));
}

/// A rational multiple of pi^pi_power.
struct GradedRational {
  Rational value;
  int pi_power = 0;

  friend GradedRational operator*(const GradedRational& a, const GradedRational& b) {
    return {a.value * b.value, a.pi_power + b.pi_power};
  }
  friend bool operator==(const GradedRational& a, const GradedRational& b) {
    return a.value == b.value && (a.value == 0 || a.pi_power == b.pi_power);
  }
};

/// sum_j c_j pi^(2j) z^(2j): stored as a plain series in u = pi^2 z^2, so
/// coefficient j carries an implicit grade pi^(2j).
struct PiGradedSeries {
  TruncatedSeries series;

  std::size_t order() const { return series.order(); }
  GradedRational at(std::size_t j) const { return {series[j], static_cast<int>(2 * j)}; }
};

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// B_0..B_upto from sum_{j=0..m} C(m+1, j) B_j = 0, B_0 = 1 (so B_1 = -1/2).
inline std::vector<Rational> bernoulli_numbers(std::size_t upto) {
  std::vector<Rational> b(upto + 1);
  b[0] = 1;
  for (std::size_t m = 1; m <= upto; ++m) {
    Rational acc = 0;
    for (std::size_t j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[j];
    b[m] = -acc / Rational(static_cast<long>(m + 1));
  }
  return b;
}

/// q with zeta(2k) = q pi^(2k): q = (-1)^(k+1) B_{2k} 2^(2k-1) / (2k)!.
inline Rational zeta_even_exact(std::size_t k) {
  if (k < 1) throw Error("invalid-parameter", "zeta_even_exact needs k >= 1");
  const Rational b = bernoulli_numbers(2 * k).back();
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * k - 1);
  Rational q = b * Rational(two_pow) / Rational(factorial(2 * k));
  if (k % 2 == 0) q = -q;
  return q;
}

/// log sinc z = -sum_{k>=1} zeta(2k)/k z^(2k), graded by pi^(2k).
inline PiGradedSeries log_sinc_series(std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t k = 1; k <= order; ++k)
    s[k] = -zeta_even_exact(k) / Rational(static_cast<long>(k));
  return {s};
}

/// Taylor coefficients of (sinc z)^(-s) in z^2: alpha_j(s) = r_j pi^(2j),
/// computed as exp(-s log sinc).
inline std::vector<GradedRational> alpha_coefficients(const Rational& s, std::size_t order) {
  const PiGradedSeries ls = log_sinc_series(order);
  const PiGradedSeries a{exp(Rational(-s) * ls.series)};
  std::vector<GradedRational> out;
  out.reserve(order + 1);
  for (std::size_t j = 0; j <= order; ++j) out.push_back(a.at(j));
  return out;
}

/// B_j^{(s)}(x): j! times the t^j coefficient of (t / (e^t - 1))^s e^(x t).
inline Rational generalized_bernoulli_value(std::size_t j, const Rational& s, const Rational& x,
                                            std::size_t order) {
  if (order < j) throw Error("invalid-parameter", "series order too small for index");
  // (e^t - 1)/t = sum_k t^k / (k+1)!
  TruncatedSeries q(order);
  for (std::size_t k = 0; k <= order; ++k) q[k] = Rational(1) / Rational(factorial(k + 1));
  TruncatedSeries xt(order);
  if (order >= 1) xt[1] = x;
  const TruncatedSeries g = exp(Rational(-s) * log(q) + xt);
  return g[j] * Rational(factorial(j));
}

/// Same alpha_j(s) from the generalized Bernoulli route:
/// (-1)^j B_{2j}^{(s)}(s/2) / (2j)! (2pi)^(2j).
inline GradedRational alpha_via_bernoulli(std::size_t j, const Rational& s) {
  const Rational half_s = s / Rational(2);
  Rational v = generalized_bernoulli_value(2 * j, s, half_s, 2 * j) / Rational(factorial(2 * j));
  Integer four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, j);
  v *= Rational(four_pow);
  if (j % 2 == 1) v = -v;
  return {v, static_cast<int>(2 * j)};
}

/// Polynomial in n with rational coefficients, keyed by power.
class ExactPolynomial {
 public:
  void add_term(unsigned power, const Rational& coeff) {
    terms_[power] += coeff;
    if (terms_[power] == 0) terms_.erase(power);
  }
  const std::map<unsigned, Rational>& terms() const noexcept { return terms_; }

  Rational evaluate(long n) const {
    Rational acc = 0;
    for (const auto& [p, c] : terms_) {
      Integer np;
      mpz_pow_ui(np.get_mpz_t(), Integer(n).get_mpz_t(), p);
      acc += c * Rational(np);
    }
    return acc;
  }

  /// e.g. "n^2/24 + n^4/48"; a non-unit numerator prints as "3*n^2/8".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
      const bool negative = c < 0;
      const Integer num = abs(c.get_num());
      const Integer& den = c.get_den();
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string mono = p == 0 ? "" : (p == 1 ? "n" : "n^" + std::to_string(p));
      std::string term;
      if (mono.empty()) term = num.get_str();
      else if (num == 1) term = mono;
      else term = num.get_str() + "*" + mono;
      if (den != 1) term += "/" + den.get_str();
      out += term;
      first = false;
    }
    return out;
  }

  friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

 private:
  std::map<unsigned, Rational> terms_;
};

/// Closed form of the max-min Riesz (2m)-polarization of n points:
/// 2/(2pi)^(2m) sum_{k=1..m} n^(2k) zeta(2k) alpha_{m-k}(2m) (2^(2k) - 1).
/// Every term must carry total grade pi^0 after the (2pi)^(2m) division;
/// anything else is reported as "pi-grade-mismatch".
inline ExactPolynomial exact_polarization_polynomial(unsigned m) {
  if (m < 1) throw Error("invalid-parameter", "exact polynomial needs m >= 1");
  const auto alpha = alpha_coefficients(Rational(static_cast<long>(2 * m)), m);
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * m);
  const GradedRational prefactor{Rational(2) / Rational(two_pow), -static_cast<int>(2 * m)};

  ExactPolynomial poly;
  for (unsigned k = 1; k <= m; ++k) {
    const GradedRational zeta{zeta_even_exact(k), static_cast<int>(2 * k)};
    Integer mersenne;
    mpz_ui_pow_ui(mersenne.get_mpz_t(), 2, 2 * k);
    mersenne -= 1;
    const GradedRational term = prefactor * zeta * alpha[m - k] * GradedRational{Rational(mersenne), 0};
    if (term.pi_power != 0)
      throw Error("pi-grade-mismatch", "term of power n^" + std::to_string(2 * k) +
                                           " keeps pi^" + std::to_string(term.pi_power));
    poly.add_term(2 * k, term.value);
  }
  return poly;
}

}  // namespace polar
