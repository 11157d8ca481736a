#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "polar/circle_config.hpp"
#include "polar/error.hpp"
#include "polar/nelder_mead.hpp"
#include "polar/random.hpp"

namespace polar {

/// (2 sin(pi k / n))^(-s), the k-th neighbour term of an equally spaced
/// point. Uses min(k, n - k) so the terms for k and n - k are bit-identical.
inline double riesz_chord_term(double s, long n, long k) {
  const long m = std::min(k, n - k);
  return std::pow(2.0 * std::sin(std::numbers::pi * static_cast<double>(m) / n), -s);
}

/// Riesz s-energy of n equally spaced points: n sum_{k=1..n-1} (2 sin(pi k/n))^-s.
inline double energy_equally_spaced(double s, long n) {
  if (!(s > 0.0)) throw Error("invalid-parameter", "energy needs s > 0");
  if (n < 2) throw Error("invalid-parameter", "energy needs n >= 2");
  double per_point = 0.0;
  for (long k = 1; k < n; ++k) per_point += riesz_chord_term(s, n, k);
  return static_cast<double>(n) * per_point;
}

/// E_s(2n)/(2n) - E_s(n)/n, with E_s(1) = 0.
inline double polarization_via_energy(double s, long n) {
  if (n < 1) throw Error("invalid-parameter", "n must be >= 1");
  const double doubled = energy_equally_spaced(s, 2 * n) / (2.0 * n);
  const double single = n >= 2 ? energy_equally_spaced(s, n) / static_cast<double>(n) : 0.0;
  return doubled - single;
}

/// Pairwise Riesz energy sum_{j != k} |z_j - z_k|^-s of arbitrary angles.
inline double riesz_energy(double s, const std::vector<double>& angles) {
  double e = 0.0;
  for (std::size_t j = 0; j < angles.size(); ++j)
    for (std::size_t k = j + 1; k < angles.size(); ++k)
      e += 2.0 * std::pow(2.0 * std::sin(0.5 * geodesic_distance(angles[j], angles[k])), -s);
  return e;
}

struct EnergyOptions {
  int restarts = 4;
  int max_iters = 20000;
  double tol = 1e-12;
  std::uint64_t seed = 1;
};

/// Derivative-free minimization of the pairwise energy over n points with the
/// first fixed at angle 0. Restarts begin from random angles.
inline std::pair<Configuration, double> energy_numeric_min(double s, long n,
                                                           const EnergyOptions& opts = {}) {
  if (!(s > 0.0)) throw Error("invalid-parameter", "energy needs s > 0");
  if (n < 2 || n > 12) throw Error("invalid-parameter", "energy_numeric_min supports 2 <= n <= 12");
  Rng rng(opts.seed);
  auto to_angles = [](const std::vector<double>& x) {
    std::vector<double> a(x.size() + 1, 0.0);
    std::copy(x.begin(), x.end(), a.begin() + 1);
    return a;
  };
  auto objective = [&](const std::vector<double>& x) { return riesz_energy(s, to_angles(x)); };

  std::vector<double> best_x;
  double best = std::numeric_limits<double>::infinity();
  NelderMeadOptions nm{opts.max_iters, opts.tol, 0.5};
  for (int r = 0; r < std::max(opts.restarts, 1); ++r) {
    std::vector<double> x0(static_cast<std::size_t>(n - 1));
    for (double& v : x0) v = rng.uniform(0.0, kTwoPi);
    // polish by restarting the simplex at the previous optimum
    NelderMeadResult res = nelder_mead_minimize(objective, x0, nm);
    for (int polish = 0; polish < 3; ++polish) {
      nm.initial_step = 0.01;
      res = nelder_mead_minimize(objective, res.x, nm);
    }
    nm.initial_step = 0.5;
    if (res.value < best) {
      best = res.value;
      best_x = res.x;
    }
  }
  return {Configuration::from_unordered(to_angles(best_x)), best};
}

}  // namespace polar
