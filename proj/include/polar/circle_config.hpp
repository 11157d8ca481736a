#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polar/error.hpp"

namespace polar {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Absolute gauge for angle comparisons.
inline constexpr double kAngleTol = 1e-12;

/// Reduces an angle to [0, 2pi).
inline double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

/// Shortest arclength between two points given by angles; lies in [0, pi].
inline double geodesic_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

/// Counterclockwise arc length from angle `from` to angle `to`, in [0, 2pi).
inline double ccw_length(double from, double to) { return normalize_angle(to - from); }

struct Arc {
  double start_angle;
  double end_angle;
  double length;  // counterclockwise from start to end, in [0, 2pi]
};

/// n points on the unit circle listed counterclockwise with periodic
/// indexing. Angles lie in [0, 2pi) and are cyclically sorted: point 0 need
/// not carry the smallest angle, which lets labels survive moves across 0.
/// Coincident points are allowed and give zero gaps.
class Configuration {
 public:
  Configuration() = default;

  /// Takes angles already in counterclockwise order (any starting point).
  /// Throws "invalid-configuration" if they wind around more than once.
  static Configuration from_ordered(std::vector<double> angles) {
    if (angles.empty()) throw Error("invalid-configuration", "configuration needs n >= 1");
    for (double& a : angles) {
      if (!std::isfinite(a)) throw Error("invalid-configuration", "non-finite angle");
      a = normalize_angle(a);
    }
    Configuration c(std::move(angles));
    c.gaps_ = compute_gaps(c.angles_);
    return c;
  }

  /// Accepts angles in any order; sorts them (min first).
  static Configuration from_unordered(std::vector<double> angles) {
    for (double& a : angles) {
      if (!std::isfinite(a)) throw Error("invalid-configuration", "non-finite angle");
      a = normalize_angle(a);
    }
    std::sort(angles.begin(), angles.end());
    return from_ordered(std::move(angles));
  }

  /// Builds the configuration whose point 0 sits at `anchor` and whose
  /// consecutive counterclockwise gaps are `gaps` (must be >= 0, sum 2pi).
  static Configuration from_gaps(double anchor, std::span<const double> gaps) {
    if (gaps.empty()) throw Error("invalid-configuration", "configuration needs n >= 1");
    double total = 0.0;
    for (double g : gaps) {
      if (!(g >= -kAngleTol)) throw Error("invalid-configuration", "negative gap");
      total += g;
    }
    if (std::abs(total - kTwoPi) > 1e-9)
      throw Error("invalid-configuration", "gaps must sum to 2pi");
    std::vector<double> angles(gaps.size());
    double pos = anchor;
    for (std::size_t k = 0; k < gaps.size(); ++k) {
      angles[k] = normalize_angle(pos);
      pos += std::max(gaps[k], 0.0);
    }
    return from_ordered(std::move(angles));
  }

  std::size_t size() const noexcept { return angles_.size(); }
  const std::vector<double>& angles() const noexcept { return angles_; }
  double angle(std::size_t k) const { return angles_[k % angles_.size()]; }
  const std::vector<double>& gaps() const noexcept { return gaps_; }

  /// Arc from point k to point k+1 (cyclic), counterclockwise.
  Arc arc(std::size_t k) const {
    const std::size_t n = size();
    return Arc{angles_[k % n], angles_[(k + 1) % n], gaps_[k % n]};
  }

  /// Relabels cyclically so the smallest angle comes first.
  Configuration canonical() const {
    auto it = std::min_element(angles_.begin(), angles_.end());
    std::vector<double> a(angles_.size());
    std::rotate_copy(angles_.begin(), it, angles_.end(), a.begin());
    return from_ordered(std::move(a));
  }

  Configuration rotated(double phi) const {
    std::vector<double> a = angles_;
    for (double& x : a) x += phi;
    return from_ordered(std::move(a));
  }

  /// theta -> -theta; reverses the order so the result stays counterclockwise.
  Configuration reflected() const {
    std::vector<double> a(angles_.rbegin(), angles_.rend());
    for (double& x : a) x = -x;
    return from_ordered(std::move(a));
  }

  bool operator==(const Configuration& other) const = default;

 private:
  explicit Configuration(std::vector<double> angles) : angles_(std::move(angles)) {}

  static std::vector<double> compute_gaps(const std::vector<double>& angles) {
    const std::size_t n = angles.size();
    std::vector<double> g(n);
    if (n == 1) {
      g[0] = kTwoPi;
      return g;
    }
    double partial = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      double d = ccw_length(angles[k], angles[k + 1]);
      if (d > kTwoPi - kAngleTol) d = 0.0;  // tiny backwards step from rounding
      g[k] = d;
      partial += d;
    }
    if (partial > kTwoPi + kAngleTol)
      throw Error("invalid-configuration", "angles are not in counterclockwise order");
    g[n - 1] = std::max(kTwoPi - partial, 0.0);
    return g;
  }

  std::vector<double> angles_;
  std::vector<double> gaps_;
};

/// Points at phase + 2pi k / n, relabeled so the smallest angle is first.
inline Configuration equally_spaced(std::size_t n, double phase = 0.0) {
  if (n == 0) throw Error("invalid-parameter", "equally_spaced needs n >= 1");
  std::vector<double> a(n);
  for (std::size_t k = 0; k < n; ++k) a[k] = phase + kTwoPi * static_cast<double>(k) / n;
  return Configuration::from_ordered(std::move(a)).canonical();
}

inline const std::vector<double>& gaps(const Configuration& c) { return c.gaps(); }

inline double separation(const Configuration& c) {
  return *std::min_element(c.gaps().begin(), c.gaps().end());
}

/// Spreads a pair apart: z1 turns clockwise by eps, z2 counterclockwise.
/// Requires 0 < eps < (ccw length from z2 to z1) / 2, taken as 2pi if z1 == z2.
inline std::pair<double, double> pair_move(double z1, double z2, double eps) {
  double complement = ccw_length(z2, z1);
  if (complement <= kAngleTol) complement = kTwoPi;
  if (!(eps > 0.0 && eps < 0.5 * complement))
    throw Error("eps-out-of-range", "pair_move needs 0 < eps < half the complementary arc");
  return {normalize_angle(z1 - eps), normalize_angle(z2 + eps)};
}

namespace detail {

// Applies per-point counterclockwise displacements after checking that the
// resulting gaps (predicted linearly) stay nonnegative.
inline Configuration displace(const Configuration& c, std::span<const double> shift,
                              std::span<const double> new_gaps, const char* code) {
  for (double g : new_gaps)
    if (g < -kAngleTol) throw Error(code, "move breaks counterclockwise ordering");
  std::vector<double> a = c.angles();
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += shift[k];
  return Configuration::from_ordered(std::move(a));
}

}  // namespace detail

/// Rotates point k clockwise and point k+1 (cyclic) counterclockwise by
/// delta. Index is 0-based. Throws "ordering-broken" if any gap would go
/// negative.
inline Configuration coordinate_move(const Configuration& c, std::size_t k, double delta) {
  const std::size_t n = c.size();
  if (k >= n) throw Error("invalid-index", "coordinate_move index out of range");
  std::vector<double> shift(n, 0.0);
  std::vector<double> g = c.gaps();
  shift[k] -= delta;
  shift[(k + 1) % n] += delta;
  g[k] += 2.0 * delta;
  g[(k + n - 1) % n] -= delta;
  g[(k + 1) % n] -= delta;
  return detail::displace(c, shift, g, "ordering-broken");
}

/// Gap vector after the transport by deltas:
/// alpha'_k = alpha_k - D_{k-1} + 2 D_k - D_{k+1} (periodic).
inline std::vector<double> transported_gaps(std::span<const double> gaps,
                                            std::span<const double> deltas) {
  const std::size_t n = gaps.size();
  std::vector<double> g(n);
  for (std::size_t k = 0; k < n; ++k)
    g[k] = gaps[k] - deltas[(k + n - 1) % n] + 2.0 * deltas[k] - deltas[(k + 1) % n];
  return g;
}

/// Composition coordinate_move(n-1, D_{n-1}) o ... o coordinate_move(0, D_0).
/// Requires max|D_k| <= sep/4, or D >= 0 with max D_k <= sep/2; under that
/// bound every intermediate stage stays counterclockwise ordered.
inline Configuration apply_transport(const Configuration& c, std::span<const double> deltas) {
  const std::size_t n = c.size();
  if (deltas.size() != n) throw Error("invalid-parameter", "deltas length must equal n");
  const double sep = separation(c);
  double max_abs = 0.0;
  bool nonnegative = true;
  for (double d : deltas) {
    max_abs = std::max(max_abs, std::abs(d));
    nonnegative = nonnegative && d >= 0.0;
  }
  const double bound = (nonnegative ? 0.5 : 0.25) * sep;
  if (max_abs > 0.0 && !(max_abs <= bound + kAngleTol))
    throw Error("step-too-large", "transport step exceeds the separation bound");
  Configuration out = c;
  for (std::size_t k = 0; k < n; ++k) {
    if (deltas[k] != 0.0) out = coordinate_move(out, k, deltas[k]);
  }
  return out;
}

/// The end point of the composed transport without the stage-wise bound:
/// point k turns counterclockwise by D_{k-1} - D_k. Only the final ordering
/// is checked (via the gap identity).
inline Configuration transport_endpoint(const Configuration& c, std::span<const double> deltas) {
  const std::size_t n = c.size();
  if (deltas.size() != n) throw Error("invalid-parameter", "deltas length must equal n");
  std::vector<double> shift(n);
  for (std::size_t k = 0; k < n; ++k) shift[k] = deltas[(k + n - 1) % n] - deltas[k];
  return detail::displace(c, shift, transported_gaps(c.gaps(), deltas), "ordering-broken");
}

}  // namespace polar
