#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "polar/circle_config.hpp"
#include "polar/error.hpp"
#include "polar/kernels.hpp"

namespace polar {

/// U(z) = sum_k f(d(z, z_k)). Coincident points count with multiplicity;
/// +inf when z hits a node of a singular kernel.
inline double potential_value(const Kernel& kernel, const Configuration& config, double z) {
  double sum = 0.0;
  for (double a : config.angles()) sum += kernel.eval(geodesic_distance(z, a));
  return sum;
}

struct SearchOptions {
  int samples = 64;
  int refine_iters = 200;
  double witness_tol = 1e-9;
};

struct ArcMinimum {
  std::size_t arc_index;
  double angle;
  double value;
};

/// Minimum of the potential over the closed arc from point k to point k+1.
///
/// Samples the arc uniformly, then runs golden-section search on the bracket
/// around the best sample until the bracket is narrower than 1e-12 or
/// refine_iters is reached. For singular kernels the endpoints (poles) are
/// pulled in by length * 1e-9. Unimodality on the arc is not assumed
/// globally, only inside the final bracket.
inline ArcMinimum arc_minimum(const Kernel& kernel, const Configuration& config,
                              std::size_t arc_index, int samples = 64, int refine_iters = 200) {
  if (samples < 3) throw Error("invalid-parameter", "arc_minimum needs samples >= 3");
  const Arc arc = config.arc(arc_index);
  if (!(arc.length > kAngleTol)) throw Error("degenerate-arc", "arc has zero length");

  const double offset = kernel.singular() ? arc.length * 1e-9 : 0.0;
  const double lo = offset;
  const double hi = arc.length - offset;
  auto u = [&](double t) { return potential_value(kernel, config, arc.start_angle + t); };

  const double step = (hi - lo) / (samples - 1);
  int best = 0;
  double best_value = kInf;
  for (int i = 0; i < samples; ++i) {
    const double v = u(lo + step * i);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  double best_t = lo + step * best;

  double a = lo + step * std::max(best - 1, 0);
  double b = lo + step * std::min(best + 1, samples - 1);
  constexpr double kInvPhi = 0.6180339887498948482;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = u(x1);
  double f2 = u(x2);
  for (int it = 0; it < refine_iters && (b - a) >= 1e-12; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = u(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = u(x2);
    }
  }
  for (auto [t, v] : {std::pair{x1, f1}, std::pair{x2, f2}}) {
    if (v < best_value) {
      best_value = v;
      best_t = t;
    }
  }
  return {arc_index % config.size(), normalize_angle(arc.start_angle + best_t), best_value};
}

struct PolarizationResult {
  double value = kInf;
  std::vector<double> witnesses;
  std::vector<ArcMinimum> per_arc_minima;
};

/// min over the circle of the potential, searched arc by arc over every
/// positive-length gap. Witnesses are the per-arc minimizers whose value is
/// within witness_tol of the global minimum.
inline PolarizationResult polarization(const Kernel& kernel, const Configuration& config,
                                       const SearchOptions& opts = {}) {
  PolarizationResult result;
  for (std::size_t k = 0; k < config.size(); ++k) {
    if (!(config.gaps()[k] > kAngleTol)) continue;
    ArcMinimum m = arc_minimum(kernel, config, k, opts.samples, opts.refine_iters);
    result.value = std::min(result.value, m.value);
    result.per_arc_minima.push_back(m);
  }
  for (const ArcMinimum& m : result.per_arc_minima)
    if (std::abs(m.value - result.value) <= opts.witness_tol) result.witnesses.push_back(m.angle);
  std::sort(result.witnesses.begin(), result.witnesses.end());
  return result;
}

struct ProfilePoint {
  double angle;
  double value;
};

/// Potential on the uniform grid 2pi i / resolution, i = 0..resolution-1.
inline std::vector<ProfilePoint> potential_profile(const Kernel& kernel,
                                                   const Configuration& config, int resolution) {
  if (resolution < 2) throw Error("invalid-parameter", "profile needs resolution >= 2");
  std::vector<ProfilePoint> rows(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) {
    const double z = kTwoPi * i / resolution;
    rows[i] = {z, potential_value(kernel, config, z)};
  }
  return rows;
}

}  // namespace polar
