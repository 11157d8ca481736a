#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "polar/circle_config.hpp"
#include "polar/error.hpp"
#include "polar/kernels.hpp"
#include "polar/potential.hpp"

namespace polar {

/// Nonnegative, min-zero rotation vector carrying one gap vector to another
/// through alpha'_k = alpha_k - D_{k-1} + 2 D_k - D_{k+1}.
struct TransportPlan {
  std::vector<double> deltas;
  std::vector<double> source_gaps;
  std::vector<double> target_gaps;
  double max_delta = 0.0;

  /// Smallest index whose delta is zero (within 1e-12).
  std::size_t zero_index() const {
    for (std::size_t k = 0; k < deltas.size(); ++k)
      if (deltas[k] <= 1e-12) return k;
    return 0;
  }
};

/// (A x)_k = -x_{k-1} + 2 x_k - x_{k+1}, the periodic second difference.
inline std::vector<double> circulant_apply(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<double> y(n);
  for (std::size_t k = 0; k < n; ++k) y[k] = 2.0 * x[k] - x[(k + n - 1) % n] - x[(k + 1) % n];
  return y;
}

/// Solves A x = beta for the singular periodic second-difference matrix A,
/// returning the solution with min_k x_k = 0. beta must sum to zero (it lies
/// in range A = span(1)^perp).
///
/// With e_k = x_{k+1} - x_k (periodic), A x = beta reads e_{k-1} - e_k =
/// beta_k, so e is a running sum of -beta fixed up to a constant that makes
/// sum e = 0; x is then a running sum of e.
inline std::vector<double> solve_circulant(std::span<const double> beta) {
  const std::size_t n = beta.size();
  std::vector<double> x(n, 0.0);
  if (n <= 1) return x;
  // e_k = e_0 - sum_{i=1..k} beta_i
  std::vector<double> e(n);
  double run = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) run -= beta[k];
    e[k] = run;
  }
  double mean = 0.0;
  for (double v : e) mean += v;
  mean /= static_cast<double>(n);
  for (double& v : e) v -= mean;
  for (std::size_t k = 1; k < n; ++k) x[k] = x[k - 1] + e[k - 1];
  const double lo = *std::min_element(x.begin(), x.end());
  for (double& v : x) v -= lo;
  return x;
}

/// The unique D* >= 0 with a zero component such that the transport of
/// `source` by D* is a rotation of `target`.
inline TransportPlan solve_transport(const Configuration& source, const Configuration& target) {
  const std::size_t n = source.size();
  if (target.size() != n) throw Error("size-mismatch", "source and target differ in n");
  std::vector<double> beta(n);
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    beta[k] = target.gaps()[k] - source.gaps()[k];
    sum += beta[k];
  }
  if (std::abs(sum) > 1e-10) throw Error("invalid-gap-vectors", "gap changes must sum to zero");
  TransportPlan plan;
  plan.deltas = solve_circulant(beta);
  plan.source_gaps = source.gaps();
  plan.target_gaps = target.gaps();
  plan.max_delta = n ? *std::max_element(plan.deltas.begin(), plan.deltas.end()) : 0.0;
  return plan;
}

inline TransportPlan solve_transport_to_equal(const Configuration& source) {
  return solve_transport(source, equally_spaced(source.size()));
}

/// The configuration reached from `source` by the scaled transport t D*:
/// point k turns counterclockwise by t (D*_{k-1} - D*_k). With an equally
/// spaced target its gaps are (1 - t) alpha_k + t 2pi/n.
inline Configuration homotopy_config(const Configuration& source, const TransportPlan& plan,
                                     double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error("invalid-parameter", "homotopy needs t in [0, 1]");
  if (plan.deltas.size() != source.size())
    throw Error("size-mismatch", "plan does not match source");
  std::vector<double> scaled = plan.deltas;
  for (double& d : scaled) d *= t;
  return transport_endpoint(source, scaled);
}

struct CurvePoint {
  double t;
  double h;
};

/// h(t) = min of the potential of the homotopy configuration over the arc
/// from point j to point j+1, j the first zero index of the plan, sampled
/// on `grid` uniform values of t in [0, 1].
inline std::vector<CurvePoint> min_curve(const Kernel& kernel, const Configuration& source,
                                         const TransportPlan& plan, int grid,
                                         const SearchOptions& opts = {}) {
  if (grid < 2) throw Error("invalid-parameter", "min_curve needs grid >= 2");
  const std::size_t j = plan.zero_index();
  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    const double t = (i == grid - 1) ? 1.0 : static_cast<double>(i) / (grid - 1);
    const Configuration c = homotopy_config(source, plan, t);
    out.push_back({t, arc_minimum(kernel, c, j, opts.samples, opts.refine_iters).value});
  }
  return out;
}

struct InequalityReport {
  std::size_t samples_checked = 0;
  std::size_t violations = 0;
  double max_violation = 0.0;
  // Smallest signed improvement seen (positive means strict everywhere).
  double min_margin = std::numeric_limits<double>::infinity();
};

/// Checks the pair-move inequalities for two points: spreading (z1, z2) to
/// (z1 - eps, z2 + eps) must not lower the two-point potential on the arc
/// from z2 + eps to z1 - eps, and must not raise it on the arc from z1 to z2.
/// When z1 == z2 the inner arc is the single point z1 and only the outer
/// arc is sampled. Samples are interior points of each arc.
inline InequalityReport check_pair_inequality(const Kernel& kernel, double z1, double z2,
                                              double eps, int samples) {
  if (samples < 1) throw Error("invalid-parameter", "samples must be positive");
  const auto [m1, m2] = pair_move(z1, z2, eps);  // validates eps
  const Configuration before = Configuration::from_unordered({z1, z2});
  const Configuration after = Configuration::from_unordered({m1, m2});

  InequalityReport report;
  auto check = [&](double start, double length, bool expect_increase) {
    for (int i = 0; i < samples; ++i) {
      const double z = start + length * (i + 1) / (samples + 1);
      const double u0 = potential_value(kernel, before, z);
      const double u1 = potential_value(kernel, after, z);
      const double margin = expect_increase ? u1 - u0 : u0 - u1;
      const double tol = 1e-12 * std::max({1.0, std::abs(u0), std::abs(u1)});
      ++report.samples_checked;
      report.min_margin = std::min(report.min_margin, margin);
      if (margin < -tol) {
        ++report.violations;
        report.max_violation = std::max(report.max_violation, -margin);
      }
    }
  };
  const bool coincident = geodesic_distance(z1, z2) <= kAngleTol;
  const double outer = (coincident ? kTwoPi : ccw_length(z2, z1)) - 2.0 * eps;
  check(z2 + eps, outer, true);
  if (!coincident) check(z1, ccw_length(z1, z2), false);
  return report;
}

}  // namespace polar
