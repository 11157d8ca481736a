#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "polar/circle_config.hpp"
#include "polar/kernels.hpp"
#include "polar/nelder_mead.hpp"
#include "polar/potential.hpp"
#include "polar/random.hpp"

namespace polar {

struct OptimizeOptions {
  int restarts = 8;
  int max_iters = 2000;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  SearchOptions search{};
};

struct RestartRecord {
  std::vector<double> start_gaps;
  double final_value;
  int iterations;
};

struct OptimizeResult {
  Configuration best_config;
  double best_value = -std::numeric_limits<double>::infinity();
  std::vector<RestartRecord> per_restart;
  bool converged_to_equal_spacing = false;
  std::uint64_t seed = 0;
};

/// Projects a raw gap vector onto the gap simplex: negatives clipped to 0,
/// then rescaled to sum 2pi.
inline std::vector<double> project_gaps(std::vector<double> g) {
  double total = 0.0;
  for (double& v : g) {
    v = std::max(v, 0.0);
    total += v;
  }
  if (!(total > 0.0)) return std::vector<double>(g.size(), kTwoPi / g.size());
  for (double& v : g) v *= kTwoPi / total;
  return g;
}

inline double max_gap_deviation(const Configuration& c) {
  const double target = kTwoPi / c.size();
  double dev = 0.0;
  for (double g : c.gaps()) dev = std::max(dev, std::abs(g - target));
  return dev;
}

/// Maximizes the polarization over n-point configurations with point 0 fixed
/// at angle 0. The search variables are the first n-1 gaps (the last closes
/// the circle); restart 0 starts from equal gaps, later restarts from
/// uniformly random gap vectors. A restart displaces the incumbent only when
/// it is better by more than 1e-12 relative, so ties go to the lower index.
inline OptimizeResult maximize_polarization(const Kernel& kernel, std::size_t n,
                                            const OptimizeOptions& opts = {}) {
  if (n < 1) throw Error("invalid-parameter", "n must be >= 1");
  OptimizeResult result;
  result.seed = opts.seed;
  Rng rng(opts.seed);

  auto gaps_of = [n](const std::vector<double>& x) {
    std::vector<double> g(x);
    double sum = 0.0;
    for (double v : x) sum += v;
    g.push_back(kTwoPi - sum);
    return project_gaps(std::move(g));
  };
  auto config_of = [&](const std::vector<double>& x) {
    return Configuration::from_gaps(0.0, gaps_of(x));
  };
  auto objective = [&](const std::vector<double>& x) {
    return -polarization(kernel, config_of(x), opts.search).value;
  };

  const double equal = kTwoPi / static_cast<double>(n);
  NelderMeadOptions nm{opts.max_iters, opts.tol, 0.25 * equal};
  for (int r = 0; r < std::max(opts.restarts, 1); ++r) {
    std::vector<double> start(n - 1, equal);
    if (r > 0) {
      std::vector<double> w(n);
      for (double& v : w) v = rng.exponential();
      const auto g = project_gaps(w);
      std::copy(g.begin(), g.end() - 1, start.begin());
    }
    const NelderMeadResult res = nelder_mead_minimize(objective, start, nm);
    const double value = -res.value;
    result.per_restart.push_back({gaps_of(start), value, res.iterations});
    const double margin = 1e-12 * std::max(1.0, std::abs(result.best_value));
    if (r == 0 || value > result.best_value + margin) {
      result.best_value = value;
      result.best_config = config_of(res.x);
    }
  }
  result.converged_to_equal_spacing = max_gap_deviation(result.best_config) < 1e-6;
  return result;
}

struct StrictnessReport {
  int trials = 0;
  int nonnegative_differences = 0;  // M(perturbed) - M(equal) >= 0
  double min_deficit = std::numeric_limits<double>::infinity();
  double max_deficit = 0.0;
  double equal_value = 0.0;
  bool non_strict_warning = false;
};

/// Perturbs equal gaps by i.i.d. uniform offsets in [-magnitude, magnitude]
/// (mean removed so the gaps still sum to 2pi) and records
/// M(equal) - M(perturbed) per trial.
inline StrictnessReport perturbation_test(const Kernel& kernel, std::size_t n, double magnitude,
                                          int trials, std::uint64_t seed,
                                          const SearchOptions& search = {}) {
  const double equal = kTwoPi / static_cast<double>(n);
  if (n < 2) throw Error("invalid-parameter", "perturbation needs n >= 2");
  if (!(magnitude > 0.0 && magnitude < equal / 4.0))
    throw Error("invalid-parameter", "magnitude must lie in (0, (2pi/n)/4)");
  StrictnessReport report;
  report.non_strict_warning = !kernel.flags().strictly_convex;
  report.equal_value = polarization(kernel, equally_spaced(n), search).value;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<double> d(n);
    double mean = 0.0;
    for (double& v : d) {
      v = rng.uniform(-magnitude, magnitude);
      mean += v / static_cast<double>(n);
    }
    std::vector<double> g(n);
    for (std::size_t k = 0; k < n; ++k) g[k] = equal + d[k] - mean;
    const double value = polarization(kernel, Configuration::from_gaps(0.0, g), search).value;
    const double deficit = report.equal_value - value;
    ++report.trials;
    if (value - report.equal_value >= 0.0) ++report.nonnegative_differences;
    report.min_deficit = std::min(report.min_deficit, deficit);
    report.max_deficit = std::max(report.max_deficit, deficit);
  }
  return report;
}

}  // namespace polar
