#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace polar {

struct NelderMeadOptions {
  int max_iters = 2000;
  double tol = 1e-10;  // stop when every vertex is within tol of the best
  double initial_step = 0.1;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value;
  int iterations;
};

/// Downhill simplex minimization (reflection 1, expansion 2, contraction
/// 1/2, shrink 1/2). Deterministic; the best vertex is never discarded, so
/// the result is no worse than the start.
template <class Objective>
NelderMeadResult nelder_mead_minimize(Objective&& f, std::vector<double> x0,
                                      const NelderMeadOptions& opts = {}) {
  const std::size_t dim = x0.size();
  if (dim == 0) return {x0, f(x0), 0};

  std::vector<std::vector<double>> v(dim + 1, x0);
  for (std::size_t i = 0; i < dim; ++i) v[i + 1][i] += opts.initial_step;
  std::vector<double> fv(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) fv[i] = f(v[i]);

  std::vector<std::size_t> idx(dim + 1);
  auto order = [&] {
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
  };
  auto diameter = [&] {
    double d = 0.0;
    const auto& best = v[idx[0]];
    for (std::size_t i = 1; i <= dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) d = std::max(d, std::abs(v[idx[i]][k] - best[k]));
    return d;
  };
  auto along = [&](const std::vector<double>& c, const std::vector<double>& w, double t) {
    std::vector<double> p(dim);
    for (std::size_t k = 0; k < dim; ++k) p[k] = c[k] + t * (w[k] - c[k]);
    return p;
  };

  int it = 0;
  order();
  for (; it < opts.max_iters && diameter() > opts.tol; ++it) {
    const std::size_t worst = idx[dim];
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += v[idx[i]][k] / static_cast<double>(dim);

    auto xr = along(centroid, v[worst], -1.0);
    const double fr = f(xr);
    if (fr < fv[idx[0]]) {
      auto xe = along(centroid, v[worst], -2.0);
      const double fe = f(xe);
      if (fe < fr) { v[worst] = std::move(xe); fv[worst] = fe; }
      else { v[worst] = std::move(xr); fv[worst] = fr; }
    } else if (fr < fv[idx[dim - 1]]) {
      v[worst] = std::move(xr);
      fv[worst] = fr;
    } else {
      const bool outside = fr < fv[worst];
      auto xc = along(centroid, outside ? xr : v[worst], 0.5);
      const double fc = f(xc);
      if (fc < std::min(fr, fv[worst])) {
        v[worst] = std::move(xc);
        fv[worst] = fc;
      } else {
        const auto best = v[idx[0]];
        for (std::size_t i = 1; i <= dim; ++i) {
          v[idx[i]] = along(best, v[idx[i]], 0.5);
          fv[idx[i]] = f(v[idx[i]]);
        }
      }
    }
    order();
  }
  return {v[idx[0]], fv[idx[0]], it};
}

}  // namespace polar
