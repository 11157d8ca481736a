#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polar/error.hpp"

namespace polar {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct KernelFlags {
  bool non_increasing = true;
  bool convex = true;
  bool strictly_convex = true;
};

/// A function f of geodesic distance on [0, pi]: non-increasing, convex on
/// (0, pi], bounded below, with f(0) equal to its right limit (possibly +inf).
///
/// Adding a constant to f shifts every potential by n times that constant, so
/// argmins of potentials and optimal configurations do not depend on it. This
/// is why kernels here only need to be bounded below rather than nonnegative.
class Kernel {
 public:
  using Function = std::function<double(double)>;

  Kernel(Function f, double value_at_zero, KernelFlags flags, std::string label)
      : f_(std::move(f)), value_at_zero_(value_at_zero), flags_(flags), label_(std::move(label)) {}

  double eval(double theta) const { return theta <= 0.0 ? value_at_zero_ : f_(theta); }
  double operator()(double theta) const { return eval(theta); }

  double value_at_zero() const noexcept { return value_at_zero_; }
  bool singular() const noexcept { return std::isinf(value_at_zero_); }
  const KernelFlags& flags() const noexcept { return flags_; }
  const std::string& label() const noexcept { return label_; }

 private:
  Function f_;
  double value_at_zero_;
  KernelFlags flags_;
  std::string label_;
};

namespace detail {
inline double chord(double theta) { return 2.0 * std::sin(0.5 * theta); }

inline std::string format_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
}  // namespace detail

/// (2 sin(theta/2))^(-s), the inverse s-power of chord length.
inline Kernel riesz_kernel(double s) {
  if (!(s > 0.0)) throw Error("invalid-parameter", "riesz kernel needs s > 0");
  return Kernel([s](double theta) { return std::pow(detail::chord(theta), -s); }, kInf, {},
                "riesz:" + detail::format_param(s));
}

/// -log(2 sin(theta/2)); bounded below by -log 2.
inline Kernel log_kernel() {
  return Kernel([](double theta) { return -std::log(detail::chord(theta)); }, kInf, {}, "log");
}

/// -(2 sin(theta/2))^alpha. Negation turns the min-max problem for sums of
/// |z - z_k|^alpha into a max-min polarization problem.
inline Kernel power_kernel(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw Error("invalid-parameter", "power kernel needs 0 < alpha <= 1");
  KernelFlags flags{true, true, alpha < 1.0};
  return Kernel([alpha](double theta) { return -std::pow(detail::chord(theta), alpha); }, 0.0,
                flags, "power:" + detail::format_param(alpha));
}

// Flags are recorded as declared; validate_kernel checks them.
inline Kernel custom_kernel(Kernel::Function f, double value_at_zero, KernelFlags flags,
                            std::string label = "custom") {
  return Kernel(std::move(f), value_at_zero, flags, std::move(label));
}

struct ValidationReport {
  bool monotone = true;
  bool convex = true;
  bool strictly_convex = true;
  bool finite = true;
  // First violating sample pair (theta1, theta2) per property, if any.
  std::optional<std::pair<double, double>> monotone_violation;
  std::optional<std::pair<double, double>> convex_violation;
  std::optional<std::pair<double, double>> strict_violation;
  std::optional<double> nonfinite_at;

  bool all_pass() const { return monotone && convex && strictly_convex && finite; }
};

/// Grid check of the declared structure flags on theta_i = pi * i / grid_size,
/// i = 1..grid_size. Monotonicity uses consecutive samples; convexity uses
/// midpoint tests on consecutive triples with 1e-12 relative tolerance, and
/// strict convexity requires the midpoint gap to exceed that tolerance.
inline ValidationReport validate_kernel(const Kernel& kernel, int grid_size) {
  if (grid_size < 3) throw Error("invalid-parameter", "validate_kernel needs grid_size >= 3");
  constexpr double kRelTol = 1e-12;
  const double h = std::numbers::pi / grid_size;

  ValidationReport report;
  std::vector<double> values(static_cast<std::size_t>(grid_size) + 1);
  for (int i = 1; i <= grid_size; ++i) {
    values[i] = kernel.eval(h * i);
    if (!std::isfinite(values[i]) && !report.nonfinite_at) {
      report.finite = false;
      report.nonfinite_at = h * i;
    }
  }
  if (!report.finite) return report;

  const auto& flags = kernel.flags();
  for (int i = 1; i < grid_size; ++i) {
    const double scale = std::max({1.0, std::abs(values[i]), std::abs(values[i + 1])});
    if (flags.non_increasing && values[i + 1] > values[i] + kRelTol * scale && report.monotone) {
      report.monotone = false;
      report.monotone_violation = std::pair{h * i, h * (i + 1)};
    }
  }
  for (int i = 2; i < grid_size; ++i) {
    const double mid = values[i];
    const double avg = 0.5 * (values[i - 1] + values[i + 1]);
    const double tol = kRelTol * std::max({1.0, std::abs(values[i - 1]), std::abs(values[i + 1])});
    if (flags.convex && mid > avg + tol && report.convex) {
      report.convex = false;
      report.convex_violation = std::pair{h * (i - 1), h * (i + 1)};
    }
    if (flags.strictly_convex && !(mid < avg - tol) && report.strictly_convex) {
      report.strictly_convex = false;
      report.strict_violation = std::pair{h * (i - 1), h * (i + 1)};
    }
  }
  return report;
}

}  // namespace polar
