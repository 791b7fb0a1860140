#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "ekfrac/errors.hpp"

namespace ekfrac {

/// Sampled function on a strictly increasing, nonnegative time grid.
/// `derivs` optionally carries first-derivative estimates at the same nodes.
struct Trajectory {
  std::vector<double> times;
  std::vector<double> values;
  std::vector<double> derivs;  // empty when absent

  [[nodiscard]] std::size_t size() const { return times.size(); }
  [[nodiscard]] bool empty() const { return times.empty(); }
  [[nodiscard]] bool has_derivs() const { return !derivs.empty(); }

  void validate() const {
    if (times.size() != values.size())
      throw ValidationError("trajectory: times/values length mismatch");
    if (has_derivs() && derivs.size() != times.size())
      throw ValidationError("trajectory: derivs length mismatch");
    if (!times.empty() && times.front() < 0.0)
      throw ValidationError("trajectory: times must start at t >= 0");
    for (std::size_t i = 1; i < times.size(); ++i)
      if (!(times[i] > times[i - 1]))
        throw ValidationError("trajectory: times must be strictly increasing");
  }
};

enum class GridMode { Uniform, Adaptive };

/// Step policy for the marching solvers. In Adaptive mode the first
/// `n_warmup` steps are uniform at `h`; afterwards the step follows the
/// history-based rule, clamped to [h_min, h_max].
struct GridPolicy {
  GridMode mode = GridMode::Uniform;
  double h = 1e-3;
  double t_end = 5.0;
  double h_min = 1e-6;   // Adaptive only
  double h_max = 1e-1;   // Adaptive only
  int n_warmup = 4;

  void validate() const {
    if (!(h > 0.0)) throw ValidationError("grid: h must be positive");
    if (!(t_end > 0.0)) throw ValidationError("grid: t_end must be positive");
    if (h > t_end) throw ValidationError("grid: h exceeds t_end");
    if (mode == GridMode::Adaptive) {
      if (!(h_min > 0.0 && h_min <= h && h <= h_max))
        throw ValidationError("grid: need 0 < h_min <= h <= h_max");
      if (n_warmup < 4) throw ValidationError("grid: n_warmup must be >= 4");
    }
  }
};

/// Nodes 0, h, 2h, ..., with the last node snapped exactly onto t_end.
inline std::vector<double> make_uniform_grid(double h, double t_end) {
  if (!(h > 0.0) || !(t_end > 0.0)) throw ValidationError("uniform grid: h and t_end must be positive");
  const auto n = static_cast<std::size_t>(std::ceil(t_end / h - 1e-9));
  std::vector<double> t(n + 1);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<double>(i) * h;
  t[n] = t_end;
  return t;
}

namespace detail {

// Derivative of the 3-point Lagrange interpolant through (x0,f0),(x1,f1),(x2,f2),
// evaluated at x.
inline double lagrange3_deriv(double x, double x0, double x1, double x2,
                              double f0, double f1, double f2) {
  return f0 * (2.0 * x - x1 - x2) / ((x0 - x1) * (x0 - x2)) +
         f1 * (2.0 * x - x0 - x2) / ((x1 - x0) * (x1 - x2)) +
         f2 * (2.0 * x - x0 - x1) / ((x2 - x0) * (x2 - x1));
}

// Second-order finite-difference derivative estimates on a possibly
// non-uniform grid: centered stencils inside, one-sided at the ends.
inline std::vector<double> estimate_derivatives(const std::vector<double>& t,
                                                const std::vector<double>& f) {
  const std::size_t n = t.size();
  if (n < 3) throw ValidationError("derivative estimation needs at least 3 nodes");
  std::vector<double> d(n);
  d[0] = lagrange3_deriv(t[0], t[0], t[1], t[2], f[0], f[1], f[2]);
  for (std::size_t i = 1; i + 1 < n; ++i)
    d[i] = lagrange3_deriv(t[i], t[i - 1], t[i], t[i + 1], f[i - 1], f[i], f[i + 1]);
  d[n - 1] = lagrange3_deriv(t[n - 1], t[n - 3], t[n - 2], t[n - 1], f[n - 3], f[n - 2], f[n - 1]);
  return d;
}

}  // namespace detail

/// Second-order finite differences over the whole trajectory.
inline std::vector<double> estimate_derivatives(const Trajectory& f) {
  f.validate();
  return detail::estimate_derivatives(f.times, f.values);
}

}  // namespace ekfrac
