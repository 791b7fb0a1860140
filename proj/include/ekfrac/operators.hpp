#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "ekfrac/specfun.hpp"
#include "ekfrac/trajectory.hpp"

namespace ekfrac {

namespace detail {

// Node weights w[0..i] for the product-trapezoid rule
//   (J^beta f)(t_i) ~= sum_j w[j] f(t_j),
// obtained by integrating the piecewise-linear interpolant of f exactly
// against the kernel (t_i - s)^(beta-1) / Gamma(beta). Handles the weak
// endpoint singularity without losing order; works on uneven grids.
inline void product_trapezoid_row(const std::vector<double>& t, std::size_t i, double beta,
                                  std::vector<double>& w) {
  w.assign(i + 1, 0.0);
  const double ti = t[i];
  const double inv_gamma = 1.0 / gamma(beta);
  // d_j = (t_i - t_j)^beta, e_j = (t_i - t_j)^(beta+1)
  double B = ti - t[0];
  double dB = beta == 1.0 ? B : std::pow(B, beta);
  double eB = dB * B;
  for (std::size_t j = 0; j < i; ++j) {
    const double A = ti - t[j + 1];
    const double dA = beta == 1.0 ? A : std::pow(A, beta);
    const double eA = dA * A;
    const double I0 = (dB - dA) / beta;
    const double I1 = (eB - eA) / (beta + 1.0);
    const double hj = t[j + 1] - t[j];
    w[j] += inv_gamma * (I1 - A * I0) / hj;
    w[j + 1] += inv_gamma * (B * I0 - I1) / hj;
    B = A;
    dB = dA;
    eB = eA;
  }
}

// Interval weights b[0..i-1] for the product-rectangle (left value) rule,
// the explicit predictor companion of the rule above.
inline void product_rectangle_row(const std::vector<double>& t, std::size_t i, double beta,
                                  std::vector<double>& b) {
  b.assign(i, 0.0);
  const double ti = t[i];
  const double inv_gamma = 1.0 / gamma(beta);
  double dB = beta == 1.0 ? (ti - t[0]) : std::pow(ti - t[0], beta);
  for (std::size_t j = 0; j < i; ++j) {
    const double A = ti - t[j + 1];
    const double dA = beta == 1.0 ? A : std::pow(A, beta);
    b[j] = inv_gamma * (dB - dA) / beta;
    dB = dA;
  }
}

inline void require_from_zero(const Trajectory& f, const char* op) {
  f.validate();
  if (f.empty()) throw ValidationError(std::string(op) + ": empty trajectory");
  if (f.times.front() != 0.0)
    throw ValidationError(std::string(op) + ": grid must start at t = 0");
}

}  // namespace detail

/// Riemann-Liouville fractional integral J^beta on the trajectory's own
/// grid, beta in (0, 1]. Node 0 maps to 0.
inline Trajectory rl_integral(const Trajectory& f, double beta) {
  detail::require_from_zero(f, "rl_integral");
  if (!(beta > 0.0 && beta <= 1.0)) throw ValidationError("rl_integral: need beta in (0,1]");
  Trajectory out;
  out.times = f.times;
  out.values.assign(f.size(), 0.0);
  std::vector<double> w;
  for (std::size_t i = 1; i < f.size(); ++i) {
    detail::product_trapezoid_row(f.times, i, beta, w);
    double s = 0.0;
    for (std::size_t j = 0; j <= i; ++j) s += w[j] * f.values[j];
    out.values[i] = s;
  }
  return out;
}

/// Caputo derivative of order alpha in (0,1): D^alpha f = J^(1-alpha) f'.
/// Uses the stored derivative samples when present, otherwise second-order
/// finite differences (which needs at least 3 nodes).
inline Trajectory caputo_derivative(const Trajectory& f, double alpha) {
  detail::require_from_zero(f, "caputo_derivative");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("caputo_derivative: need alpha in (0,1)");
  Trajectory g;
  g.times = f.times;
  if (f.has_derivs()) {
    g.values = f.derivs;
  } else {
    if (f.size() < 3)
      throw ValidationError("caputo_derivative: need derivs or at least 3 nodes");
    g.values = detail::estimate_derivatives(f.times, f.values);
  }
  return rl_integral(g, 1.0 - alpha);
}

/// Erdelyi-Kober integral I_m^{eta,alpha}. The m = 1 path evaluates
/// t^(-eta-alpha) J^alpha(s^eta f(s)); general m > 0 reduces to it through
/// the substitution sigma = s^m. The value at t = 0 is 0.
inline Trajectory ek_integral(const Trajectory& f, double eta, double alpha, double m = 1.0) {
  detail::require_from_zero(f, "ek_integral");
  if (eta < 0.0) throw ValidationError("ek_integral: need eta >= 0");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("ek_integral: need alpha in (0,1)");
  if (!(m > 0.0)) throw ValidationError("ek_integral: need m > 0");

  if (m != 1.0) {
    Trajectory sub;
    sub.values = f.values;
    sub.times.resize(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) sub.times[i] = std::pow(f.times[i], m);
    Trajectory res = ek_integral(sub, eta, alpha, 1.0);
    res.times = f.times;
    return res;
  }

  Trajectory g;
  g.times = f.times;
  g.values.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    g.values[i] = (eta == 0.0 ? 1.0 : std::pow(f.times[i], eta)) * f.values[i];
  Trajectory out = rl_integral(g, alpha);
  for (std::size_t i = 1; i < out.size(); ++i)
    out.values[i] *= std::pow(out.times[i], -eta - alpha);
  out.values[0] = 0.0;
  return out;
}

/// Grunwald-Letnikov coefficients for a given fractional order.
struct GLWeights {
  double order = 0.0;
  std::vector<double> weights;
};

/// omega_0 = 1, omega_k = omega_{k-1} (1 - (order+1)/k), order in (0, 2).
inline GLWeights gl_weights(double order, int n) {
  if (!(order > 0.0 && order < 2.0)) throw ValidationError("gl_weights: need order in (0,2)");
  if (n < 1) throw ValidationError("gl_weights: need n >= 1");
  GLWeights w;
  w.order = order;
  w.weights.resize(static_cast<std::size_t>(n) + 1);
  w.weights[0] = 1.0;
  for (int k = 1; k <= n; ++k)
    w.weights[k] = w.weights[k - 1] * (1.0 - (order + 1.0) / static_cast<double>(k));
  return w;
}

namespace detail {

enum class InterpKind { Linear, Quadratic };

inline Trajectory resample(const Trajectory& f, std::span<const double> new_times, InterpKind kind) {
  f.validate();
  if (f.size() < 2) throw ValidationError("resample: need at least 2 nodes");
  const double lo = f.times.front(), hi = f.times.back();
  Trajectory out;
  out.times.assign(new_times.begin(), new_times.end());
  out.values.resize(new_times.size());
  for (std::size_t k = 0; k < new_times.size(); ++k) {
    const double x = new_times[k];
    if (x < lo || x > hi) throw ValidationError("resample: extrapolation requested");
    auto it = std::upper_bound(f.times.begin(), f.times.end(), x);
    std::size_t j = it == f.times.begin() ? 0 : static_cast<std::size_t>(it - f.times.begin()) - 1;
    if (j + 1 >= f.size()) j = f.size() - 2;
    if (x == f.times[j]) {
      out.values[k] = f.values[j];  // exact at original nodes
      continue;
    }
    if (x == f.times[j + 1]) {
      out.values[k] = f.values[j + 1];
      continue;
    }
    if (kind == InterpKind::Linear || f.size() < 3) {
      const double s = (x - f.times[j]) / (f.times[j + 1] - f.times[j]);
      out.values[k] = (1.0 - s) * f.values[j] + s * f.values[j + 1];
    } else {
      // three-point stencil centered as well as the boundary allows
      std::size_t a = j == 0 ? 0 : j - 1;
      if (a + 2 >= f.size()) a = f.size() - 3;
      if (j > 0 && j + 2 < f.size()) {
        const double mid_left = f.times[j];       // stencil {j-1, j, j+1}
        const double mid_right = f.times[j + 1];  // stencil {j, j+1, j+2}
        a = std::fabs(x - mid_left) <= std::fabs(x - mid_right) ? j - 1 : j;
      }
      const double x0 = f.times[a], x1 = f.times[a + 1], x2 = f.times[a + 2];
      const double l0 = (x - x1) * (x - x2) / ((x0 - x1) * (x0 - x2));
      const double l1 = (x - x0) * (x - x2) / ((x1 - x0) * (x1 - x2));
      const double l2 = (x - x0) * (x - x1) / ((x2 - x0) * (x2 - x1));
      out.values[k] = l0 * f.values[a] + l1 * f.values[a + 1] + l2 * f.values[a + 2];
    }
  }
  return out;
}

}  // namespace detail

/// Piecewise-linear interpolation onto a new grid inside the sampled range.
inline Trajectory resample_linear(const Trajectory& f, std::span<const double> new_times) {
  return detail::resample(f, new_times, detail::InterpKind::Linear);
}

/// Local three-point (quadratic) interpolation, third-order local error.
inline Trajectory resample_quadratic(const Trajectory& f, std::span<const double> new_times) {
  return detail::resample(f, new_times, detail::InterpKind::Quadratic);
}

}  // namespace ekfrac
