#pragma once

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "ekfrac/diagnostics.hpp"
#include "ekfrac/operators.hpp"
#include "ekfrac/quadrature.hpp"
#include "ekfrac/relax.hpp"
#include "ekfrac/trajectory.hpp"

namespace ekfrac {

/// Damped fractional oscillator parameters. The derived constants are
/// always recomputed from (alpha, lam, eta):
///   delta = eta + 1 - alpha,  mu = lam * delta (= k0),  gamma_exp = eta - alpha.
struct OscParams {
  double alpha;
  double lam;
  double eta;

  [[nodiscard]] double delta() const { return eta + 1.0 - alpha; }
  [[nodiscard]] double mu() const { return lam * delta(); }
  [[nodiscard]] double gamma_exp() const { return eta - alpha; }

  void validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ValidationError("oscillator: need alpha in (0,1]");
    if (!(lam > 0.0)) throw ValidationError("oscillator: need lam > 0");
    if (eta < 0.0) throw ValidationError("oscillator: need eta >= 0");
  }
};

/// Interval (t_-, t_+) on which the Sturm comparison against u'' + k^2 u = 0
/// applies, plus the derived reporting quantities.
struct SturmWindow {
  double k = 0.0;
  double t_minus = 0.0;        // raw root; negative for eta < 2
  double t_plus = 0.0;
  double width = 0.0;          // t_plus - t_minus
  double zero_spacing_bound = 0.0;  // pi / k
  double small_k_width = 0.0;  // 2 sqrt(2 eta)/lam (1 - k^2 (2+eta)/lam^2)
};

struct OscOptions {
  bool quadratic_resample = false;  // GL history interpolation order
  double u0 = 1.0;
  double v0 = 1.0;
};

struct OscSolution {
  Trajectory u;
  Trajectory w;  // w = t^eta u'
};

/// Hybrid classical/fractional march of
///   D u = t^-eta w,   D^alpha w = -lam t^(delta-eta) w - mu t^gamma u,
/// trapezoid in u, implicit Grunwald-Letnikov in w. The GL sum acts on
/// w - w(0) so that it approximates the Caputo derivative when w(0) != 0;
/// w(0) is t^eta u'(0) at 0+: zero for eta > 0 and v0 for eta = 0. The first
/// u-increment integrates t^-eta w as u'(0) = v0 exactly, which encodes the
/// analytic cancellation of the t^-eta factor. On non-uniform grids the GL
/// stencil is a shadow uniform grid at the current step, filled by linear
/// (optionally quadratic) resampling of the w history.
inline OscSolution solve_oscillator(const OscParams& p, const GridPolicy& grid,
                                    const OscOptions& opts = {}) {
  p.validate();
  grid.validate();
  const double alpha = p.alpha, lam = p.lam, eta = p.eta, mu = p.mu();
  const double w0 = eta == 0.0 ? opts.v0 : 0.0;

  Trajectory u, w;
  u.times.push_back(0.0);
  u.values.push_back(opts.u0);
  u.derivs.push_back(opts.v0);
  w.times.push_back(0.0);
  w.values.push_back(w0);

  GLWeights gl = gl_weights(alpha, 64);
  auto omega = [&](std::size_t k) -> double {
    while (gl.weights.size() <= k) {
      const std::size_t j = gl.weights.size();
      gl.weights.push_back(gl.weights[j - 1] * (1.0 - (alpha + 1.0) / static_cast<double>(j)));
    }
    return gl.weights[k];
  };

  const bool uniform = grid.mode == GridMode::Uniform;
  int step_index = 0;
  while (u.times.back() < grid.t_end - 1e-12 * grid.t_end) {
    double h = grid.h;
    if (!uniform && step_index >= grid.n_warmup && u.size() >= 4) {
      Trajectory tail;
      tail.times.assign(u.times.end() - 4, u.times.end());
      tail.values.assign(u.values.end() - 4, u.values.end());
      tail.derivs.assign(u.derivs.end() - 4, u.derivs.end());
      h = adaptive_step(tail, grid.h, {grid.h_min, grid.h_max});
    }
    const double t_prev = u.times.back();
    if (t_prev + 1.5 * h >= grid.t_end) h = grid.t_end - t_prev;
    const double t_new = t_prev + h;
    if (!(t_new > t_prev)) throw SolverError("oscillator: step underflow");
    const std::size_t n = u.size();  // new node index

    // GL history sum over a stencil of step h reaching back to t = 0
    double S = 0.0;
    if (uniform && h == grid.h) {
      for (std::size_t k = 1; k <= n; ++k) S += omega(k) * (w.values[n - k] - w0);
    } else {
      const auto K = static_cast<std::size_t>(std::floor(t_new / h + 1e-9));
      std::vector<double> stencil(K);
      for (std::size_t k = 1; k <= K; ++k) stencil[k - 1] = std::max(0.0, t_new - static_cast<double>(k) * h);
      std::vector<double> rev(stencil.rbegin(), stencil.rend());
      Trajectory hist = opts.quadratic_resample ? resample_quadratic(w, rev) : resample_linear(w, rev);
      for (std::size_t k = 1; k <= K; ++k) S += omega(k) * (hist.values[K - k] - w0);
    }

    // u_n = A + B w_n from the trapezoid update of D u = t^-eta w
    const double g_prev = n == 1 ? opts.v0 : std::pow(t_prev, -eta) * w.values[n - 1];
    const double A = u.values[n - 1] + 0.5 * h * g_prev;
    const double B = 0.5 * h * std::pow(t_new, -eta);

    const double r = std::pow(h, -alpha);
    const double tau = std::pow(t_new, 1.0 - alpha);        // delta - eta = 1 - alpha
    const double sigma = std::pow(t_new, eta - alpha);
    double theta = 1.0 - 0.5 * alpha;  // second-order shifted evaluation point
    double R_prev = 0.0;
    if (n == 1) {
      theta = 1.0;  // fully implicit first step; t = 0 is singular in the load terms
    } else {
      R_prev = -lam * std::pow(t_prev, 1.0 - alpha) * w.values[n - 1] -
               mu * std::pow(t_prev, eta - alpha) * u.values[n - 1];
    }
    const double denom = r + theta * lam * tau + theta * mu * sigma * B;
    const double w_new = (r * (w0 - S) - theta * mu * sigma * A + (1.0 - theta) * R_prev) / denom;
    const double u_new = A + B * w_new;
    if (!std::isfinite(u_new) || !std::isfinite(w_new))
      throw SolverError("oscillator: non-finite state at t = " + std::to_string(t_new));

    u.times.push_back(t_new);
    u.values.push_back(u_new);
    u.derivs.push_back(std::pow(t_new, -eta) * w_new);
    w.times.push_back(t_new);
    w.values.push_back(w_new);
    ++step_index;
  }
  w.derivs = detail::estimate_derivatives(w.times, w.values);
  return {std::move(u), std::move(w)};
}

/// General solution of the alpha = 1 equation,
///   u(t) = e^{-lam t} ( c1 + c2 INT_1^t v^-eta e^{lam v} dv ),
/// with the integral base point fixed at t0 = 1. Evaluated in the
/// overflow-free form c1 e^{-lam t} + c2 INT_1^t v^-eta e^{lam (v-t)} dv by
/// adaptive quadrature at relative tolerance 1e-10.
inline double alpha1_general_solution(double lam, double eta, double c1, double c2, double t) {
  if (!(lam > 0.0)) throw ValidationError("alpha1_general_solution: need lam > 0");
  if (eta < 0.0) throw ValidationError("alpha1_general_solution: need eta >= 0");
  if (!(t > 0.0)) throw ValidationError("alpha1_general_solution: need t > 0");
  double integral = 0.0;
  if (c2 != 0.0)
    integral = integrate([&](double v) { return std::pow(v, -eta) * std::exp(lam * (v - t)); },
                         1.0, t, 1e-10);
  return c1 * std::exp(-lam * t) + c2 * integral;
}

/// Sturm potential q(t) = eta(2-eta)/(4t^2) + lam eta/(2t) - lam^2/4 of the
/// transformed equation v'' + q v = 0, u = t^(-eta/2) e^(-lam t/2) v.
inline double sturm_q(double lam, double eta, double t) {
  if (!(t > 0.0)) throw ValidationError("sturm_q: need t > 0");
  return eta * (2.0 - eta) / (4.0 * t * t) + lam * eta / (2.0 * t) - lam * lam / 4.0;
}

/// Roots of q(t) = k^2 and derived reporting values. For eta in (0,2) the
/// lower root is negative, so the usable window starts at max(t_minus, 0).
inline SturmWindow oscillation_window(double lam, double eta, double k) {
  if (!(lam > 0.0)) throw ValidationError("oscillation_window: need lam > 0");
  if (!(eta > 0.0 && eta < 2.0)) throw ValidationError("oscillation_window: need eta in (0,2)");
  if (!(k > 0.0)) throw ValidationError("oscillation_window: need k > 0");
  const double disc = 2.0 * eta * lam * lam + 4.0 * k * k * eta * (2.0 - eta);
  if (disc < 0.0) throw ValidationError("oscillation_window: negative discriminant");
  const double root = std::sqrt(disc);
  const double den = lam * lam + 4.0 * k * k;
  SturmWindow win;
  win.k = k;
  win.t_minus = (lam * eta - root) / den;
  win.t_plus = (lam * eta + root) / den;
  win.width = win.t_plus - win.t_minus;
  win.zero_spacing_bound = std::numbers::pi / k;
  win.small_k_width = 2.0 * std::sqrt(2.0 * eta) / lam * (1.0 - k * k * (2.0 + eta) / (lam * lam));
  return win;
}

/// Sign-change census of u and u' with the overdamped/underdamped verdict:
/// Underdamped iff u' changes sign at least once. The |u'/u| series skips
/// nodes with |u| < 1e-300 or vanishing derivative.
inline DiagnosticsReport classify_trajectory(const Trajectory& u) {
  u.validate();
  if (u.size() < 3) throw ValidationError("classify_trajectory: need at least 3 nodes");
  DiagnosticsReport rep;
  rep.zero_crossings = detail::sign_change_times(u.times, u.values);
  const std::vector<double> du =
      u.has_derivs() ? u.derivs : detail::estimate_derivatives(u.times, u.values);
  rep.deriv_sign_changes = detail::sign_change_times(u.times, du, 1e-12);
  rep.classification =
      rep.deriv_sign_changes.empty() ? Damping::Overdamped : Damping::Underdamped;
  for (std::size_t i = 1; i + 1 < u.size(); ++i) {
    if (std::fabs(u.values[i]) < 1e-300 || du[i] == 0.0) continue;
    const double r = std::fabs(du[i] / u.values[i]);
    if (!std::isfinite(r) || r == 0.0) continue;
    rep.decay_rate.times.push_back(u.times[i]);
    rep.decay_rate.values.push_back(r);
  }
  return rep;
}

/// Checks the Sturm zero-spacing bound: every pair of consecutive zeros of
/// v = u / p inside the usable window must be closer than pi/k. A window
/// wider than pi/k containing no zero at all is a violation. The grid must
/// resolve pi/k with at least 20 nodes.
inline bool verify_sturm_bound(const Trajectory& u, const SturmWindow& win, double lam, double eta) {
  u.validate();
  if (u.size() < 2) throw ValidationError("verify_sturm_bound: need at least 2 nodes");
  const double bound = win.zero_spacing_bound;
  double max_spacing = 0.0;
  for (std::size_t i = 1; i < u.size(); ++i)
    max_spacing = std::max(max_spacing, u.times[i] - u.times[i - 1]);
  if (max_spacing > bound / 20.0)
    throw ValidationError("verify_sturm_bound: grid does not resolve pi/k with 20 nodes");

  const double lo = std::max(win.t_minus, 0.0);
  std::vector<double> vt, vv;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double t = u.times[i];
    if (t <= lo || t >= win.t_plus) continue;
    // v = u / p with p = t^(-eta/2) e^(-lam t/2); window times are small
    // enough that the growing factor cannot overflow
    vt.push_back(t);
    vv.push_back(u.values[i] * std::pow(t, eta / 2.0) * std::exp(lam * t / 2.0));
  }
  const std::vector<double> zeros = detail::sign_change_times(vt, vv);
  for (std::size_t i = 1; i < zeros.size(); ++i)
    if (zeros[i] - zeros[i - 1] >= bound) return false;
  if (zeros.empty() && (win.t_plus - lo) > bound) return false;
  return true;
}

}  // namespace ekfrac
