#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "ekfrac/fractional_adams.hpp"
#include "ekfrac/operators.hpp"
#include "ekfrac/specfun.hpp"
#include "ekfrac/trajectory.hpp"

namespace ekfrac {

/// Parameters of the time-varying relaxation problem
///   D^alpha y = -lam t^beta y,  y(0) = 1,
/// with alpha in (0,1] and beta > -alpha. The series representation and the
/// complete-monotonicity guarantees additionally need beta <= 1-alpha; the
/// solver itself accepts the larger range (the alpha = 1 equation is
/// classical for every beta > -1). eta enters only the Erdelyi-Kober
/// solution map and the coupled formulation.
struct RelaxParams {
  double alpha;
  double beta;
  double lam;
  double eta = 0.0;

  void validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ValidationError("relax: need alpha in (0,1]");
    if (!(beta > -alpha)) throw ValidationError("relax: need beta > -alpha");
    if (!(lam > 0.0)) throw ValidationError("relax: need lam > 0");
    if (eta < 0.0) throw ValidationError("relax: need eta >= 0");
  }

  /// True when (alpha, beta) sits in the range where the series solution
  /// and complete monotonicity are established.
  [[nodiscard]] bool in_series_range() const { return beta > -alpha && beta <= 1.0 - alpha; }
};

/// Step proposal from the history-based rule
///   h_i = |c_i| h / |u(t_i) - u(t_{i-1})|,
///   c_i = (u'(t_{i-2}) - u'(t_{i-3})) / (u'(t_{i-1}) - u'(t_{i-2})),
/// clamped to [h_min, h_max]. The derivative stream is whatever the caller
/// stored in `derivs` (the solvers store their right-hand-side samples).
/// Either denominator below 1e-14 in magnitude returns the previous step
/// unchanged.
inline double adaptive_step(const Trajectory& history, double h,
                            std::pair<double, double> clamps) {
  history.validate();
  const std::size_t n = history.size();
  if (n < 4 || !history.has_derivs())
    throw ValidationError("adaptive_step: need at least 4 nodes with derivs");
  const auto [h_min, h_max] = clamps;
  const double prev_step = history.times[n - 1] - history.times[n - 2];
  const double du = std::fabs(history.values[n - 1] - history.values[n - 2]);
  const double denom = history.derivs[n - 2] - history.derivs[n - 3];
  if (du < 1e-14 || std::fabs(denom) < 1e-14) return prev_step;
  const double c = (history.derivs[n - 3] - history.derivs[n - 4]) / denom;
  const double proposal = std::fabs(c) * h / du;
  return std::clamp(proposal, h_min, h_max);
}

namespace detail {

// Shared grid driver: uniform step, or warmup followed by the paper rule.
template <class Rhs>
AdamsHistory relax_march(Rhs&& rhs, std::span<const double> y0, double alpha,
                         const GridPolicy& grid) {
  if (grid.mode == GridMode::Uniform) {
    return adams_pece(rhs, y0, alpha, grid.h, grid.t_end, 0,
                      [&](const AdamsHistory&, double) { return grid.h; });
  }
  auto rule = [&](const AdamsHistory& hist, double h_prev) {
    const std::size_t n = hist.nodes();
    if (n < 4) return h_prev;
    Trajectory tail;
    for (std::size_t i = n - 4; i < n; ++i) {
      tail.times.push_back(hist.times[i]);
      tail.values.push_back(hist.state(i)[0]);
      tail.derivs.push_back(hist.f(i)[0]);
    }
    return adaptive_step(tail, grid.h, {grid.h_min, grid.h_max});
  };
  return adams_pece(rhs, y0, alpha, grid.h, grid.t_end, grid.n_warmup, rule);
}

}  // namespace detail

/// Adaptive predictor-corrector solution of D^alpha y = -lam t^beta y,
/// y(0) = 1. For beta < 0 the right-hand side at the singular node t = 0 is
/// taken at the first midpoint h/2. derivs carry the RHS samples for
/// alpha = 1 (where they are the classical derivative) and finite
/// differences otherwise.
inline Trajectory solve_relaxation(const RelaxParams& p, const GridPolicy& grid) {
  p.validate();
  grid.validate();
  const double t_sing = p.beta < 0.0 ? 0.5 * grid.h : 0.0;
  auto rhs = [&](double t, const double* y, double* f) {
    const double te = t == 0.0 ? t_sing : t;
    f[0] = -p.lam * std::pow(te, p.beta) * y[0];
  };
  const double y0[1] = {1.0};
  auto hist = detail::relax_march(rhs, y0, p.alpha, grid);

  Trajectory out;
  out.times = std::move(hist.times);
  out.values.resize(out.times.size());
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = hist.y[i];
  if (p.alpha == 1.0) {
    out.derivs = std::move(hist.rhs);
  } else {
    out.derivs = detail::estimate_derivatives(out.times, out.values);
  }
  return out;
}

/// Exact solution of D y = -lam t^beta y, y(0) = 1, for beta > -1:
/// exp(-lam t^{beta+1} / (beta+1)).
inline double closed_form_alpha1(double beta, double lam, double t) {
  if (!(beta > -1.0)) throw ValidationError("closed_form_alpha1: need beta > -1");
  if (!(lam > 0.0)) throw ValidationError("closed_form_alpha1: need lam > 0");
  if (!(t >= 0.0)) throw ValidationError("closed_form_alpha1: need t >= 0");
  return std::exp(-lam * std::pow(t, beta + 1.0) / (beta + 1.0));
}

/// Singular solution of the Erdelyi-Kober relaxation chain for
/// alpha in (0, 1/2): the Mittag-Leffler factor of order 1-alpha with
/// exponent parameter -alpha and argument exponent 1-2*alpha, divided by
/// the power prefactor t^(alpha+eta).
inline double ek_solution(double alpha, double eta, double lam, double t,
                          const SeriesConfig& cfg = {}) {
  if (!(alpha > 0.0 && alpha < 0.5)) throw ValidationError("ek_solution: need alpha in (0, 0.5)");
  if (eta < 0.0) throw ValidationError("ek_solution: need eta >= 0");
  if (!(lam > 0.0)) throw ValidationError("ek_solution: need lam > 0");
  if (!(t > 0.0)) throw ValidationError("ek_solution: need t > 0 (prefactor is singular at 0)");
  const SaigoKilbasArgs sub{1.0 - alpha, -alpha, lam, t};
  return saigo_kilbas_ml(sub, cfg).value / std::pow(t, alpha + eta);
}

/// Coupled integro-differential route: marches
///   u(t) = u0 - lam t^{alpha-1-eta} (J^alpha s^eta u)(t)
/// with an implicit product-trapezoid update (the g-equation derivative
/// D g = t^eta u is folded into the convolution). alpha = 1 with eta = 0 is
/// the classical relaxation corner. u is pinned to u0 at the first node;
/// the prefactor-derivative product starts from the second.
inline Trajectory solve_coupled_form(const RelaxParams& p, const GridPolicy& grid,
                                     double u0 = 1.0) {
  p.validate();
  grid.validate();
  const double a = p.alpha;
  const double eta = p.eta;

  Trajectory out;
  out.times.push_back(0.0);
  out.values.push_back(u0);
  std::vector<double> phi{eta == 0.0 ? u0 : 0.0};  // s^eta u samples
  std::vector<double> w;

  double h_prev = grid.h;
  int step_index = 0;
  while (out.times.back() < grid.t_end - 1e-12 * grid.t_end) {
    double h = grid.h;
    if (grid.mode == GridMode::Adaptive && step_index >= grid.n_warmup && out.size() >= 4) {
      Trajectory tail;
      tail.times.assign(out.times.end() - 4, out.times.end());
      tail.values.assign(out.values.end() - 4, out.values.end());
      tail.derivs = detail::estimate_derivatives(tail.times, tail.values);
      h = adaptive_step(tail, grid.h, {grid.h_min, grid.h_max});
    }
    const double t_prev = out.times.back();
    if (t_prev + 1.5 * h >= grid.t_end) h = grid.t_end - t_prev;
    const double t_new = t_prev + h;
    if (!(t_new > t_prev)) throw SolverError("coupled form: step underflow");

    out.times.push_back(t_new);
    const std::size_t i = out.times.size() - 1;
    detail::product_trapezoid_row(out.times, i, a, w);
    double known = 0.0;
    for (std::size_t j = 0; j < i; ++j) known += w[j] * phi[j];
    const double q = std::pow(t_new, a - 1.0 - eta);
    const double teta = eta == 0.0 ? 1.0 : std::pow(t_new, eta);
    const double u_new = (u0 - p.lam * q * known) / (1.0 + p.lam * q * w[i] * teta);
    if (!std::isfinite(u_new)) throw SolverError("coupled form: non-finite state");
    out.values.push_back(u_new);
    phi.push_back(teta * u_new);
    h_prev = h;
    ++step_index;
  }
  out.derivs = detail::estimate_derivatives(out.times, out.values);
  return out;
}

/// log |u'/u| on interior nodes, u' by central differences. Nodes where
/// |u| < 1e-300 or the derivative vanishes are omitted. Throws when every
/// node falls below the magnitude threshold.
inline Trajectory decay_rate(const Trajectory& f) {
  f.validate();
  if (f.size() < 2) throw ValidationError("decay_rate: need at least 2 nodes");
  Trajectory out;
  bool any_above = false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (std::fabs(f.values[i]) >= 1e-300) any_above = true;
  if (!any_above) throw ValidationError("decay_rate: all values below magnitude threshold");
  for (std::size_t i = 1; i + 1 < f.size(); ++i) {
    if (std::fabs(f.values[i]) < 1e-300) continue;
    const double du = detail::lagrange3_deriv(f.times[i], f.times[i - 1], f.times[i], f.times[i + 1],
                                              f.values[i - 1], f.values[i], f.values[i + 1]);
    const double r = std::log(std::fabs(du / f.values[i]));
    if (!std::isfinite(r)) continue;
    out.times.push_back(f.times[i]);
    out.values.push_back(r);
  }
  return out;
}

}  // namespace ekfrac
