#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "ekfrac/fractional_adams.hpp"
#include "ekfrac/relax.hpp"
#include "ekfrac/trajectory.hpp"

namespace ekfrac {

/// A y'' + B D^(3/2) y + C y = f(t) with initial data y(0), y'(0).
struct BtParams {
  double A = 1.0;
  double B = 0.0;
  double C = 0.0;
  double y0 = 0.0;
  double y0_prime = 0.0;
  std::function<double(double)> forcing;  // empty means f == 0

  void validate() const {
    if (A == 0.0) throw ValidationError("bagley-torvik: A must be nonzero");
  }
};

/// f(t) = c0 + c1 t, the manufactured-solution companion forcing.
inline std::function<double(double)> bt_affine_forcing(double c0, double c1) {
  return [c0, c1](double t) { return c0 + c1 * t; };
}

/// Half-order system decomposition
///   D^(1/2) y1 = y2,  D^(1/2) y2 = y3,  D^(1/2) y3 = y4,
///   D^(1/2) y4 = (-C y1 - B y4 + f(t)) / A,
/// with y1(0) = y0, y2(0) = 0, y3(0) = y0', y4(0) = 0, marched by the
/// fractional Adams predictor-corrector. The Volterra form bakes the
/// nonzero initial values of y1 and y3 into the Caputo inversion exactly.
/// Returns y1 with finite-difference derivative samples.
inline Trajectory solve_bt(const BtParams& p, const GridPolicy& grid) {
  p.validate();
  grid.validate();
  auto f = [&](double t) { return p.forcing ? p.forcing(t) : 0.0; };
  auto rhs = [&](double t, const double* y, double* out) {
    out[0] = y[1];
    out[1] = y[2];
    out[2] = y[3];
    out[3] = (-p.C * y[0] - p.B * y[3] + f(t)) / p.A;
  };
  const double y0[4] = {p.y0, 0.0, p.y0_prime, 0.0};
  auto hist = detail::relax_march(rhs, y0, 0.5, grid);

  Trajectory out;
  out.times = std::move(hist.times);
  out.values.resize(out.times.size());
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = hist.y[i * 4];
  out.derivs = detail::estimate_derivatives(out.times, out.values);
  return out;
}

/// All four components of the decomposition, for consistency checks.
struct BtSystemSolution {
  std::vector<double> times;
  std::vector<double> y1, y2, y3, y4;
};

inline BtSystemSolution solve_bt_system(const BtParams& p, const GridPolicy& grid) {
  p.validate();
  grid.validate();
  auto f = [&](double t) { return p.forcing ? p.forcing(t) : 0.0; };
  auto rhs = [&](double t, const double* y, double* out) {
    out[0] = y[1];
    out[1] = y[2];
    out[2] = y[3];
    out[3] = (-p.C * y[0] - p.B * y[3] + f(t)) / p.A;
  };
  const double y0[4] = {p.y0, 0.0, p.y0_prime, 0.0};
  auto hist = detail::relax_march(rhs, y0, 0.5, grid);
  BtSystemSolution sol;
  const std::size_t n = hist.nodes();
  sol.times = std::move(hist.times);
  sol.y1.resize(n);
  sol.y2.resize(n);
  sol.y3.resize(n);
  sol.y4.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    sol.y1[i] = hist.y[i * 4 + 0];
    sol.y2[i] = hist.y[i * 4 + 1];
    sol.y3[i] = hist.y[i * 4 + 2];
    sol.y4[i] = hist.y[i * 4 + 3];
  }
  return sol;
}

}  // namespace ekfrac
