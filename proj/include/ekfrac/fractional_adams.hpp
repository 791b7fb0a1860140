#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ekfrac/operators.hpp"
#include "ekfrac/trajectory.hpp"

namespace ekfrac::detail {

// Flat row-major storage for a d-dimensional solution history.
struct AdamsHistory {
  std::size_t dim = 1;
  std::vector<double> times;
  std::vector<double> y;    // times.size() * dim
  std::vector<double> rhs;  // RHS samples, same layout

  [[nodiscard]] std::size_t nodes() const { return times.size(); }
  [[nodiscard]] const double* state(std::size_t i) const { return y.data() + i * dim; }
  [[nodiscard]] const double* f(std::size_t i) const { return rhs.data() + i * dim; }
};

// Fractional Adams-Bashforth-Moulton marching for D^alpha y = F(t, y) in
// Volterra form: predict with product-rectangle weights, evaluate, correct
// once with product-trapezoid weights, evaluate. alpha = 1 degenerates to
// the classical Heun predictor-corrector.
//
// Rhs:    void(double t, const double* y, double* f)
// NextH:  double(const AdamsHistory&, double h_prev) -- called once the
//         history is long enough; the engine snaps the final step to t_end.
template <class Rhs, class NextH>
AdamsHistory adams_pece(Rhs&& rhs, std::span<const double> y0, double alpha,
                        double h0, double t_end, int n_warmup, NextH&& next_h) {
  const std::size_t d = y0.size();
  AdamsHistory hist;
  hist.dim = d;
  hist.times.push_back(0.0);
  hist.y.assign(y0.begin(), y0.end());
  hist.rhs.resize(d);
  rhs(0.0, hist.y.data(), hist.rhs.data());

  const double inv_gamma = 1.0 / gamma(alpha);
  std::vector<double> dpow;  // (t_new - t_j)^alpha over the history
  std::vector<double> pred(d), fpred(d), corr(d);

  double h_prev = h0;
  int step_index = 0;
  while (hist.times.back() < t_end - 1e-12 * t_end) {
    const std::size_t n = hist.nodes();  // nodes so far; new node gets index n
    double h = step_index < n_warmup ? h0 : next_h(hist, h_prev);
    const double t_prev = hist.times.back();
    // take the remainder in one stride of at most 1.5 h so the grid never
    // ends on a degenerate interval
    if (t_prev + 1.5 * h >= t_end) h = t_end - t_prev;
    const double t_new = t_prev + h;
    if (!(t_new > t_prev)) throw SolverError("adams: step underflow, grid cannot advance");

    dpow.resize(n + 1);
    if (alpha == 1.0) {
      for (std::size_t j = 0; j < n; ++j) dpow[j] = t_new - hist.times[j];
    } else {
      for (std::size_t j = 0; j < n; ++j) dpow[j] = std::pow(t_new - hist.times[j], alpha);
    }
    dpow[n] = 0.0;

    // predictor: product-rectangle with left values
    for (std::size_t c = 0; c < d; ++c) pred[c] = y0[c];
    for (std::size_t j = 0; j < n; ++j) {
      const double b = inv_gamma * (dpow[j] - dpow[j + 1]) / alpha;
      const double* fj = hist.f(j);
      for (std::size_t c = 0; c < d; ++c) pred[c] += b * fj[c];
    }
    rhs(t_new, pred.data(), fpred.data());

    // corrector: product-trapezoid with the predicted value at t_new
    for (std::size_t c = 0; c < d; ++c) corr[c] = y0[c];
    double B = t_new - hist.times[0];
    double dB = dpow[0], eB = dB * B;
    for (std::size_t j = 0; j < n; ++j) {
      const double tj1 = j + 1 < n ? hist.times[j + 1] : t_new;
      const double A = t_new - tj1;
      const double dA = dpow[j + 1], eA = dA * A;
      const double I0 = (dB - dA) / alpha;
      const double I1 = (eB - eA) / (alpha + 1.0);
      const double hj = tj1 - hist.times[j];
      const double wl = inv_gamma * (I1 - A * I0) / hj;
      const double wr = inv_gamma * (B * I0 - I1) / hj;
      const double* fl = hist.f(j);
      const double* fr = j + 1 < n ? hist.f(j + 1) : fpred.data();
      for (std::size_t c = 0; c < d; ++c) corr[c] += wl * fl[c] + wr * fr[c];
      B = A;
      dB = dA;
      eB = eA;
    }

    for (std::size_t c = 0; c < d; ++c)
      if (!std::isfinite(corr[c])) throw SolverError("adams: non-finite state at t = " + std::to_string(t_new));

    hist.times.push_back(t_new);
    hist.y.insert(hist.y.end(), corr.begin(), corr.end());
    hist.rhs.resize(hist.rhs.size() + d);
    rhs(t_new, corr.data(), hist.rhs.data() + (hist.nodes() - 1) * d);
    h_prev = h;
    ++step_index;
  }
  return hist;
}

}  // namespace ekfrac::detail
