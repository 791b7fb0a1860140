#pragma once

#include <cmath>
#include <utility>

#include "ekfrac/errors.hpp"

namespace ekfrac {

/// Adaptive Simpson quadrature on a smooth integrand. The Richardson
/// correction (S2 - S1)/15 is folded into the result, so the interval
/// acceptance test |S2 - S1| <= 15 tol is the usual one.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-10, double abs_tol = 1e-15) {
  if (a == b) return 0.0;
  const double sign = a < b ? 1.0 : -1.0;
  if (a > b) std::swap(a, b);

  auto simpson = [&](double lo, double hi, double flo, double fmid, double fhi) {
    return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
  };

  struct Frame {
    double lo, hi, flo, fmid, fhi, whole, tol;
    int depth;
  };

  const double m0 = 0.5 * (a + b);
  const double fa = f(a), fm = f(m0), fb = f(b);
  const double whole = simpson(a, b, fa, fm, fb);
  double tol0 = std::max(abs_tol, rel_tol * std::fabs(whole));

  // explicit stack; depth cap signals failure instead of looping forever
  Frame stack[64];
  int top = 0;
  stack[top++] = {a, b, fa, fm, fb, whole, tol0, 0};
  double total = 0.0;
  while (top > 0) {
    Frame fr = stack[--top];
    const double mid = 0.5 * (fr.lo + fr.hi);
    const double lm = 0.5 * (fr.lo + mid), rm = 0.5 * (mid + fr.hi);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(fr.lo, mid, fr.flo, flm, fr.fmid);
    const double right = simpson(mid, fr.hi, fr.fmid, frm, fr.fhi);
    const double delta = left + right - fr.whole;
    if (!std::isfinite(delta)) throw SolverError("integrate: non-finite integrand");
    if (std::fabs(delta) <= 15.0 * fr.tol || fr.depth >= 52) {
      if (fr.depth >= 52 && std::fabs(delta) > 1e6 * fr.tol)
        throw SolverError("integrate: adaptive refinement failed to converge");
      total += left + right + delta / 15.0;
    } else {
      stack[top++] = {fr.lo, mid, fr.flo, flm, fr.fmid, left, 0.5 * fr.tol, fr.depth + 1};
      stack[top++] = {mid, fr.hi, fr.fmid, frm, fr.fhi, right, 0.5 * fr.tol, fr.depth + 1};
    }
  }
  return sign * total;
}

}  // namespace ekfrac
