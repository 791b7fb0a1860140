#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ekfrac/errors.hpp"

namespace ekfrac {

/// Truncation policy for infinite-series evaluation: stop when the next
/// term drops below `abs_tol` in magnitude, or after `max_terms` summed
/// terms (the leading 1 counts), whichever comes first.
struct SeriesConfig {
  double abs_tol = 1e-14;
  int max_terms = 10000;

  void validate() const {
    if (!(abs_tol > 0.0)) throw ValidationError("series: abs_tol must be positive");
    if (max_terms < 1) throw ValidationError("series: max_terms must be >= 1");
  }
};

namespace detail {

// Lanczos coefficients, g = 607/128, 15 terms. Good to ~1e-15 relative
// over the positive axis, comfortably within the 1e-12 budget.
inline constexpr double kLanczosG = 4.7421875;
inline constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,     -0.49191381609762019978,
    0.33994649984811888699e-4, 0.46523628927048575665e-4,
    -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,
    -0.16431810653676389022e-3, 0.84418223983852743293e-4,
    -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

// log Gamma for x > 0. Arguments below 0.5 are lifted with the recurrence
// log G(x) = log G(x+1) - log x before the Lanczos sum is applied.
inline double log_gamma_pos(double x) {
  double shift = 0.0;
  while (x < 0.5) {
    shift -= std::log(x);
    x += 1.0;
  }
  double ser = kLanczos[0];
  for (int j = 1; j < 15; ++j) ser += kLanczos[j] / (x + static_cast<double>(j));
  const double base = x + kLanczosG + 0.5;
  constexpr double sqrt_two_pi = 2.5066282746310005024;
  return (x + 0.5) * std::log(base) - base + std::log(sqrt_two_pi * ser / x) + shift;
}

}  // namespace detail

/// Gamma function. Poles (x a nonpositive integer) and results beyond the
/// double range are reported as errors rather than infinities.
inline double gamma(double x) {
  if (!std::isfinite(x)) throw ValidationError("gamma: argument must be finite");
  if (x <= 0.0 && x == std::floor(x))
    throw ValidationError("gamma: pole at nonpositive integer " + std::to_string(x));
  if (x < 0.5) {
    // reflection: G(x) G(1-x) = pi / sin(pi x)
    const double s = std::sin(std::numbers::pi * x);
    return std::numbers::pi / (s * gamma(1.0 - x));
  }
  const double lg = detail::log_gamma_pos(x);
  if (lg > 709.0) throw std::overflow_error("gamma: overflow for x = " + std::to_string(x));
  return std::exp(lg);
}

/// Argument bundle for the three-parameter Mittag-Leffler series that
/// solves D^alpha y = -lam t^beta y, y(0) = 1.
struct SaigoKilbasArgs {
  double alpha;
  double beta;
  double lam;
  double t;

  void validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ValidationError("saigo-kilbas: need alpha in (0,1]");
    if (!(beta > -alpha && beta <= 1.0 - alpha))
      throw ValidationError("saigo-kilbas: need beta in (-alpha, 1-alpha]");
    if (!(lam > 0.0)) throw ValidationError("saigo-kilbas: need lam > 0");
    if (!(t >= 0.0)) throw ValidationError("saigo-kilbas: need t >= 0");
  }
};

enum class SeriesStop { TermTolerance, MaxTerms };

struct SeriesResult {
  double value = 0.0;
  SeriesStop stop = SeriesStop::TermTolerance;
  int terms = 0;             // summed terms, leading 1 included
  double condition = 0.0;    // max |term| / |value|
  bool ill_conditioned = false;  // condition above 1e12
};

/// Kilbas-Saigo Mittag-Leffler value
///   1 + sum_{k>=1} (-lam)^k t^{k(alpha+beta)}
///         prod_{j=0}^{k-1} G(j(alpha+beta)+beta+1) / G(j(alpha+beta)+beta+alpha+1).
/// The Gamma-ratio product is extended by one factor per term rather than
/// recomputed. Throws NonConvergenceError when max_terms is reached while
/// the terms are still at or above abs_tol and not decreasing.
inline SeriesResult saigo_kilbas_ml(const SaigoKilbasArgs& args, const SeriesConfig& cfg = {}) {
  args.validate();
  cfg.validate();

  const double ab = args.alpha + args.beta;   // > 0 inside the admissible range
  const double tpow = std::pow(args.t, ab);

  SeriesResult res;
  res.value = 1.0;
  res.terms = 1;
  res.stop = SeriesStop::MaxTerms;
  double term = 1.0;
  double prev_abs = 1.0;
  double max_abs = 1.0;

  for (int k = 1; k < cfg.max_terms; ++k) {
    const double x = static_cast<double>(k - 1) * ab + args.beta + 1.0;
    const double ratio = std::exp(detail::log_gamma_pos(x) - detail::log_gamma_pos(x + args.alpha));
    prev_abs = std::fabs(term);
    term *= -args.lam * tpow * ratio;
    res.value += term;
    res.terms += 1;
    max_abs = std::max(max_abs, std::fabs(term));
    if (std::fabs(term) < cfg.abs_tol) {
      res.stop = SeriesStop::TermTolerance;
      break;
    }
  }

  if (res.stop == SeriesStop::MaxTerms && std::fabs(term) >= cfg.abs_tol && std::fabs(term) > prev_abs)
    throw NonConvergenceError("saigo_kilbas_ml: term cap reached while terms are still growing");

  res.condition = res.value == 0.0 ? std::numeric_limits<double>::infinity()
                                   : max_abs / std::fabs(res.value);
  res.ill_conditioned = res.condition > 1e12;
  return res;
}

}  // namespace ekfrac
