#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "ekfrac/trajectory.hpp"

namespace ekfrac {

enum class Damping { Overdamped, Underdamped };

/// Derived quantities of a solution trajectory: where it crosses zero,
/// where its derivative changes sign, the |u'/u| series, and the resulting
/// overdamped/underdamped classification.
struct DiagnosticsReport {
  Damping classification = Damping::Overdamped;
  std::vector<double> zero_crossings;
  std::vector<double> deriv_sign_changes;
  Trajectory decay_rate;   // |u'/u| on interior nodes
  std::string metadata;    // parameter echo, filled by the harness
};

namespace detail {

// Interpolated crossing times of a sampled signal. Signs smaller than
// rel_floor * max|v| count as zero and do not trigger a crossing.
inline std::vector<double> sign_change_times(const std::vector<double>& t,
                                             const std::vector<double>& v,
                                             double rel_floor = 0.0) {
  double vmax = 0.0;
  for (double x : v) vmax = std::max(vmax, std::fabs(x));
  const double floor = rel_floor * vmax;
  std::vector<double> out;
  double prev = 0.0;
  double prev_t = 0.0;
  double prev_v = 0.0;
  bool have_prev = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double s = std::fabs(v[i]) <= floor ? 0.0 : (v[i] > 0.0 ? 1.0 : -1.0);
    if (s == 0.0) continue;
    if (have_prev && s != prev) {
      // linear interpolation between the last significant samples
      const double cross = prev_t + (t[i] - prev_t) * (0.0 - prev_v) / (v[i] - prev_v);
      out.push_back(cross);
    }
    prev = s;
    prev_t = t[i];
    prev_v = v[i];
    have_prev = true;
  }
  return out;
}

}  // namespace detail

/// Zero-crossing times of the trajectory values (linear interpolation).
inline std::vector<double> zero_crossings(const Trajectory& u) {
  u.validate();
  return detail::sign_change_times(u.times, u.values);
}

}  // namespace ekfrac
