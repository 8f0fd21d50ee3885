#pragma once

#include "crossguard/kinematics.hpp"

namespace crossguard {

/// Constants of the danger function and the road-crossing decision rule.
///
/// The function divides a weighted sum of piecewise-linear speed and
/// acceleration transforms by ln(d_c + epsilon). The published formula is
/// singular at d_c = 1 - epsilon, so two guards make it total: below
/// `d_sat` the value saturates to `g_max`, elsewhere it is clamped to
/// [-g_max, g_max].
struct DangerParams {
  double k = 0.1;            // weight of the acceleration component
  double epsilon = 0.6;      // meters, added to d_c inside the log
  double v_lo = 0.05;        // m/s, speed dead-zone upper edge
  double v_hi = 0.65;        // m/s, speed saturation edge
  double a_lo = 1.0;         // m/s^2, acceleration dead-zone half width
  double a_hi = 10.0;        // m/s^2, acceleration saturation edge
  double g_threshold = 1.0;  // decision threshold g*
  double d_sat = 0.5;        // meters, saturation guard distance
  double g_max = 10.0;       // clamp magnitude for the danger value

  /// Throws ConfigError when the parameter set is inconsistent
  /// (v_lo >= v_hi, non-positive denominator at d_sat, ...).
  void validate() const;
};

enum class Decision { safe, dangerous };

/// Speed transform h(v_c): 0 below v_lo, linear ramp on (v_lo, v_hi], 1 above.
double speed_component(double closing_speed_mps, const DangerParams& p);

/// Acceleration transform f(a_c): five branches, odd-symmetric ramps with a
/// dead zone on (-a_lo, a_lo], saturating at -1 / +1 beyond +-a_hi.
double accel_component(double closing_accel_mps2, const DangerParams& p);

/// g(d_c, v_c, a_c) = (h(v_c) + k * f(a_c)) / ln(d_c + epsilon),
/// saturated to g_max for d_c < d_sat and clamped to [-g_max, g_max].
double danger_value(const KinematicState& state, const DangerParams& p);

/// Dangerous iff g strictly exceeds the threshold.
Decision decide(double danger, const DangerParams& p);

/// Per-frame danger values for a kinematic series.
std::vector<double> danger_series(const std::vector<KinematicState>& states,
                                  const DangerParams& p);

/// Per-frame decisions for a danger-value series.
std::vector<Decision> decision_series(const std::vector<double>& danger,
                                      const DangerParams& p);

}  // namespace crossguard
