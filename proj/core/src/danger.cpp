#include "crossguard/danger.hpp"

#include <algorithm>
#include <cmath>

#include "crossguard/errors.hpp"

namespace crossguard {

void DangerParams::validate() const {
  if (!(v_lo < v_hi)) throw ConfigError("danger params: v_lo must be < v_hi");
  if (!(a_lo < a_hi)) throw ConfigError("danger params: a_lo must be < a_hi");
  if (!(epsilon > 0.0)) throw ConfigError("danger params: epsilon must be > 0");
  if (!(d_sat + epsilon > 1.0))
    throw ConfigError("danger params: d_sat + epsilon must be > 1 so the log denominator stays positive");
  if (!(g_max > g_threshold))
    throw ConfigError("danger params: g_max must be > g_threshold");
}

double speed_component(double v, const DangerParams& p) {
  if (v <= p.v_lo) return 0.0;
  if (v <= p.v_hi) return (v - p.v_lo) / (p.v_hi - p.v_lo);
  return 1.0;
}

double accel_component(double a, const DangerParams& p) {
  if (a <= -p.a_hi) return -1.0;
  if (a <= -p.a_lo) return (a + p.a_lo) / (p.a_hi - p.a_lo);
  if (a <= p.a_lo) return 0.0;
  if (a <= p.a_hi) return (a - p.a_lo) / (p.a_hi - p.a_lo);
  return 1.0;
}

double danger_value(const KinematicState& s, const DangerParams& p) {
  if (s.distance_m < p.d_sat) return p.g_max;
  double numer = speed_component(s.closing_speed_mps, p) +
                 p.k * accel_component(s.closing_accel_mps2, p);
  double g = numer / std::log(s.distance_m + p.epsilon);
  return std::clamp(g, -p.g_max, p.g_max);
}

Decision decide(double g, const DangerParams& p) {
  return g > p.g_threshold ? Decision::dangerous : Decision::safe;
}

std::vector<double> danger_series(const std::vector<KinematicState>& states,
                                  const DangerParams& p) {
  std::vector<double> out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(danger_value(s, p));
  return out;
}

std::vector<Decision> decision_series(const std::vector<double>& danger,
                                      const DangerParams& p) {
  std::vector<Decision> out;
  out.reserve(danger.size());
  for (double g : danger) out.push_back(decide(g, p));
  return out;
}

}  // namespace crossguard
