#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "crossguard/ids.hpp"

namespace crossguard {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// One motion segment of the vehicle plan: constant acceleration held for a
/// fixed duration. Past the last segment the vehicle coasts at its final
/// speed.
struct MotionSegment {
  double duration_s = 0.0;
  double accel_mps2 = 0.0;
};

/// Straight-line vehicle plan. The vehicle drives along the x axis toward
/// the crossing point at the origin: it starts at (initial_distance_m, 0)
/// and positive speed moves it in -x direction.
struct VehicleProfile {
  double initial_distance_m = 0.0;
  double initial_speed_mps = 0.0;
  std::vector<MotionSegment> segments;
};

/// Wheelchair crossing path: constant speed from start toward end along the
/// segment, holding position once the end is reached.
struct WheelchairPath {
  Vec2 start;
  Vec2 end;
  double speed_mps = 0.0;
};

struct ScenarioConfig {
  ScenarioId scenario_id = ScenarioId::a;
  double duration_s = 6.0;
  double frame_rate_hz = 30.0;
  VehicleProfile vehicle;
  WheelchairPath wheelchair;
  std::uint64_t rng_seed = 0;
  double jitter_sigma_m = 0.0;  // zero-mean positional noise per coordinate

  /// Lab scenario A: short run, vehicle approaching at constant speed.
  static ScenarioConfig default_a();
  /// Lab scenario B: longer initial distance, accelerate-then-brake plan.
  static ScenarioConfig default_b();

  /// Throws ConfigError on non-positive duration/frame_rate/initial distance.
  void validate() const;
};

struct GroundTruthFrame {
  int frame_index = 0;
  double time_s = 0.0;
  Vec2 vehicle;
  Vec2 wheelchair;
};

struct GroundTruthSequence {
  double frame_rate_hz = 30.0;
  std::vector<GroundTruthFrame> frames;
};

/// Per-frame kinematics between vehicle and wheelchair. Closing-positive
/// convention: closing_speed = -d'(t) so an approaching vehicle has
/// positive speed, and closing_accel is its time derivative.
struct KinematicState {
  double distance_m = 0.0;
  double closing_speed_mps = 0.0;
  double closing_accel_mps2 = 0.0;
};

/// Integrates the scenario in closed form per motion segment and samples it
/// at round(duration * frame_rate) frames. Deterministic given
/// (config, rng_seed).
GroundTruthSequence simulate_scenario(const ScenarioConfig& config);

/// Distance/speed/acceleration series from a ground-truth sequence.
///
/// Speeds use central finite differences (second-order one-sided stencils at
/// the endpoints, exact on quadratics), accelerations differentiate the
/// smoothed speed, and both series pass through a centered moving average of
/// width `smoothing_window` (odd, >= 1; the window shrinks symmetrically at
/// the boundaries). Throws ConfigError for sequences shorter than 3 frames
/// or an invalid window.
std::vector<KinematicState> derive_kinematics(const GroundTruthSequence& seq,
                                              int smoothing_window);

/// Same pipeline applied to a plain distance series (used for fused and
/// per-channel measurement series).
std::vector<KinematicState> derive_kinematics_from_distances(
    const std::vector<double>& distances_m, double frame_rate_hz,
    int smoothing_window);

/// Euclidean vehicle-wheelchair distance per frame.
std::vector<double> true_distances(const GroundTruthSequence& seq);

/// CSV with header `frame,t_s,veh_x_m,veh_y_m,aw_x_m,aw_y_m`, LF endings.
/// Numbers are written in shortest round-trip form so a reload is bit-exact.
void write_ground_truth_csv(const GroundTruthSequence& seq,
                            const std::filesystem::path& path);
GroundTruthSequence read_ground_truth_csv(const std::filesystem::path& path,
                                          double frame_rate_hz);

}  // namespace crossguard
