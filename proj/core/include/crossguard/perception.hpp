#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "crossguard/augment.hpp"
#include "crossguard/ids.hpp"
#include "crossguard/rng.hpp"

namespace crossguard {

/// Pinhole camera used to turn bounding-box widths into distances.
struct CameraModel {
  double focal_length_px = 500.0;
  double object_width_m = 0.4;  // real width of the tracked vehicle robot
  double max_distance_m = 4.0;  // maximum detectable distance of interest

  void validate() const;
};

struct BoundingBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;
};

enum class Provenance { real, imputed };

struct DistanceMeasurement {
  double value_m = 0.0;
  Provenance provenance = Provenance::real;

  friend bool operator==(const DistanceMeasurement&,
                         const DistanceMeasurement&) = default;
};

enum class ImputationPolicy { reference_max, hold_last };

/// One detection stream's per-frame measurements; always exactly one entry
/// per ground-truth frame.
struct ChannelSeries {
  ChannelId channel;
  std::vector<DistanceMeasurement> measurements;
};

/// distance = focal_length * object_width / box_width, clamped to
/// max_distance. Throws ConfigError for non-positive box widths.
double bbox_to_distance(const BoundingBox& box, const CameraModel& cam);

/// Synthetic detector: absent beyond max_distance, otherwise detects with
/// prof.detect_prob and perturbs the true distance with Gaussian noise of
/// scale prof.noise_sigma_m (clamped to [0, max_distance]).
std::optional<double> synth_detect(double true_distance_m,
                                   const DegradationProfile& prof,
                                   const CameraModel& cam, Rng& rng);

/// Fills one absent measurement. reference_max imputes cam.max_distance_m;
/// hold_last repeats last_real when one exists and falls back to
/// cam.max_distance_m otherwise.
DistanceMeasurement impute(std::optional<double> measured_m,
                           ImputationPolicy policy, const CameraModel& cam,
                           std::optional<double> last_real_m);

/// Sweeps impute() over a series, tracking the last real value.
std::vector<DistanceMeasurement> impute_series(
    const std::vector<std::optional<double>>& raw, ImputationPolicy policy,
    const CameraModel& cam);

/// Full synthetic channel for a ground-truth distance series. The rng seed
/// is split per frame so parallel evaluation order cannot change results.
ChannelSeries synth_channel(const std::vector<double>& true_distances_m,
                            const ChannelId& channel,
                            const DegradationProfile& prof,
                            const CameraModel& cam, ImputationPolicy policy,
                            std::uint64_t seed);

/// Reads JSON Lines detections
/// (`{"frame": int, "camera": ..., "model": ..., "bbox": [x,y,w,h],
/// "confidence": float}`) and builds the series for `channel`: records for
/// other channels are skipped, the widest box wins on multi-detection
/// frames, and frames without a record are imputed per `policy`. Throws
/// IoError with a line number on parse errors, unknown channel ids, or
/// out-of-range frame indices.
ChannelSeries ingest_detections(const std::filesystem::path& path,
                                const CameraModel& cam, int n_frames,
                                const ChannelId& channel,
                                ImputationPolicy policy);

}  // namespace crossguard
