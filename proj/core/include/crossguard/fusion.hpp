#pragma once

#include <span>
#include <string>
#include <vector>

#include "crossguard/perception.hpp"

namespace crossguard {

enum class FusionMethod { a_fusion, w_fusion };

std::string to_string(FusionMethod m);
FusionMethod parse_fusion_method(std::string_view text);

/// Arithmetic mean of all per-frame measurements, imputed or not.
/// Throws std::invalid_argument on an empty list.
double a_fusion(std::span<const DistanceMeasurement> measurements);

/// Mean over real measurements only; falls back to reference_max when every
/// measurement is an imputation. Throws std::invalid_argument on an empty
/// list.
double w_fusion(std::span<const DistanceMeasurement> measurements,
                double reference_max_m);

/// Per-frame fused distances.
struct FusedSeries {
  FusionMethod method = FusionMethod::a_fusion;
  std::vector<double> distances_m;
};

/// Fuses aligned channel series frame by frame. All series must share the
/// same length; channels that are absent entirely are simply not passed in.
FusedSeries fuse_channels(const std::vector<ChannelSeries>& channels,
                          FusionMethod method, double reference_max_m);

}  // namespace crossguard
