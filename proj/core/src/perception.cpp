#include "crossguard/perception.hpp"

#include <algorithm>
#include <fstream>

#include "json.hpp"

#include "crossguard/errors.hpp"

namespace crossguard {

void CameraModel::validate() const {
  if (!(focal_length_px > 0.0)) throw ConfigError("camera: focal length must be > 0");
  if (!(object_width_m > 0.0)) throw ConfigError("camera: object width must be > 0");
  if (!(max_distance_m > 0.0)) throw ConfigError("camera: max distance must be > 0");
}

double bbox_to_distance(const BoundingBox& box, const CameraModel& cam) {
  if (!(box.w > 0.0))
    throw ConfigError("bounding box width must be > 0");
  double d = cam.focal_length_px * cam.object_width_m / box.w;
  return std::min(d, cam.max_distance_m);
}

std::optional<double> synth_detect(double true_distance_m,
                                   const DegradationProfile& prof,
                                   const CameraModel& cam, Rng& rng) {
  if (true_distance_m > cam.max_distance_m) return std::nullopt;
  if (!rng.bernoulli(prof.detect_prob)) return std::nullopt;
  double noisy = true_distance_m + rng.normal(0.0, prof.noise_sigma_m);
  return std::clamp(noisy, 0.0, cam.max_distance_m);
}

DistanceMeasurement impute(std::optional<double> measured_m,
                           ImputationPolicy policy, const CameraModel& cam,
                           std::optional<double> last_real_m) {
  if (measured_m) return {*measured_m, Provenance::real};
  if (policy == ImputationPolicy::hold_last && last_real_m)
    return {*last_real_m, Provenance::imputed};
  return {cam.max_distance_m, Provenance::imputed};
}

std::vector<DistanceMeasurement> impute_series(
    const std::vector<std::optional<double>>& raw, ImputationPolicy policy,
    const CameraModel& cam) {
  std::vector<DistanceMeasurement> out;
  out.reserve(raw.size());
  std::optional<double> last_real;
  for (const auto& m : raw) {
    out.push_back(impute(m, policy, cam, last_real));
    if (m) last_real = *m;
  }
  return out;
}

ChannelSeries synth_channel(const std::vector<double>& true_distances_m,
                            const ChannelId& channel,
                            const DegradationProfile& prof,
                            const CameraModel& cam, ImputationPolicy policy,
                            std::uint64_t seed) {
  std::vector<std::optional<double>> raw;
  raw.reserve(true_distances_m.size());
  for (std::size_t i = 0; i < true_distances_m.size(); ++i) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    raw.push_back(synth_detect(true_distances_m[i], prof, cam, rng));
  }
  return {channel, impute_series(raw, policy, cam)};
}

ChannelSeries ingest_detections(const std::filesystem::path& path,
                                const CameraModel& cam, int n_frames,
                                const ChannelId& channel,
                                ImputationPolicy policy) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  if (n_frames <= 0) throw ConfigError("ingest_detections: n_frames must be > 0");

  // Widest box per frame; the nearest object is the conservative pick.
  std::vector<std::optional<BoundingBox>> widest(static_cast<std::size_t>(n_frames));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string context = path.string() + ":" + std::to_string(line_no);

    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object())
      throw IoError(context + ": malformed JSON record");
    try {
      ChannelId record_channel{parse_camera(record.at("camera").get<std::string>()),
                               parse_model(record.at("model").get<std::string>())};
      int frame = record.at("frame").get<int>();
      if (frame < 0 || frame >= n_frames)
        throw IoError(context + ": frame index " + std::to_string(frame) +
                      " outside [0, " + std::to_string(n_frames) + ")");
      const auto& bbox = record.at("bbox");
      if (!bbox.is_array() || bbox.size() != 4)
        throw IoError(context + ": bbox must be [x, y, w, h]");
      if (!(record_channel == channel)) continue;
      BoundingBox box{bbox[0].get<double>(), bbox[1].get<double>(),
                      bbox[2].get<double>(), bbox[3].get<double>()};
      if (!(box.w > 0.0))
        throw IoError(context + ": bounding box width must be > 0");
      auto& slot = widest[static_cast<std::size_t>(frame)];
      if (!slot || box.w > slot->w) slot = box;
    } catch (const IoError&) {
      throw;
    } catch (const nlohmann::json::exception& e) {
      throw IoError(context + ": " + e.what());
    } catch (const ConfigError& e) {
      throw IoError(context + ": " + e.what());
    }
  }

  std::vector<std::optional<double>> raw(widest.size());
  for (std::size_t i = 0; i < widest.size(); ++i)
    if (widest[i]) raw[i] = bbox_to_distance(*widest[i], cam);
  return {channel, impute_series(raw, policy, cam)};
}

}  // namespace crossguard
