#include "crossguard/kinematics.hpp"

#include <cmath>
#include <fstream>

#include "crossguard/errors.hpp"
#include "crossguard/rng.hpp"
#include "text_util.hpp"

namespace crossguard {

namespace {

// State of the vehicle plan at the start of a segment.
struct SegmentStart {
  double t = 0.0;  // seconds
  double s = 0.0;  // meters traveled
  double u = 0.0;  // speed at segment start
  double a = 0.0;  // acceleration within the segment
};

std::vector<SegmentStart> segment_table(const VehicleProfile& vehicle) {
  std::vector<SegmentStart> table;
  double t = 0.0, s = 0.0, u = vehicle.initial_speed_mps;
  for (const auto& seg : vehicle.segments) {
    table.push_back({t, s, u, seg.accel_mps2});
    s += u * seg.duration_s + 0.5 * seg.accel_mps2 * seg.duration_s * seg.duration_s;
    u += seg.accel_mps2 * seg.duration_s;
    t += seg.duration_s;
  }
  // Coast at the final speed beyond the plan.
  table.push_back({t, s, u, 0.0});
  return table;
}

double traveled_at(const std::vector<SegmentStart>& table, double t) {
  const SegmentStart* seg = &table.front();
  for (const auto& candidate : table)
    if (candidate.t <= t) seg = &candidate;
  double tau = t - seg->t;
  return seg->s + seg->u * tau + 0.5 * seg->a * tau * tau;
}

Vec2 wheelchair_at(const WheelchairPath& path, double t) {
  double dx = path.end.x - path.start.x;
  double dy = path.end.y - path.start.y;
  double len = std::hypot(dx, dy);
  if (len == 0.0) return path.start;
  double s = std::min(path.speed_mps * t, len);
  return {path.start.x + dx / len * s, path.start.y + dy / len * s};
}

/// Centered moving average; the window shrinks symmetrically at the edges so
/// the estimate stays unbiased on linear signals.
std::vector<double> moving_average(const std::vector<double>& x, int window) {
  if (window <= 1) return x;
  int n = static_cast<int>(x.size());
  int radius = window / 2;
  std::vector<double> out(x.size());
  for (int i = 0; i < n; ++i) {
    int r = std::min({radius, i, n - 1 - i});
    double sum = 0.0;
    for (int j = i - r; j <= i + r; ++j) sum += x[j];
    out[i] = sum / (2 * r + 1);
  }
  return out;
}

/// d/dt via central differences; second-order one-sided stencils at both
/// endpoints (exact on polynomials up to degree 2).
std::vector<double> differentiate(const std::vector<double>& x, double dt) {
  int n = static_cast<int>(x.size());
  std::vector<double> out(x.size());
  out[0] = (-3.0 * x[0] + 4.0 * x[1] - x[2]) / (2.0 * dt);
  for (int i = 1; i + 1 < n; ++i) out[i] = (x[i + 1] - x[i - 1]) / (2.0 * dt);
  out[n - 1] = (3.0 * x[n - 1] - 4.0 * x[n - 2] + x[n - 3]) / (2.0 * dt);
  return out;
}

}  // namespace

ScenarioConfig ScenarioConfig::default_a() {
  ScenarioConfig cfg;
  cfg.scenario_id = ScenarioId::a;
  cfg.duration_s = 6.0;
  cfg.frame_rate_hz = 30.0;
  cfg.vehicle = {3.0, 0.5, {{6.0, 0.0}}};
  cfg.wheelchair = {{0.0, -0.5}, {0.0, 0.5}, 0.1};
  return cfg;
}

ScenarioConfig ScenarioConfig::default_b() {
  ScenarioConfig cfg;
  cfg.scenario_id = ScenarioId::b;
  cfg.duration_s = 9.0;
  cfg.frame_rate_hz = 30.0;
  cfg.vehicle = {4.0, 0.0, {{4.5, 0.18}, {4.5, -0.18}}};
  cfg.wheelchair = {{0.0, -0.5}, {0.0, 0.5}, 0.1};
  return cfg;
}

void ScenarioConfig::validate() const {
  if (!(duration_s > 0.0))
    throw ConfigError("scenario " + to_string(scenario_id) + ": duration must be > 0");
  if (!(frame_rate_hz > 0.0))
    throw ConfigError("scenario " + to_string(scenario_id) + ": frame_rate must be > 0");
  if (!(vehicle.initial_distance_m > 0.0))
    throw ConfigError("scenario " + to_string(scenario_id) +
                      ": vehicle initial distance must be > 0");
  for (const auto& seg : vehicle.segments)
    if (seg.duration_s < 0.0)
      throw ConfigError("scenario " + to_string(scenario_id) +
                        ": segment duration must be >= 0");
  if (jitter_sigma_m < 0.0)
    throw ConfigError("scenario " + to_string(scenario_id) + ": jitter sigma must be >= 0");
}

GroundTruthSequence simulate_scenario(const ScenarioConfig& config) {
  config.validate();
  auto table = segment_table(config.vehicle);
  auto n = static_cast<int>(std::llround(config.duration_s * config.frame_rate_hz));

  GroundTruthSequence seq;
  seq.frame_rate_hz = config.frame_rate_hz;
  seq.frames.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double t = static_cast<double>(i) / config.frame_rate_hz;
    GroundTruthFrame frame;
    frame.frame_index = i;
    frame.time_s = t;
    frame.vehicle = {config.vehicle.initial_distance_m - traveled_at(table, t), 0.0};
    frame.wheelchair = wheelchair_at(config.wheelchair, t);
    if (config.jitter_sigma_m > 0.0) {
      Rng rng(mix_seed(config.rng_seed, static_cast<std::uint64_t>(i)));
      frame.vehicle.x += rng.normal(0.0, config.jitter_sigma_m);
      frame.vehicle.y += rng.normal(0.0, config.jitter_sigma_m);
      frame.wheelchair.x += rng.normal(0.0, config.jitter_sigma_m);
      frame.wheelchair.y += rng.normal(0.0, config.jitter_sigma_m);
    }
    seq.frames.push_back(frame);
  }
  return seq;
}

std::vector<double> true_distances(const GroundTruthSequence& seq) {
  std::vector<double> d;
  d.reserve(seq.frames.size());
  for (const auto& f : seq.frames)
    d.push_back(std::hypot(f.vehicle.x - f.wheelchair.x, f.vehicle.y - f.wheelchair.y));
  return d;
}

std::vector<KinematicState> derive_kinematics_from_distances(
    const std::vector<double>& distances_m, double frame_rate_hz,
    int smoothing_window) {
  if (distances_m.size() < 3)
    throw ConfigError("derive_kinematics: need at least 3 frames, got " +
                      std::to_string(distances_m.size()));
  if (smoothing_window < 1 || smoothing_window % 2 == 0)
    throw ConfigError("derive_kinematics: smoothing window must be odd and >= 1");
  if (!(frame_rate_hz > 0.0))
    throw ConfigError("derive_kinematics: frame rate must be > 0");

  double dt = 1.0 / frame_rate_hz;
  auto v_raw = differentiate(distances_m, dt);
  for (auto& v : v_raw) v = -v;  // closing-positive
  auto v = moving_average(v_raw, smoothing_window);
  auto a = moving_average(differentiate(v, dt), smoothing_window);

  std::vector<KinematicState> out(distances_m.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = {distances_m[i], v[i], a[i]};
  return out;
}

std::vector<KinematicState> derive_kinematics(const GroundTruthSequence& seq,
                                              int smoothing_window) {
  return derive_kinematics_from_distances(true_distances(seq), seq.frame_rate_hz,
                                          smoothing_window);
}

void write_ground_truth_csv(const GroundTruthSequence& seq,
                            const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << "frame,t_s,veh_x_m,veh_y_m,aw_x_m,aw_y_m\n";
  for (const auto& f : seq.frames) {
    out << f.frame_index << ',' << detail::format_double(f.time_s) << ','
        << detail::format_double(f.vehicle.x) << ','
        << detail::format_double(f.vehicle.y) << ','
        << detail::format_double(f.wheelchair.x) << ','
        << detail::format_double(f.wheelchair.y) << '\n';
  }
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

GroundTruthSequence read_ground_truth_csv(const std::filesystem::path& path,
                                          double frame_rate_hz) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");

  GroundTruthSequence seq;
  seq.frame_rate_hz = frame_rate_hz;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string context = path.string() + ":" + std::to_string(line_no);
    if (line_no == 1) {
      if (line != "frame,t_s,veh_x_m,veh_y_m,aw_x_m,aw_y_m")
        throw IoError(context + ": unexpected header '" + line + "'");
      continue;
    }
    if (line.empty()) continue;
    auto fields = detail::split_csv(line);
    if (fields.size() != 6)
      throw IoError(context + ": expected 6 fields, got " + std::to_string(fields.size()));
    GroundTruthFrame f;
    f.frame_index = static_cast<int>(detail::parse_long(fields[0], context));
    f.time_s = detail::parse_double(fields[1], context);
    f.vehicle = {detail::parse_double(fields[2], context),
                 detail::parse_double(fields[3], context)};
    f.wheelchair = {detail::parse_double(fields[4], context),
                    detail::parse_double(fields[5], context)};
    seq.frames.push_back(f);
  }
  return seq;
}

}  // namespace crossguard
