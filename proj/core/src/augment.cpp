#include "crossguard/augment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "crossguard/errors.hpp"
#include "crossguard/rng.hpp"
#include "text_util.hpp"

namespace crossguard {

namespace {

std::uint8_t round_half_up(double v) {
  double r = std::floor(v + 0.5);
  return static_cast<std::uint8_t>(std::clamp(r, 0.0, 255.0));
}

struct Hls {
  double h;  // degrees in [0, 360)
  double l;
  double s;
};

Hls rgb_to_hls(const std::uint8_t* rgb) {
  double r = rgb[0] / 255.0, g = rgb[1] / 255.0, b = rgb[2] / 255.0;
  double hi = std::max({r, g, b});
  double lo = std::min({r, g, b});
  double l = (hi + lo) / 2.0;
  if (hi == lo) return {0.0, l, 0.0};
  double c = hi - lo;
  double s = c / (1.0 - std::abs(2.0 * l - 1.0));
  double h;
  if (hi == r)
    h = std::fmod((g - b) / c + 6.0, 6.0);
  else if (hi == g)
    h = (b - r) / c + 2.0;
  else
    h = (r - g) / c + 4.0;
  return {60.0 * h, l, s};
}

void hls_to_rgb(const Hls& hls, std::uint8_t* rgb) {
  double c = (1.0 - std::abs(2.0 * hls.l - 1.0)) * hls.s;
  double hp = hls.h / 60.0;
  double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
  double r = 0.0, g = 0.0, b = 0.0;
  if (hp < 1.0) {
    r = c; g = x;
  } else if (hp < 2.0) {
    r = x; g = c;
  } else if (hp < 3.0) {
    g = c; b = x;
  } else if (hp < 4.0) {
    g = x; b = c;
  } else if (hp < 5.0) {
    r = x; b = c;
  } else {
    r = c; b = x;
  }
  double m = hls.l - c / 2.0;
  rgb[0] = round_half_up((r + m) * 255.0);
  rgb[1] = round_half_up((g + m) * 255.0);
  rgb[2] = round_half_up((b + m) * 255.0);
}

/// Scales HLS lightness by `factor`, clamping to [0, 1].
Frame scale_lightness(const Frame& f, double factor) {
  Frame out = f;
  for (std::size_t i = 0; i < out.pixels.size(); i += 3) {
    Hls hls = rgb_to_hls(&f.pixels[i]);
    hls.l = std::clamp(hls.l * factor, 0.0, 1.0);
    hls_to_rgb(hls, &out.pixels[i]);
  }
  return out;
}

Frame box_blur3(const Frame& f) {
  Frame out = f;
  for (int y = 0; y < f.height; ++y) {
    for (int x = 0; x < f.width; ++x) {
      int sum[3] = {0, 0, 0};
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          int cx = std::clamp(x + dx, 0, f.width - 1);
          int cy = std::clamp(y + dy, 0, f.height - 1);
          const std::uint8_t* p = f.at(cx, cy);
          sum[0] += p[0];
          sum[1] += p[1];
          sum[2] += p[2];
        }
      }
      std::uint8_t* q = out.at(x, y);
      for (int ch = 0; ch < 3; ++ch) q[ch] = round_half_up(sum[ch] / 9.0);
    }
  }
  return out;
}

int streak_density(RainIntensity intensity) {
  switch (intensity) {
    case RainIntensity::drizzle: return 150;
    case RainIntensity::heavy: return 600;
    case RainIntensity::torrential: return 1200;
  }
  return 150;
}

std::string rain_name(RainIntensity intensity) {
  switch (intensity) {
    case RainIntensity::drizzle: return "drizzle";
    case RainIntensity::heavy: return "heavy";
    case RainIntensity::torrential: return "torrential";
  }
  return "drizzle";
}

std::string catalogue_names() {
  std::string names;
  for (const auto& c : Condition::catalogue()) {
    if (!names.empty()) names += ", ";
    names += c.name();
  }
  return names;
}

}  // namespace

std::string Condition::name() const {
  switch (kind) {
    case ConditionKind::original: return "original";
    case ConditionKind::fog: return "fog_" + detail::format_double_fixed(coefficient, 1);
    case ConditionKind::rain: return "rain_" + rain_name(rain);
    case ConditionKind::bright:
      return "bright_" + detail::format_double_fixed(coefficient, 1);
    case ConditionKind::dark: return "dark_" + detail::format_double_fixed(coefficient, 1);
  }
  return "original";
}

const std::vector<Condition>& Condition::catalogue() {
  static const std::vector<Condition> all = [] {
    std::vector<Condition> v;
    v.push_back(Condition::original());
    for (double c : {0.3, 0.5, 0.7}) v.push_back(Condition::fog(c));
    for (auto i : {RainIntensity::drizzle, RainIntensity::heavy, RainIntensity::torrential})
      v.push_back(Condition::rain_of(i));
    for (double c : {0.3, 0.5, 0.7, 0.9}) v.push_back(Condition::bright(c));
    for (double c : {0.3, 0.5, 0.7, 0.9}) v.push_back(Condition::dark(c));
    return v;
  }();
  return all;
}

Condition Condition::parse(std::string_view name) {
  for (const auto& c : catalogue())
    if (c.name() == name) return c;
  throw ConfigError("unknown condition '" + std::string(name) +
                    "' (valid: " + catalogue_names() + ")");
}

Frame apply_brightness(const Frame& f, double coeff) {
  if (coeff < 0.0 || coeff > 1.0)
    throw ConfigError("brightness coefficient must be in [0, 1]");
  if (coeff == 0.0) return f;
  return scale_lightness(f, 1.0 + coeff);
}

Frame apply_darkness(const Frame& f, double coeff) {
  if (coeff < 0.0 || coeff > 1.0)
    throw ConfigError("darkness coefficient must be in [0, 1]");
  if (coeff == 0.0) return f;
  return scale_lightness(f, 1.0 - coeff);
}

Frame apply_fog(const Frame& f, double coeff) {
  if (coeff <= 0.0 || coeff > 1.0)
    throw ConfigError("fog coefficient must be in (0, 1]");
  Frame blended = f;
  for (auto& p : blended.pixels)
    p = round_half_up((1.0 - coeff) * p + coeff * 255.0);
  return box_blur3(blended);
}

Frame rain_streak_overlay(const Frame& f, RainIntensity intensity,
                          std::uint64_t seed) {
  Frame out = f;
  auto n_streaks = static_cast<long>(std::llround(
      streak_density(intensity) * static_cast<double>(f.width) * f.height / 1e6));
  Rng rng(seed);
  constexpr double kStreakColor = 200.0;
  constexpr double kAlpha = 0.7;
  constexpr int kStreakLength = 20;
  constexpr double kMaxSlantDeg = 10.0;
  for (long s = 0; s < n_streaks; ++s) {
    auto x0 = static_cast<double>(rng.uniform_index(static_cast<std::uint64_t>(f.width)));
    auto y0 = static_cast<double>(rng.uniform_index(static_cast<std::uint64_t>(f.height)));
    double slant = rng.uniform(-kMaxSlantDeg, kMaxSlantDeg) * std::numbers::pi / 180.0;
    double dir_x = std::sin(slant);
    double dir_y = std::cos(slant);
    int prev_x = -1, prev_y = -1;
    for (int i = 0; i < kStreakLength; ++i) {
      int px = static_cast<int>(std::lround(x0 + i * dir_x));
      int py = static_cast<int>(std::lround(y0 + i * dir_y));
      if (px == prev_x && py == prev_y) continue;
      prev_x = px;
      prev_y = py;
      if (px < 0 || px >= f.width || py < 0 || py >= f.height) continue;
      std::uint8_t* p = out.at(px, py);
      for (int ch = 0; ch < 3; ++ch)
        p[ch] = round_half_up((1.0 - kAlpha) * p[ch] + kAlpha * kStreakColor);
    }
  }
  return out;
}

Frame apply_rain(const Frame& f, RainIntensity intensity, std::uint64_t seed) {
  Frame streaked = rain_streak_overlay(f, intensity, seed);
  return box_blur3(scale_lightness(streaked, 0.93));
}

Frame apply_condition(const Frame& f, const Condition& condition,
                      std::uint64_t seed) {
  switch (condition.kind) {
    case ConditionKind::original: return f;
    case ConditionKind::fog: return apply_fog(f, condition.coefficient);
    case ConditionKind::rain: return apply_rain(f, condition.rain, seed);
    case ConditionKind::bright: return apply_brightness(f, condition.coefficient);
    case ConditionKind::dark: return apply_darkness(f, condition.coefficient);
  }
  return f;
}

void DegradationProfile::validate() const {
  if (detect_prob < 0.0 || detect_prob > 1.0)
    throw ConfigError("degradation profile: detect_prob must be in [0, 1]");
  if (noise_sigma_m < 0.0)
    throw ConfigError("degradation profile: noise_sigma must be >= 0");
}

DegradationTable DegradationTable::builtin() {
  // Mean frame recognition rates (percent) per (camera, model), in the
  // condition order: original, fog 0.3, fog 0.5, rain drizzle, rain heavy,
  // bright 0.5, dark 0.5.
  struct Row {
    Camera camera;
    Model model;
    std::array<double, 7> percent;
  };
  static constexpr std::array<Row, 4> kScenarioA = {{
      {Camera::drone, Model::y5, {20.52, 21.11, 7.61, 27.33, 0.82, 18.10, 17.28}},
      {Camera::drone, Model::y8, {73.41, 52.30, 28.16, 73.11, 69.00, 75.32, 76.10}},
      {Camera::aw, Model::y5, {35.96, 31.53, 6.44, 25.82, 0.20, 31.73, 36.61}},
      {Camera::aw, Model::y8, {41.63, 8.12, 6.13, 29.30, 24.83, 46.56, 52.31}},
  }};
  static constexpr std::array<Row, 4> kScenarioB = {{
      {Camera::drone, Model::y5, {38.03, 35.59, 11.12, 38.27, 0.16, 42.23, 43.42}},
      {Camera::drone, Model::y8, {47.39, 52.02, 19.09, 40.53, 26.16, 81.42, 81.17}},
      {Camera::aw, Model::y5, {31.86, 27.10, 18.53, 15.53, 0.20, 27.41, 26.66}},
      {Camera::aw, Model::y8, {25.51, 12.44, 4.59, 15.02, 14.16, 58.31, 64.70}},
  }};
  const std::array<Condition, 7> conditions = {
      Condition::original(),      Condition::fog(0.3),
      Condition::fog(0.5),        Condition::rain_of(RainIntensity::drizzle),
      Condition::rain_of(RainIntensity::heavy), Condition::bright(0.5),
      Condition::dark(0.5),
  };
  // Recognition in fog 0.7 and torrential rain collapses to near zero; no
  // tabulated rates exist, so both carry a nominal floor.
  const std::array<Condition, 2> untabulated = {
      Condition::fog(0.7), Condition::rain_of(RainIntensity::torrential)};
  constexpr double kFloorProb = 0.01;
  constexpr double kDefaultNoiseSigma = 0.1;

  DegradationTable table;
  for (auto [scenario, rows] :
       {std::pair{ScenarioId::a, &kScenarioA}, std::pair{ScenarioId::b, &kScenarioB}}) {
    for (const Row& row : *rows) {
      for (std::size_t i = 0; i < conditions.size(); ++i)
        table.set(row.camera, row.model, scenario, conditions[i],
                  {row.percent[i] / 100.0, kDefaultNoiseSigma});
      for (const auto& c : untabulated)
        table.set(row.camera, row.model, scenario, c,
                  {kFloorProb, kDefaultNoiseSigma});
    }
  }
  return table;
}

void DegradationTable::set(Camera camera, Model model, ScenarioId scenario,
                           const Condition& condition,
                           const DegradationProfile& profile) {
  profile.validate();
  std::string key = condition.name();
  for (auto& e : entries_) {
    if (e.camera == camera && e.model == model && e.scenario == scenario &&
        e.condition == key) {
      e.profile = profile;
      return;
    }
  }
  entries_.push_back({camera, model, scenario, key, profile});
}

DegradationProfile DegradationTable::lookup(Camera camera, Model model,
                                            ScenarioId scenario,
                                            const Condition& condition) const {
  std::string key = condition.name();
  for (const auto& e : entries_)
    if (e.camera == camera && e.model == model && e.scenario == scenario &&
        e.condition == key)
      return e.profile;

  std::string known;
  for (const auto& e : entries_) {
    if (e.camera != camera || e.model != model || e.scenario != scenario) continue;
    if (!known.empty()) known += ", ";
    known += e.condition;
  }
  throw ConfigError("no degradation profile for (" + to_string(camera) + ", " +
                    to_string(model) + ", " + to_string(scenario) + ", " + key +
                    "); known conditions: " + known);
}

DegradationProfile degradation_profile(Camera camera, Model model,
                                       ScenarioId scenario,
                                       const Condition& condition) {
  static const DegradationTable table = DegradationTable::builtin();
  return table.lookup(camera, model, scenario, condition);
}

}  // namespace crossguard
