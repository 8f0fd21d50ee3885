#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "crossguard/frame.hpp"
#include "crossguard/ids.hpp"

namespace crossguard {

enum class ConditionKind { original, fog, rain, bright, dark };
enum class RainIntensity { drizzle, heavy, torrential };

/// A named environmental perturbation. Coefficient vocabulary follows the
/// filter catalogue: fog in {0.3, 0.5, 0.7}, bright/dark in
/// {0.3, 0.5, 0.7, 0.9}, rain in {drizzle, heavy, torrential}.
struct Condition {
  ConditionKind kind = ConditionKind::original;
  double coefficient = 0.0;                       // fog/bright/dark
  RainIntensity rain = RainIntensity::drizzle;    // rain only

  /// Canonical name: "original", "fog_0.5", "rain_heavy", "bright_0.3", ...
  std::string name() const;

  /// Parses a canonical name; throws ConfigError listing the valid names.
  static Condition parse(std::string_view name);

  /// The full valid vocabulary (15 conditions).
  static const std::vector<Condition>& catalogue();

  static Condition original() { return {}; }
  static Condition fog(double coeff) { return {ConditionKind::fog, coeff, {}}; }
  static Condition bright(double coeff) { return {ConditionKind::bright, coeff, {}}; }
  static Condition dark(double coeff) { return {ConditionKind::dark, coeff, {}}; }
  static Condition rain_of(RainIntensity i) {
    return {ConditionKind::rain, 0.0, i};
  }

  friend bool operator==(const Condition&, const Condition&) = default;
};

// ---------------------------------------------------------------------------
// Filters. All are pure, preserve frame dimensions, and round half-up on the
// final 8-bit conversion so outputs are bit-exact across platforms.
// ---------------------------------------------------------------------------

/// Scales HLS lightness by (1 + coeff), clamped at white. coeff in [0, 1].
Frame apply_brightness(const Frame& f, double coeff);

/// Scales HLS lightness by (1 - coeff). coeff in [0, 1].
Frame apply_darkness(const Frame& f, double coeff);

/// Uniform white-haze blend p' = (1-coeff)*p + coeff*255 followed by one
/// 3x3 box blur pass with edge clamping. coeff in (0, 1].
Frame apply_fog(const Frame& f, double coeff);

/// Seeded streak overlay (deterministic), then global darkening (L x 0.93)
/// and one 3x3 box blur pass.
Frame apply_rain(const Frame& f, RainIntensity intensity, std::uint64_t seed);

/// The streak phase of apply_rain on its own: N = round(density * W * H / 1e6)
/// streaks (density 150/600/1200 per intensity), each a 1-px line of 20
/// samples slanted uniformly in [-10, +10] degrees, blended at (200,200,200)
/// with alpha 0.7.
Frame rain_streak_overlay(const Frame& f, RainIntensity intensity,
                          std::uint64_t seed);

/// Applies the named condition (original is the identity).
Frame apply_condition(const Frame& f, const Condition& condition,
                      std::uint64_t seed);

// ---------------------------------------------------------------------------
// Detection degradation
// ---------------------------------------------------------------------------

/// Per-(camera, model, scenario, condition) detection behaviour of the
/// synthetic perception channel.
struct DegradationProfile {
  double detect_prob = 1.0;   // probability a frame yields a real detection
  double noise_sigma_m = 0.1; // Gaussian distance noise scale

  void validate() const;
};

/// Calibrated lookup of degradation profiles.
///
/// The built-in table encodes the published mean frame recognition rates per
/// (camera, model, scenario) for: original, fog 0.3/0.5, rain drizzle/heavy,
/// bright 0.5 and dark 0.5. Fog 0.7 and torrential rain are carried with
/// detect_prob = 0.01 (their measured rates are near zero and were not
/// tabulated). Every entry can be overridden.
class DegradationTable {
public:
  /// Table seeded with the built-in calibration.
  static DegradationTable builtin();

  /// Overrides (or adds) one entry.
  void set(Camera camera, Model model, ScenarioId scenario,
           const Condition& condition, const DegradationProfile& profile);

  /// Throws ConfigError listing the valid condition keys on unknown tuples.
  DegradationProfile lookup(Camera camera, Model model, ScenarioId scenario,
                            const Condition& condition) const;

private:
  struct Entry {
    Camera camera;
    Model model;
    ScenarioId scenario;
    std::string condition;
    DegradationProfile profile;
  };
  std::vector<Entry> entries_;
};

/// Built-in calibration lookup (shorthand for DegradationTable::builtin()).
DegradationProfile degradation_profile(Camera camera, Model model,
                                       ScenarioId scenario,
                                       const Condition& condition);

}  // namespace crossguard
