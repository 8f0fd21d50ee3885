#pragma once

#include <cstdint>
#include <random>

namespace crossguard {

/// Mixes a seed word into a stream key. SplitMix64 finalizer; used to derive
/// independent sub-stream seeds from (master_seed, scenario, sequence, ...)
/// so that parallel evaluation order never changes results.
std::uint64_t mix_seed(std::uint64_t state, std::uint64_t word);

/// Deterministic random stream with portable output.
///
/// The engine is std::mt19937_64 (bit-exact by the standard); the
/// distribution mappings are implemented here because the standard library's
/// distributions are implementation-defined and would break cross-platform
/// reproducibility of seeded experiments.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_index(std::uint64_t n) {
    auto i = static_cast<std::uint64_t>(uniform01() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Gaussian via Box-Muller; draws exactly two uniforms per call.
  double normal(double mean, double sigma);

private:
  std::mt19937_64 engine_;
};

}  // namespace crossguard
