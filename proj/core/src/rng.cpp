#include "crossguard/rng.hpp"

#include <cmath>
#include <numbers>

namespace crossguard {

std::uint64_t mix_seed(std::uint64_t state, std::uint64_t word) {
  // SplitMix64 step applied to (state ^ rotated word).
  std::uint64_t z = state ^ (word + 0x9e3779b97f4a7c15ULL);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::normal(double mean, double sigma) {
  // u1 in (0, 1] so log(u1) is finite.
  double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  return mean + sigma * r * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace crossguard
