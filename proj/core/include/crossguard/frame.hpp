#pragma once

#include <cstdint>
#include <vector>

namespace crossguard {

/// 8-bit RGB pixel buffer, row-major, 3 bytes per pixel.
struct Frame {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  static Frame filled(int width, int height, std::uint8_t r, std::uint8_t g,
                      std::uint8_t b);

  std::uint8_t* at(int x, int y) { return pixels.data() + 3 * (y * width + x); }
  const std::uint8_t* at(int x, int y) const {
    return pixels.data() + 3 * (y * width + x);
  }

  friend bool operator==(const Frame&, const Frame&) = default;
};

/// Rec.601 luma in [0, 255].
double pixel_luminance(const std::uint8_t* rgb);

/// Mean and standard deviation (population) of per-pixel luminance.
double mean_luminance(const Frame& f);
double luminance_stddev(const Frame& f);

}  // namespace crossguard
