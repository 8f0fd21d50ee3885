#include "crossguard/frame.hpp"

#include <cmath>

namespace crossguard {

Frame Frame::filled(int width, int height, std::uint8_t r, std::uint8_t g,
                    std::uint8_t b) {
  Frame f;
  f.width = width;
  f.height = height;
  f.pixels.resize(static_cast<std::size_t>(width) * height * 3);
  for (std::size_t i = 0; i < f.pixels.size(); i += 3) {
    f.pixels[i] = r;
    f.pixels[i + 1] = g;
    f.pixels[i + 2] = b;
  }
  return f;
}

double pixel_luminance(const std::uint8_t* rgb) {
  return 0.299 * rgb[0] + 0.587 * rgb[1] + 0.114 * rgb[2];
}

double mean_luminance(const Frame& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < f.pixels.size(); i += 3)
    sum += pixel_luminance(&f.pixels[i]);
  return sum / (static_cast<double>(f.width) * f.height);
}

double luminance_stddev(const Frame& f) {
  double mean = mean_luminance(f);
  double sum = 0.0;
  for (std::size_t i = 0; i < f.pixels.size(); i += 3) {
    double d = pixel_luminance(&f.pixels[i]) - mean;
    sum += d * d;
  }
  return std::sqrt(sum / (static_cast<double>(f.width) * f.height));
}

}  // namespace crossguard
