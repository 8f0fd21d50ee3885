#pragma once

#include <filesystem>

#include "crossguard/frame.hpp"

namespace crossguard {

/// Loads a PNG as 8-bit RGB. Palette and grayscale images are expanded,
/// 16-bit channels reduced, alpha stripped. Throws IoError on failure.
Frame read_png(const std::filesystem::path& path);

/// Writes an 8-bit RGB PNG. Throws IoError on failure.
void write_png(const Frame& frame, const std::filesystem::path& path);

}  // namespace crossguard
