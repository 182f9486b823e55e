#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "bgmode/errors.hpp"
#include "bgmode/frame.hpp"

namespace bgmode {

struct SubtractionConfig {
  int threshold = 0;

  void validate() const {
    if (threshold < 0 || threshold > 255) {
      throw ConfigError("threshold must lie in [0, 255], got " +
                        std::to_string(threshold));
    }
  }
};

// Single-channel binary mask: 255 marks foreground, 0 background.
struct ForegroundMask {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> data;

  std::uint8_t at(std::size_t row, std::size_t col) const {
    if (row >= height || col >= width) {
      throw BoundsError("mask index (" + std::to_string(row) + ", " +
                        std::to_string(col) + ") outside " +
                        std::to_string(width) + "x" + std::to_string(height));
    }
    return data[row * width + col];
  }
};

// A pixel is foreground when its largest per-channel absolute difference from
// the background strictly exceeds the threshold.
inline ForegroundMask subtract(const Frame& frame, const Frame& background,
                               const SubtractionConfig& config) {
  config.validate();
  if (!frame.same_shape(background)) {
    throw DimensionError("frame shape " + frame.shape_string() +
                         " does not match background shape " +
                         background.shape_string());
  }

  ForegroundMask mask;
  mask.width = frame.width();
  mask.height = frame.height();
  mask.data.resize(frame.pixel_count());

  const auto a = frame.data();
  const auto b = background.data();
  const auto channels = static_cast<std::size_t>(frame.channels());
  for (std::size_t pixel = 0; pixel < mask.data.size(); ++pixel) {
    int diff = 0;
    for (std::size_t c = 0; c < channels; ++c) {
      const int d = std::abs(static_cast<int>(a[pixel * channels + c]) -
                             static_cast<int>(b[pixel * channels + c]));
      if (d > diff) {
        diff = d;
      }
    }
    mask.data[pixel] = diff > config.threshold ? 255 : 0;
  }
  return mask;
}

struct MaskStats {
  std::size_t foreground_pixels = 0;
  std::size_t background_pixels = 0;
  double foreground_fraction = 0.0;
};

inline MaskStats mask_stats(const ForegroundMask& mask) {
  MaskStats stats;
  for (std::uint8_t v : mask.data) {
    if (v != 0) {
      stats.foreground_pixels += 1;
    } else {
      stats.background_pixels += 1;
    }
  }
  if (!mask.data.empty()) {
    stats.foreground_fraction = static_cast<double>(stats.foreground_pixels) /
                                static_cast<double>(mask.data.size());
  }
  return stats;
}

inline Frame mask_to_frame(const ForegroundMask& mask) {
  return Frame::from_data(mask.width, mask.height, 1, mask.data);
}

}  // namespace bgmode
