#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bgmode/errors.hpp"
#include "bgmode/frame.hpp"
#include "bgmode/rng.hpp"

namespace bgmode {

// Half-open pixel rectangle: rows [top, bottom), columns [left, right).
struct Rect {
  std::size_t top = 0;
  std::size_t left = 0;
  std::size_t bottom = 0;
  std::size_t right = 0;

  bool contains(std::size_t row, std::size_t col) const noexcept {
    return row >= top && row < bottom && col >= left && col < right;
  }

  bool intersects(const Rect& other) const noexcept {
    return top < other.bottom && other.top < bottom && left < other.right &&
           other.left < right;
  }

  std::size_t area() const noexcept {
    return (bottom - top) * (right - left);
  }
};

inline std::uint8_t ramp_value(std::size_t col, std::size_t width) {
  return static_cast<std::uint8_t>((255 * col) / (width - 1));
}

// The three-frame toy experiment: a horizontal intensity ramp with one opaque
// rectangular object per frame, the rectangles pairwise disjoint so that at
// every pixel at least two of the three frames show the ramp.
struct RampScene {
  Frame background;
  std::array<Frame, 3> frames;
  std::array<std::array<std::uint8_t, 3>, 3> object_colors;
  std::array<Rect, 3> object_rects;

  bool in_any_object(std::size_t row, std::size_t col) const noexcept {
    return object_rects[0].contains(row, col) ||
           object_rects[1].contains(row, col) ||
           object_rects[2].contains(row, col);
  }
};

// RGB ramp background (all channels equal, 0 at column 0 and 255 at the last
// column) with objects colored [0,0,64], [0,0,128], [0,0,255]: frame 1's in
// the bottom-left third, frame 2's in the top-right third, frame 3's in a
// center strip. Disjointness holds by row ranges alone.
inline RampScene make_ramp_scene(std::size_t width, std::size_t height) {
  if (width < 8 || height < 8) {
    throw DimensionError(
        "ramp scene needs width and height >= 8 to place three disjoint "
        "rectangles, got " +
        std::to_string(width) + "x" + std::to_string(height));
  }

  Frame background(width, height, 3);
  {
    auto data = background.data();
    std::size_t k = 0;
    for (std::size_t row = 0; row < height; ++row) {
      for (std::size_t col = 0; col < width; ++col) {
        const std::uint8_t v = ramp_value(col, width);
        data[k++] = v;
        data[k++] = v;
        data[k++] = v;
      }
    }
  }

  RampScene scene{background,
                  {background, background, background},
                  {{{0, 0, 64}, {0, 0, 128}, {0, 0, 255}}},
                  {Rect{2 * height / 3, 0, height, width / 3},
                   Rect{0, 2 * width / 3, height / 3, width},
                   Rect{height / 3, width / 3, 2 * height / 3, 2 * width / 3}}};

  for (int i = 0; i < 3; ++i) {
    Frame& frame = scene.frames[static_cast<std::size_t>(i)];
    const Rect& rect = scene.object_rects[static_cast<std::size_t>(i)];
    const auto& color = scene.object_colors[static_cast<std::size_t>(i)];
    for (std::size_t row = rect.top; row < rect.bottom; ++row) {
      for (std::size_t col = rect.left; col < rect.right; ++col) {
        frame.at(row, col, 0) = color[0];
        frame.at(row, col, 1) = color[1];
        frame.at(row, col, 2) = color[2];
      }
    }
  }
  return scene;
}

// Gray scene with a known background where every pixel shows the background
// byte in exactly `background_per_pixel` of the frames and its bitwise
// complement in the rest. The complement flips all 8 bits at once, so the
// modal frequency of every bit position equals the pixel-level fraction.
struct MajorityScene {
  Frame background;
  FrameSource frames;
  double p0_target;
  double modal_fraction;                // background_per_pixel / frame_count
  std::size_t background_per_pixel;
  // occupancy[f * width*height + pixel] == 1 where frame f shows foreground.
  std::vector<std::uint8_t> occupancy;

  bool is_foreground(std::size_t frame, std::size_t row,
                     std::size_t col) const {
    return occupancy[frame * background.pixel_count() +
                     row * background.width() + col] != 0;
  }
};

// Which frames carry foreground at each pixel is decided by a seeded
// shuffle, not coin flips, so the modal fraction is exact per pixel.
// Fractions round up to ceil(p0 * frame_count) so the realized fraction is
// never below the requested one. Draw order: background bytes first (one
// engine draw per pixel), then one shuffle per pixel in row-major order.
inline MajorityScene make_majority_scene(std::size_t width, std::size_t height,
                                         std::size_t frame_count, double p0,
                                         std::uint64_t seed) {
  if (width < 1 || height < 1) {
    throw DimensionError("scene dimensions must be at least 1x1");
  }
  if (frame_count < 3) {
    throw ConfigError("frame_count must be >= 3, got " +
                      std::to_string(frame_count));
  }
  if (!(p0 <= 1.0)) {
    throw DomainError("p0 must be <= 1, got " + std::to_string(p0));
  }
  if (!(p0 > 0.5)) {
    throw AssumptionError(
        "majority assumption violated: modal fraction p0 must exceed 0.5, "
        "got " +
        std::to_string(p0));
  }

  const double exact = p0 * static_cast<double>(frame_count);
  auto background_per_pixel =
      static_cast<std::size_t>(std::ceil(exact - 1e-9));
  if (background_per_pixel > frame_count) {
    background_per_pixel = frame_count;
  }

  const std::size_t pixels = width * height;
  const std::size_t foreground_per_pixel = frame_count - background_per_pixel;

  std::mt19937_64 engine(seed);

  Frame background(width, height, 1);
  for (auto& byte : background.data()) {
    byte = static_cast<std::uint8_t>(engine() & 0xFF);
  }

  std::vector<std::uint8_t> occupancy(frame_count * pixels, 0);
  std::vector<std::uint32_t> order(frame_count);
  for (std::size_t pixel = 0; pixel < pixels; ++pixel) {
    std::iota(order.begin(), order.end(), 0U);
    deterministic_shuffle(std::span<std::uint32_t>(order), engine);
    for (std::size_t k = 0; k < foreground_per_pixel; ++k) {
      occupancy[static_cast<std::size_t>(order[k]) * pixels + pixel] = 1;
    }
  }

  FrameSource frames;
  const auto bg = background.data();
  for (std::size_t f = 0; f < frame_count; ++f) {
    Frame frame(width, height, 1);
    auto out = frame.data();
    const std::uint8_t* occ = occupancy.data() + f * pixels;
    for (std::size_t pixel = 0; pixel < pixels; ++pixel) {
      out[pixel] = occ[pixel] ? static_cast<std::uint8_t>(~bg[pixel])
                              : bg[pixel];
    }
    frames.push_back(std::move(frame));
  }

  return MajorityScene{std::move(background),
                       std::move(frames),
                       p0,
                       static_cast<double>(background_per_pixel) /
                           static_cast<double>(frame_count),
                       background_per_pixel,
                       std::move(occupancy)};
}

}  // namespace bgmode
