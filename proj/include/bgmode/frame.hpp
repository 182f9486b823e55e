#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bgmode/errors.hpp"

namespace bgmode {

// 8-bit raster, row-major, channel-interleaved. 1 channel (gray) or 3 (RGB).
// Data length is always width * height * channels. Frames are treated as
// immutable values once built; every consumer takes them by const reference.
class Frame {
 public:
  static constexpr std::size_t kMaxDimension = 1'000'000;

  Frame(std::size_t width, std::size_t height, int channels,
        std::uint8_t fill = 0)
      : width_(width),
        height_(height),
        channels_(channels),
        data_(checked_size(width, height, channels), fill) {}

  static Frame from_data(std::size_t width, std::size_t height, int channels,
                         std::vector<std::uint8_t> data) {
    Frame f(width, height, channels);
    if (data.size() != f.size_bytes()) {
      throw DimensionError("data length " + std::to_string(data.size()) +
                           " does not match " + std::to_string(width) + "x" +
                           std::to_string(height) + "x" +
                           std::to_string(channels) + " = " +
                           std::to_string(f.size_bytes()) + " bytes");
    }
    f.data_ = std::move(data);
    return f;
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  std::size_t pixel_count() const noexcept { return width_ * height_; }
  std::size_t size_bytes() const noexcept { return data_.size(); }

  std::span<const std::uint8_t> data() const noexcept { return data_; }
  std::span<std::uint8_t> data() noexcept { return data_; }

  std::uint8_t at(std::size_t row, std::size_t col, int channel = 0) const {
    return data_[checked_index(row, col, channel)];
  }
  std::uint8_t& at(std::size_t row, std::size_t col, int channel = 0) {
    return data_[checked_index(row, col, channel)];
  }

  bool same_shape(const Frame& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_ &&
           channels_ == other.channels_;
  }

  std::string shape_string() const {
    return std::to_string(width_) + "x" + std::to_string(height_) + "x" +
           std::to_string(channels_);
  }

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  static std::size_t checked_size(std::size_t width, std::size_t height,
                                  int channels) {
    if (width < 1 || height < 1) {
      throw DimensionError("frame dimensions must be at least 1x1, got " +
                           std::to_string(width) + "x" +
                           std::to_string(height));
    }
    if (width > kMaxDimension || height > kMaxDimension) {
      throw DimensionError("frame dimension exceeds limit of " +
                           std::to_string(kMaxDimension));
    }
    if (channels != 1 && channels != 3) {
      throw DimensionError("channel count must be 1 or 3, got " +
                           std::to_string(channels));
    }
    return width * height * static_cast<std::size_t>(channels);
  }

  std::size_t checked_index(std::size_t row, std::size_t col,
                            int channel) const {
    if (row >= height_ || col >= width_ || channel < 0 ||
        channel >= channels_) {
      throw BoundsError("pixel access (" + std::to_string(row) + ", " +
                        std::to_string(col) + ", " + std::to_string(channel) +
                        ") outside " + shape_string());
    }
    return (row * width_ + col) * static_cast<std::size_t>(channels_) +
           static_cast<std::size_t>(channel);
  }

  std::size_t width_;
  std::size_t height_;
  int channels_;
  std::vector<std::uint8_t> data_;
};

// Ordered, random-access sequence of same-shaped frames (the video).
// A default-constructed source is empty and takes its shape from the first
// frame pushed; mixed shapes are rejected, never coerced.
class FrameSource {
 public:
  FrameSource() = default;

  explicit FrameSource(std::vector<Frame> frames) {
    if (frames.empty()) {
      throw EmptyInputError("frame source requires at least one frame");
    }
    for (auto& f : frames) {
      push_back(std::move(f));
    }
  }

  void push_back(Frame frame) {
    if (!frames_.empty() && !frame.same_shape(frames_.front())) {
      throw DimensionError("frame shape " + frame.shape_string() +
                           " does not match source shape " +
                           frames_.front().shape_string());
    }
    frames_.push_back(std::move(frame));
  }

  const Frame& at(std::size_t index) const {
    if (index >= frames_.size()) {
      throw BoundsError("frame index " + std::to_string(index) +
                        " out of range for source of " +
                        std::to_string(frames_.size()) + " frames");
    }
    return frames_[index];
  }

  std::size_t size() const noexcept { return frames_.size(); }
  bool empty() const noexcept { return frames_.empty(); }

  std::size_t width() const { return front().width(); }
  std::size_t height() const { return front().height(); }
  int channels() const { return front().channels(); }

 private:
  const Frame& front() const {
    if (frames_.empty()) {
      throw EmptyInputError("frame source is empty");
    }
    return frames_.front();
  }

  std::vector<Frame> frames_;
};

}  // namespace bgmode
