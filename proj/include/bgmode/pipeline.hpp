#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bgmode/errors.hpp"
#include "bgmode/frame.hpp"
#include "bgmode/majority.hpp"
#include "bgmode/rng.hpp"

namespace bgmode {

inline std::uint64_t pow3(int exponent) {
  if (exponent < 0 || exponent > 40) {
    throw DomainError("3^" + std::to_string(exponent) +
                      " is outside the supported range");
  }
  std::uint64_t r = 1;
  for (int i = 0; i < exponent; ++i) {
    r *= 3;
  }
  return r;
}

// Levels beyond this overflow memory long before they help accuracy.
inline constexpr int kHardLevelCap = 20;

struct PipelineConfig {
  int level = 1;
  std::uint64_t seed = 0;
  // Policy cap, default 6: accuracy gains above it are negligible while the
  // frame budget (3^L draws) keeps tripling. Raise it explicitly to go higher.
  int max_level = 6;

  void validate() const {
    if (level < 1) {
      throw ConfigError("level must be >= 1, got " + std::to_string(level));
    }
    if (max_level < 1) {
      throw ConfigError("max_level must be >= 1, got " +
                        std::to_string(max_level));
    }
    if (level > max_level) {
      throw ConfigError("level " + std::to_string(level) +
                        " exceeds max_level " + std::to_string(max_level));
    }
    if (level > kHardLevelCap) {
      throw ConfigError("level must be <= " + std::to_string(kHardLevelCap));
    }
  }
};

struct PipelineReport {
  Frame background;
  std::uint64_t frames_sampled;  // always 3^level_used
  int level_used;
  std::uint64_t seed_used;
  std::vector<std::string> warnings;
};

// Three frames drawn independently and uniformly with replacement.
// Draw order is pinned: first frame, second frame, third frame — three
// consecutive sampler draws.
inline std::array<Frame, 3> sample_triple(const FrameSource& source,
                                          IndexSampler& rng) {
  if (source.empty()) {
    throw EmptyInputError("cannot sample frames from an empty source");
  }
  const std::size_t i1 = rng.next(source.size());
  const std::size_t i2 = rng.next(source.size());
  const std::size_t i3 = rng.next(source.size());
  return {source.at(i1), source.at(i2), source.at(i3)};
}

// The deterministic 3-frame special case: no sampling, just the modal image.
inline Frame generate_background_exhaustive(const Frame& img1,
                                            const Frame& img2,
                                            const Frame& img3) {
  return majority3_image(img1, img2, img3);
}

namespace detail {

// One tournament node evaluated over a single block of bytes. A leaf
// (depth 1) reduces the block slice of its three drawn frames; an inner node
// evaluates two children into its per-level scratch slots and the third
// straight into dst, then reduces in place. The in-place reduce leans on
// majority3_buffer loading each word before storing to the same offset, so
// out may alias its third input exactly. Leaves advance the shared cursor
// left to right.
inline void modal_block(std::span<const Frame* const> drawn,
                        std::size_t& leaf, int depth, std::size_t offset,
                        std::uint8_t* arena, std::size_t slot_bytes,
                        std::span<std::uint8_t> dst) {
  if (depth <= 1) {
    const std::size_t length = dst.size();
    majority3_buffer(drawn[3 * leaf]->data().subspan(offset, length),
                     drawn[3 * leaf + 1]->data().subspan(offset, length),
                     drawn[3 * leaf + 2]->data().subspan(offset, length), dst);
    ++leaf;
    return;
  }
  std::uint8_t* slot = arena + 2 * static_cast<std::size_t>(depth - 2) *
                                   slot_bytes;
  std::span<std::uint8_t> left(slot, dst.size());
  std::span<std::uint8_t> middle(slot + slot_bytes, dst.size());
  modal_block(drawn, leaf, depth - 1, offset, arena, slot_bytes, left);
  modal_block(drawn, leaf, depth - 1, offset, arena, slot_bytes, middle);
  modal_block(drawn, leaf, depth - 1, offset, arena, slot_bytes, dst);
  majority3_buffer(left, middle, dst, dst);
}

}  // namespace detail

// Multi-level modal background: a depth-L ternary tournament whose leaves are
// modal images of random triples and whose inner nodes take the majority of
// their children. Leaf i consumes draws 3i, 3i+1, 3i+2 of the seeded index
// stream, so the total draw count is exactly 3^L and the output is a pure
// function of (source bytes, seed, level). All draws happen up front; the
// tree is then evaluated block by block through a small per-level scratch
// arena, so intermediate results stay in the fastest cache and peak memory
// beyond the output is O(level) blocks, not O(3^level) images.
inline PipelineReport generate_background(const FrameSource& source,
                                          const PipelineConfig& config) {
  config.validate();
  if (source.empty()) {
    throw EmptyInputError("cannot generate a background from an empty source");
  }

  PipelineReport report{Frame(1, 1, 1), 0, config.level, config.seed, {}};
  if (source.size() < 3) {
    report.warnings.push_back(
        "source has only " + std::to_string(source.size()) +
        " frame(s); with-replacement sampling still works, but the majority "
        "assumption is vacuous below 3 frames");
  }

  IndexSampler rng(config.seed);
  const std::uint64_t leaves = pow3(config.level - 1);
  std::vector<const Frame*> drawn;
  drawn.reserve(static_cast<std::size_t>(3 * leaves));
  for (std::uint64_t i = 0; i < 3 * leaves; ++i) {
    drawn.push_back(&source.at(rng.next(source.size())));
  }

  const Frame& shape = source.at(0);
  Frame background(shape.width(), shape.height(), shape.channels());

  constexpr std::size_t kBlockBytes = 4096;
  const std::size_t inner_levels =
      config.level > 1 ? static_cast<std::size_t>(config.level - 1) : 0;
  std::vector<std::uint8_t> arena(2 * inner_levels * kBlockBytes);

  auto out = background.data();
  for (std::size_t offset = 0; offset < out.size(); offset += kBlockBytes) {
    const std::size_t length = std::min(kBlockBytes, out.size() - offset);
    std::size_t leaf = 0;
    detail::modal_block(drawn, leaf, config.level, offset, arena.data(),
                        kBlockBytes, out.subspan(offset, length));
  }

  report.background = std::move(background);
  report.frames_sampled = rng.draws();
  return report;
}

}  // namespace bgmode
