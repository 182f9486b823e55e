#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <string>

#include "bgmode/errors.hpp"
#include "bgmode/frame.hpp"

namespace bgmode {

// Boolean majority of three bits: 1 iff at least two inputs are 1.
// Computed as (x3 AND (x1 XOR x2)) OR (x1 AND x2) — four binary operations,
// the same form used at byte, word, and image level below.
constexpr std::uint8_t majority3_bit(std::uint8_t x1, std::uint8_t x2,
                                     std::uint8_t x3) noexcept {
  return static_cast<std::uint8_t>((x3 & (x1 ^ x2)) | (x1 & x2));
}

// Bitwise majority across all 8 bit positions of three bytes in parallel.
constexpr std::uint8_t majority3_byte(std::uint8_t a, std::uint8_t b,
                                      std::uint8_t c) noexcept {
  return static_cast<std::uint8_t>((c & (a ^ b)) | (a & b));
}

namespace detail {

// 8 bytes at a time through a 64-bit word, byte tail at the end. The word
// loop and the byte loop compute identical bits, so results never depend on
// buffer length or alignment.
inline void majority3_buffer(std::span<const std::uint8_t> a,
                             std::span<const std::uint8_t> b,
                             std::span<const std::uint8_t> c,
                             std::span<std::uint8_t> out) noexcept {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    std::uint64_t wa, wb, wc;
    std::memcpy(&wa, a.data() + i, 8);
    std::memcpy(&wb, b.data() + i, 8);
    std::memcpy(&wc, c.data() + i, 8);
    const std::uint64_t w = (wc & (wa ^ wb)) | (wa & wb);
    std::memcpy(out.data() + i, &w, 8);
  }
  for (; i < n; ++i) {
    out[i] = majority3_byte(a[i], b[i], c[i]);
  }
}

template <typename WordOp>
inline Frame binary_image_op(const Frame& x, const Frame& y, WordOp op,
                             const char* name) {
  if (!x.same_shape(y)) {
    throw DimensionError(std::string(name) + ": shape mismatch " +
                         x.shape_string() + " vs " + y.shape_string());
  }
  Frame result(x.width(), x.height(), x.channels());
  auto xs = x.data();
  auto ys = y.data();
  auto rs = result.data();
  const std::size_t n = rs.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    std::uint64_t wx, wy;
    std::memcpy(&wx, xs.data() + i, 8);
    std::memcpy(&wy, ys.data() + i, 8);
    const std::uint64_t w = op(wx, wy);
    std::memcpy(rs.data() + i, &w, 8);
  }
  for (; i < n; ++i) {
    rs[i] = static_cast<std::uint8_t>(
        op(static_cast<std::uint64_t>(xs[i]), static_cast<std::uint64_t>(ys[i])));
  }
  return result;
}

}  // namespace detail

// Modal image of three same-shaped frames: byte k of the result is
// majority3_byte of byte k of the inputs. Channels are independent by
// construction (the operation never crosses byte boundaries).
inline Frame majority3_image(const Frame& img1, const Frame& img2,
                             const Frame& img3) {
  if (!img1.same_shape(img2) || !img1.same_shape(img3)) {
    throw DimensionError("majority3_image: shape mismatch " +
                         img1.shape_string() + " vs " + img2.shape_string() +
                         " vs " + img3.shape_string());
  }
  Frame result(img1.width(), img1.height(), img1.channels());
  detail::majority3_buffer(img1.data(), img2.data(), img3.data(),
                           result.data());
  return result;
}

inline Frame bitwise_and(const Frame& x, const Frame& y) {
  return detail::binary_image_op(
      x, y, [](std::uint64_t a, std::uint64_t b) { return a & b; },
      "bitwise_and");
}

inline Frame bitwise_xor(const Frame& x, const Frame& y) {
  return detail::binary_image_op(
      x, y, [](std::uint64_t a, std::uint64_t b) { return a ^ b; },
      "bitwise_xor");
}

inline Frame bitwise_or(const Frame& x, const Frame& y) {
  return detail::binary_image_op(
      x, y, [](std::uint64_t a, std::uint64_t b) { return a | b; },
      "bitwise_or");
}

// n-input Boolean mode parameters. n must be odd so no tie is possible;
// the winning threshold is (n+1)/2 ones, which is 2 for n = 3.
struct ModeSpec {
  int n;
  int threshold;

  explicit ModeSpec(int inputs) : n(inputs), threshold((inputs + 1) / 2) {
    if (inputs < 3 || inputs % 2 == 0) {
      throw ConfigError("mode arity must be an odd integer >= 3, got " +
                        std::to_string(inputs));
    }
  }
};

// Brute-force generalized mode over n bits: 1 iff the count of ones reaches
// the threshold. For n = 3 this agrees with majority3_bit on all 8 inputs;
// it exists as the slow reference the fast paths are checked against.
inline std::uint8_t mode_n_bits(std::span<const std::uint8_t> bits,
                                const ModeSpec& spec) {
  if (bits.size() != static_cast<std::size_t>(spec.n)) {
    throw ArityError("expected " + std::to_string(spec.n) + " bits, got " +
                     std::to_string(bits.size()));
  }
  int ones = 0;
  for (std::uint8_t bit : bits) {
    ones += (bit & 1);
  }
  return ones >= spec.threshold ? 1 : 0;
}

}  // namespace bgmode
