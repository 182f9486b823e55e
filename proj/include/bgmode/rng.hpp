#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

#include "bgmode/errors.hpp"

namespace bgmode {

// splitmix64 finalizer: stable sub-stream seeds from one master seed.
// Stream k of master s is derive_seed(s, k); distinct streams never share
// engine state.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::uint64_t stream) noexcept {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Deterministic uniform index stream. std::mt19937_64 is fully specified by
// the standard, and the bound mapping here is a plain modulo, so a given seed
// yields the same index sequence on every platform. Exactly one engine draw
// is consumed per index. (std::uniform_int_distribution is
// implementation-defined and is deliberately not used.)
class IndexSampler {
 public:
  explicit IndexSampler(std::uint64_t seed) : engine_(seed) {}

  std::size_t next(std::size_t bound) {
    if (bound == 0) {
      throw EmptyInputError("cannot draw an index from an empty range");
    }
    ++draws_;
    return static_cast<std::size_t>(engine_() % bound);
  }

  // Number of indices drawn so far.
  std::uint64_t draws() const noexcept { return draws_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

// Fisher-Yates with the same pinned modulo mapping. std::shuffle draws an
// unspecified number of engine values in an unspecified way, which would
// break cross-platform reproducibility.
template <typename T>
inline void deterministic_shuffle(std::span<T> items, std::mt19937_64& engine) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(engine() % i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace bgmode
