#pragma once

#include <cstdint>
#include <initializer_list>

namespace hyperham {

/// (seed, stream-id) pair selecting one reproducible random stream.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  friend bool operator==(const RngSeed&, const RngSeed&) = default;
};

/// SplitMix64 finalizer (Stafford variant 13), a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

/// Order-sensitive hash of a short tuple of words, used to derive stream ids.
std::uint64_t hash_words(std::initializer_list<std::uint64_t> words) noexcept;

/// SplitMix64: state advances by the golden-ratio increment, output is
/// mix64(state). A stream starts from state = mix64(seed ^ mix64(stream + gamma)).
///
/// Satisfies UniformRandomBitGenerator so it can drive <random> distributions,
/// though the library itself only uses next() and uniform().
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(RngSeed seed) noexcept
      : state_(mix64(seed.seed ^ mix64(seed.stream + kGamma))) {}

  std::uint64_t next() noexcept {
    state_ += kGamma;
    return mix64(state_);
  }
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11U) * 0x1.0p-53; }

  result_type operator()() noexcept { return next(); }
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

 private:
  std::uint64_t state_;
};

}  // namespace hyperham
