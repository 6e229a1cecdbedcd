#include "hyperham/rng.hpp"

namespace hyperham {

std::uint64_t hash_words(std::initializer_list<std::uint64_t> words) noexcept {
  std::uint64_t h = 0x6A09E667F3BCC908ULL;
  for (const std::uint64_t w : words) h = mix64(h ^ mix64(w + SplitMix64::kGamma));
  return h;
}

}  // namespace hyperham
