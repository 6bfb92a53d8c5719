#pragma once

#include <cstdint>
#include <initializer_list>

namespace maxlpa {

/// SplitMix64 finalizer: a bijection on 64-bit words with full avalanche.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Folds words into a seed: h = splitmix64(base), then h = splitmix64(h ^ w)
/// for each word w in order.
std::uint64_t mix_seed(std::uint64_t base, std::initializer_list<std::uint64_t> words) noexcept;

inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t word) noexcept {
  return mix_seed(base, {word});
}

/// Bit pattern of a double, with -0.0 folded onto +0.0.
std::uint64_t double_bits(double value) noexcept;

}  // namespace maxlpa
