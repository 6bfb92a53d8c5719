#include "maxlpa/seeding.hpp"

#include <bit>

namespace maxlpa {

std::uint64_t mix_seed(std::uint64_t base, std::initializer_list<std::uint64_t> words) noexcept {
  std::uint64_t h = splitmix64(base);
  for (std::uint64_t w : words) h = splitmix64(h ^ w);
  return h;
}

std::uint64_t double_bits(double value) noexcept {
  if (value == 0.0) value = 0.0;
  return std::bit_cast<std::uint64_t>(value);
}

}  // namespace maxlpa
