#include "tgbs/rng.hpp"

#include <array>
#include <vector>

namespace tgbs {

std::uint64_t derive_seed(std::initializer_list<std::uint64_t> keys) {
  std::vector<std::uint32_t> words;
  words.reserve(2 * keys.size());
  for (std::uint64_t k : keys) {
    words.push_back(static_cast<std::uint32_t>(k));
    words.push_back(static_cast<std::uint32_t>(k >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

Rng make_rng(std::initializer_list<std::uint64_t> keys) { return Rng(derive_seed(keys)); }

}  // namespace tgbs
