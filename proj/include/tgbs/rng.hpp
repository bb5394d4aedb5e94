#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace tgbs {

using Rng = std::mt19937_64;

/// Mixes a master seed with stream keys (instance, strategy, restart, ...)
/// into an independent 64-bit seed. Stable for a given key sequence.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> keys);

Rng make_rng(std::initializer_list<std::uint64_t> keys);

}  // namespace tgbs
