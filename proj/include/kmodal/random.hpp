#pragma once

#include <cstddef>
#include <cstdint>

#include "kmodal/core.hpp"

namespace kmodal {

// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Counter-based seed: a pure function of its arguments, so parallel and
/// serial sweeps draw identical samples.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t cell, std::uint64_t sample) noexcept;

/// Uniform permutation of {1..n} by Fisher-Yates over a seeded mt19937_64,
/// with rejection sampling for the bounded draws (bit-exact across platforms).
Permutation random_permutation(std::size_t n, std::uint64_t seed);

} // namespace kmodal
