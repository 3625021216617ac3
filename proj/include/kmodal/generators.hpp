#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "kmodal/core.hpp"

namespace kmodal {

enum class Family : std::uint8_t { Strong, Perm };

std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view s);

struct GeneratorParams {
  std::size_t k = 1;
  std::size_t t = 1;
};

/// Concatenated decreasing blocks for the increasing-first extremal family.
///
/// Even k: t*k/2 blocks of length t. Odd k: t*(k-1)/2 blocks of length t,
/// then blocks of length t-1, t-2, ..., 1 (the length-0 block is skipped).
/// Each block sits entirely above the previous ones. Throws InvalidParams for
/// k == 0 or t == 0. strong_make(1, 1) is the empty permutation.
Permutation strong_make(std::size_t k, std::size_t t);

/// Decreasing blocks of lengths t, t+1, ..., 2t-1, then (k-1)*t blocks of
/// length 2t, then 2t-1, ..., t. Throws InvalidParams for k == 0 or t == 0.
Permutation perm_make(std::size_t k, std::size_t t);

Permutation generate(Family family, std::size_t k, std::size_t t);

/// Block lengths in generation order.
std::vector<std::size_t> block_lengths(Family family, std::size_t k, std::size_t t);

/// Closed-form length: k t^2 / 2 (even k), (k-1) t^2 / 2 + t (t-1) / 2 (odd k),
/// (2k+1) t^2 - t for the second family.
std::size_t predicted_size(Family family, std::size_t k, std::size_t t);

} // namespace kmodal
