#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "kmodal/core.hpp"

namespace kmodal {

enum class Anchor : std::uint8_t { EndingAt, StartingAt };

// One coordinate of a labeling: the longest `direction_first`-first
// subsequence with at most `modal_budget` direction changes that ends (or
// starts) at the labelled element. Budget 0 is a plain monotone label.
struct LabelSpec {
  Direction direction_first = Direction::Inc;
  std::size_t modal_budget = 0;
  Anchor anchor = Anchor::EndingAt;

  friend bool operator==(const LabelSpec&, const LabelSpec&) = default;
};

struct LabelScheme {
  LabelSpec x;
  LabelSpec y;

  // x: increasing ending at; y: decreasing-first `k`-modal starting at.
  static LabelScheme theorem1(std::size_t k);
  // x, y: increasing-first / decreasing-first `k`-modal ending at.
  static LabelScheme theorem2(std::size_t k);
  static LabelScheme theorem3(std::size_t k);

  friend bool operator==(const LabelScheme&, const LabelScheme&) = default;
};

struct LabelPair {
  std::size_t x = 0;
  std::size_t y = 0;
  friend auto operator<=>(const LabelPair&, const LabelPair&) = default;
};

struct LabelSet {
  LabelScheme scheme;
  std::vector<LabelPair> pairs; // pairs[i] labels position i + 1
};

/// Longest monotone subsequence in direction `dir` anchored at each position,
/// via a prefix-max Fenwick tree over values.
std::vector<std::size_t> directional_labels(const Permutation& p, Direction dir, Anchor anchor);

/// Longest `first`-first k-modal subsequence ending at each position.
std::vector<std::size_t> kmodal_ending_labels(const Permutation& p, std::size_t k,
                                              Direction first);

/// Longest `first`-first k-modal subsequence starting at each position.
std::vector<std::size_t> kmodal_starting_labels(const Permutation& p, std::size_t k,
                                                Direction first);

std::vector<std::size_t> labels_for(const Permutation& p, const LabelSpec& spec);

LabelSet label_pairs(const Permutation& p, const LabelScheme& scheme);

struct Collision {
  std::size_t first = 0;  // 1-based, first < second
  std::size_t second = 0;
  friend bool operator==(const Collision&, const Collision&) = default;
};

/// nullopt when all pairs are distinct, otherwise the lexicographically
/// smallest colliding position pair.
std::optional<Collision> injectivity_check(const LabelSet& ls);

} // namespace kmodal
