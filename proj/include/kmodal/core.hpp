#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kmodal/error.hpp"

namespace kmodal {

using Value = std::uint32_t;

enum class Direction : std::uint8_t { Inc, Dec };

constexpr Direction opposite(Direction d) noexcept {
  return d == Direction::Inc ? Direction::Dec : Direction::Inc;
}

enum class FirstDirection : std::uint8_t { Inc, Dec, Both };

std::string_view to_string(Direction d) noexcept;
std::string_view to_string(FirstDirection d) noexcept;

/// A bijection on {1..n} stored as its one-line notation.
///
/// Positions are 1-based in every public accessor. An empty permutation is
/// representable (some generator parameters produce one) but solvers reject it.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  // 1-based.
  Value at(std::size_t pos) const;
  Value operator[](std::size_t pos) const noexcept { return values_[pos - 1]; }

  std::span<const Value> values() const noexcept { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  friend Permutation make_permutation(std::vector<Value>, bool);
  explicit Permutation(std::vector<Value> values) : values_(std::move(values)) {}

  std::vector<Value> values_;
};

/// Validates and wraps `values`. Throws NotAPermutation on duplicates,
/// out-of-range entries, or empty input when `allow_empty` is false.
Permutation make_permutation(std::vector<Value> values, bool allow_empty = false);

/// a_i -> n + 1 - a_i.
Permutation flip(const Permutation& p);

/// Position reversal: a_i -> a_{n+1-i}.
Permutation reverse(const Permutation& p);

/// Relabels the subsequence at `positions` (1-based, strictly increasing) to a
/// permutation of {1..m} with the same pairwise comparisons.
Permutation restrict(const Permutation& p, std::span<const std::size_t> positions);

/// Ranks an arbitrary distinct-valued sequence into a permutation.
Permutation rank_values(std::span<const Value> values);

struct ModalityProfile {
  std::size_t min_changes = 0;
  std::size_t min_changes_inc_first = 0;
  std::size_t min_changes_dec_first = 0;
  FirstDirection first_direction = FirstDirection::Both;

  std::size_t min_changes_first(Direction first) const noexcept {
    return first == Direction::Inc ? min_changes_inc_first : min_changes_dec_first;
  }

  friend bool operator==(const ModalityProfile&, const ModalityProfile&) = default;
};

/// Fewest direction changes over all segmentations into monotone parts.
///
/// A direction change happens wherever consecutive differences switch sign.
/// Forcing a first direction that disagrees with the first difference costs
/// one extra change (a length-one leading part). Throws DuplicateValues.
ModalityProfile modality(std::span<const Value> values);

/// Concrete subsequence of a permutation together with its verified profile.
struct Witness {
  std::vector<std::size_t> indices; // 1-based, strictly increasing
  std::vector<Value> values;
  ModalityProfile profile;

  std::size_t length() const noexcept { return indices.size(); }
};

/// Builds a witness from positions, recomputing the profile from scratch.
Witness make_witness(const Permutation& p, std::vector<std::size_t> indices);

/// True iff `w` is a well-formed subsequence of `p` and its stored profile
/// matches a fresh computation.
bool witness_is_consistent(const Permutation& p, const Witness& w);

/// Parses one line of whitespace- or comma-separated integers.
Permutation parse_permutation(std::string_view text, bool allow_empty = false);

/// Single line, space separated.
std::string format_permutation(const Permutation& p);

Permutation read_permutation_file(const std::string& path);
void write_permutation_file(const std::string& path, const Permutation& p);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

} // namespace kmodal
