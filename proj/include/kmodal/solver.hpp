#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "kmodal/core.hpp"

namespace kmodal {

enum class SolveMode : std::uint8_t { IncFirst, DecFirst, Any };

std::string_view to_string(SolveMode m) noexcept;
SolveMode parse_solve_mode(std::string_view s);

// How a one-element subsequence is allowed to start.
enum class DpStart : std::uint8_t {
  IncFirst, // first part must be increasing
  DecFirst, // first part must be decreasing
  Free,     // cost counts alternations only, either first direction
};

/// Layered dynamic program over (position, change budget, last direction).
///
/// length(i, c, d) is the longest subsequence ending at position i whose cost
/// is at most c and whose last step goes in direction d (a lone element sits
/// in every state it can legally extend from). Cost is the number of direction
/// changes, plus one when the start rule forces a first direction that the
/// first step disagrees with. Unreachable states hold 0; with a forced first
/// direction F that is exactly (c = 0, d != F).
///
/// Built in O(n k log n) with one interleaved prefix-max Fenwick tree per step
/// direction. Parent links prefer the smallest predecessor position.
class ModalDp {
public:
  struct State {
    std::size_t pos; // 1-based
    std::size_t changes;
    Direction dir;
    friend bool operator==(const State&, const State&) = default;
  };

  static ModalDp run(const Permutation& p, std::size_t k, DpStart start,
                     bool keep_parents = true);

  std::size_t size() const noexcept { return n_; }
  std::size_t budget() const noexcept { return k_; }
  DpStart start() const noexcept { return start_; }

  std::size_t length(std::size_t pos, std::size_t changes, Direction dir) const;
  std::size_t length(const State& s) const { return length(s.pos, s.changes, s.dir); }

  // max over last directions at the full budget
  std::size_t ending_label(std::size_t pos) const;

  std::optional<State> parent(const State& s) const;

  // Positions of the optimal chain ending in `s`, ascending.
  std::vector<std::size_t> chain(const State& s) const;

  // Best state at the full budget; ties prefer the smaller position.
  State best_state() const;

private:
  std::size_t slot(std::size_t pos, std::size_t changes, Direction dir) const noexcept {
    return ((pos - 1) * (k_ + 1) + changes) * 2 + (dir == Direction::Inc ? 0 : 1);
  }

  std::size_t n_ = 0;
  std::size_t k_ = 0;
  DpStart start_ = DpStart::Free;
  std::vector<std::uint32_t> length_;
  std::vector<std::uint32_t> parent_; // (pred_pos << 1) | switched, 0 = none
};

/// Maximum-length subsequence with at most k direction changes in the given
/// mode. Any returns the longer of the two first-direction optima, IncFirst on
/// ties. Throws EmptyPermutation.
Witness longest_kmodal(const Permutation& p, std::size_t k, SolveMode mode);

/// Same optimum via the O(n^2 k) recurrence. Length only.
std::size_t longest_kmodal_quadratic(const Permutation& p, std::size_t k, SolveMode mode);

/// label[i] = longest `first`-first k-modal subsequence ending at position i+1.
std::vector<std::size_t> kmodal_ending_lengths(const Permutation& p, std::size_t k,
                                               Direction first);

/// label[i] = longest k-modal subsequence ending at position i+1 whose final
/// part runs in direction `last` (a trailing one-element part counts).
std::vector<std::size_t> kmodal_last_part_lengths(const Permutation& p, std::size_t k,
                                                  Direction last);

struct JointAnchor {
  std::size_t position = 0; // 1-based
  std::size_t inc_len = 0;
  std::size_t dec_len = 0;

  std::size_t joint() const noexcept { return inc_len < dec_len ? inc_len : dec_len; }
  friend bool operator==(const JointAnchor&, const JointAnchor&) = default;
};

/// Position maximising min(inc-first, dec-first) k-modal ending lengths.
/// Ties go to the smallest position. Throws EmptyPermutation.
JointAnchor best_joint_anchor(const Permutation& p, std::size_t k);

inline constexpr std::size_t brute_longest_limit = 20;
inline constexpr std::size_t brute_joint_limit = 16;

/// Exhaustive oracle over all 2^n subsequences. Throws TooLarge for n > 20.
std::size_t brute_longest_kmodal(const Permutation& p, std::size_t k, SolveMode mode);

/// Exhaustive oracle for the joint anchor. Throws TooLarge for n > 16.
JointAnchor brute_best_joint(const Permutation& p, std::size_t k);

} // namespace kmodal
