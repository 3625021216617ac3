#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kmodal/core.hpp"
#include "kmodal/generators.hpp"
#include "kmodal/solver.hpp"

namespace kmodal {

// T1: increasing-first length against sqrt(2kn).
// T2: best joint anchor against sqrt(2kn).
// T3: either-first length against sqrt((2k+1)n).
enum class Theorem : std::uint8_t { T1, T2, T3 };

std::string_view to_string(Theorem t) noexcept;
Theorem parse_theorem(std::string_view s);

// Column value for the CSV `mode` field: inc, joint or any.
std::string_view mode_label(Theorem t) noexcept;

inline constexpr std::size_t default_slack = 1;

double theorem_target(Theorem theorem, std::size_t n, std::size_t k);

/// ceil(target) - slack, clamped at 0. The ceiling is taken after
/// subtracting 1e-9 so that exact squares are not pushed up by rounding.
std::size_t required_length(double target, std::size_t slack);

struct BoundReport {
  Theorem theorem = Theorem::T1;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t achieved = 0;
  double target = 0.0;
  std::size_t slack = default_slack;
  bool pass = false;
  std::variant<Witness, JointAnchor> witness;
};

/// Throws InvalidParams for k == 0, EmptyPermutation for empty input.
BoundReport check_theorem(const Permutation& p, std::size_t k, Theorem theorem,
                          std::size_t slack = default_slack);

inline constexpr std::size_t min_over_all_limit = 9;

struct PermutationMinimum {
  std::size_t minimum = 0;
  Permutation argmin; // lexicographically first minimiser
};

/// Exact minimum of the achieved length over all n! permutations.
/// Throws TooLarge for n > 9.
PermutationMinimum min_over_all_perms(std::size_t n, std::size_t k, Theorem theorem,
                                      std::size_t threads = 0);

/// All three theorems in one enumeration, indexed by Theorem.
std::array<PermutationMinimum, 3> min_over_all_perms_all(std::size_t n, std::size_t k,
                                                         std::size_t threads = 0);

struct TightnessRecord {
  Family family = Family::Strong;
  std::size_t k = 0;
  std::size_t t = 0;
  std::size_t n = 0;
  SolveMode mode = SolveMode::IncFirst;
  std::size_t achieved = 0;
  std::size_t cap = 0;   // k t (first family, increasing-first), (2k+1) t (second, any)
  double ratio = 0.0;    // achieved / sqrt(c n) with c = 2k or 2k+1
  bool pass = false;     // achieved <= cap
};

TightnessRecord tightness_report(Family family, std::size_t k, std::size_t t);

struct SweepConfig {
  // Random cells are k x n with `samples` seeded permutations each and one row
  // per theorem. Family cells are k x t, one row each, checked against the cap.
  std::optional<Family> family;
  std::vector<std::size_t> ks;
  std::vector<std::size_t> ns;
  std::vector<std::size_t> ts;
  std::size_t samples = 1;
  std::uint64_t seed = 0;
  std::size_t slack = default_slack;
  std::vector<Theorem> theorems{Theorem::T1, Theorem::T2, Theorem::T3};
};

struct SweepRow {
  Theorem theorem = Theorem::T1;
  std::string family; // "random", "strong" or "perm"
  std::optional<std::uint64_t> seed;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> t;
  std::string mode;
  std::size_t achieved = 0;
  double target = 0.0; // bound for random rows, cap for family rows
  std::size_t slack = 0;
  bool pass = false;
};

inline constexpr std::string_view sweep_csv_header =
    "theorem,family,seed,n,k,t,mode,achieved_N,target,slack,pass";

/// Rows ordered by (cell, sample, theorem) whatever the worker count.
/// Throws ConfigError on empty ranges, zero samples, or k/n/t == 0.
std::vector<SweepRow> sweep(const SweepConfig& cfg, std::size_t threads = 0);

/// Fixed six-decimal target, empty fields for absent seed / t.
std::string format_target(double target);
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
std::string sweep_csv(const std::vector<SweepRow>& rows);

} // namespace kmodal
