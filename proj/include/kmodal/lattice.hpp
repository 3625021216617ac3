#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kmodal/error.hpp"
#include "kmodal/labeling.hpp"

namespace kmodal {

struct LatticePoint {
  std::size_t x = 0;
  std::size_t y = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Distinct points of the grid [N]^2, kept sorted by (x, y).
class LatticePointSet {
public:
  LatticePointSet() = default;
  LatticePointSet(std::size_t side, std::vector<LatticePoint> points);

  std::size_t side() const noexcept { return side_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<LatticePoint>& points() const noexcept { return points_; }
  bool contains(LatticePoint p) const;

  friend bool operator==(const LatticePointSet&, const LatticePointSet&) = default;

private:
  std::size_t side_ = 0;
  std::vector<LatticePoint> points_;
};

/// Reads lines of "x y" (blank lines and '#' comments skipped).
LatticePointSet read_lattice_points(const std::string& path, std::size_t side);

/// The label pairs of `ls` that fall inside [side]^2.
LatticePointSet label_points(const LabelSet& ls, std::size_t side);

// |A(a,b)| = #{points with x = a, y <= b};  |B(a,b)| = #{points with y = b, x <= a}.
// The condition holds at (a,b) when |A| > N+1-a and |B| > N+1-b.
struct ConditionScan {
  std::optional<LatticePoint> triggered_at;
  // |A| and |B| at the trigger; when nothing triggers, the largest |A| and |B|
  // seen anywhere on the grid.
  std::size_t a_count = 0;
  std::size_t b_count = 0;
};

/// Lexicographically smallest (a, b) in [N]^2 satisfying the condition.
ConditionScan condition_scan(const LatticePointSet& s);

/// {(x, y) in [N]^2 : x + y <= N + 1}.
LatticePointSet triangle_points(std::size_t side);

inline constexpr std::size_t max_condition_free_limit = 5;

struct ConditionFreeMax {
  std::size_t size = 0;
  LatticePointSet witness;
};

/// Largest subset of [N]^2 that never triggers the condition. Depth-first
/// include/exclude search; a triggered partial set prunes its whole subtree
/// because |A| and |B| only grow. Throws TooLarge for N > 5.
ConditionFreeMax max_condition_free(std::size_t side);

struct ShiftMove {
  LatticePoint from;
  LatticePoint to;
};

struct ShiftFailure {
  LatticePoint point;
  int step = 0; // 1 or 2
  std::string reason;
};

struct ShiftTrace {
  std::vector<LatticePoint> qualifying; // the set C
  std::vector<ShiftMove> step1_moves;
  std::vector<ShiftMove> step2_moves;
  LatticePointSet result;
  std::optional<ShiftFailure> failure;

  bool success() const noexcept { return !failure.has_value(); }
};

/// Two-step relocation into the triangle.
///
/// C holds the points (a,b) with |A(a,b)| > N+1-a. Step 1 moves every point
/// (x,y) with some (a,b) in C, x <= a, y >= b, to the leftmost free cell of
/// row y inside T, never to the right of x. Step 2 moves every other point to
/// the lowest free cell of column x inside T, never above y. Both steps visit
/// points in row-major order (y, then x). A point with no admissible cell
/// stops the procedure and is reported in `failure`.
///
/// Throws PreconditionViolated if `s` triggers the condition.
ShiftTrace shift_into_triangle(const LatticePointSet& s);

} // namespace kmodal
