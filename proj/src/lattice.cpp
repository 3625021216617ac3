#include "kmodal/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kmodal {

namespace {

class Grid {
public:
  explicit Grid(std::size_t side) : side_(side), cells_((side + 1) * (side + 1), 0) {}

  std::uint8_t& at(std::size_t x, std::size_t y) { return cells_[x * (side_ + 1) + y]; }
  std::uint8_t at(std::size_t x, std::size_t y) const { return cells_[x * (side_ + 1) + y]; }

private:
  std::size_t side_;
  std::vector<std::uint8_t> cells_;
};

// Incremental |A| / |B| tables for the subset search.
class ConditionCounter {
public:
  explicit ConditionCounter(std::size_t side)
      : n_(side), a_((side + 1) * (side + 1), 0), b_((side + 1) * (side + 1), 0) {}

  // Adds (x, y). Returns true if the condition now holds somewhere; only cells
  // in column x above y and row y right of x can have changed.
  bool add(std::size_t x, std::size_t y) {
    for (std::size_t b = y; b <= n_; ++b)
      ++a_[idx(x, b)];
    for (std::size_t a = x; a <= n_; ++a)
      ++b_[idx(a, y)];
    for (std::size_t b = y; b <= n_; ++b)
      if (holds(x, b))
        return true;
    for (std::size_t a = x; a <= n_; ++a)
      if (holds(a, y))
        return true;
    return false;
  }

  void remove(std::size_t x, std::size_t y) {
    for (std::size_t b = y; b <= n_; ++b)
      --a_[idx(x, b)];
    for (std::size_t a = x; a <= n_; ++a)
      --b_[idx(a, y)];
  }

private:
  std::size_t idx(std::size_t a, std::size_t b) const { return a * (n_ + 1) + b; }
  bool holds(std::size_t a, std::size_t b) const {
    return a_[idx(a, b)] > n_ + 1 - a && b_[idx(a, b)] > n_ + 1 - b;
  }

  std::size_t n_;
  std::vector<std::size_t> a_;
  std::vector<std::size_t> b_;
};

} // namespace

LatticePointSet::LatticePointSet(std::size_t side, std::vector<LatticePoint> points)
    : side_(side), points_(std::move(points)) {
  if (side_ == 0)
    throw InvalidParams("lattice side must be positive");
  std::sort(points_.begin(), points_.end());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const LatticePoint& p = points_[i];
    if (p.x < 1 || p.x > side_ || p.y < 1 || p.y > side_)
      throw InvalidParams("point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                          ") outside [" + std::to_string(side_) + "]^2");
    if (i > 0 && points_[i - 1] == p)
      throw InvalidParams("duplicate point (" + std::to_string(p.x) + "," +
                          std::to_string(p.y) + ")");
  }
}

bool LatticePointSet::contains(LatticePoint p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

LatticePointSet read_lattice_points(const std::string& path, std::size_t side) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open '" + path + "' for reading");
  std::vector<LatticePoint> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::istringstream ls(line);
    long long x = 0, y = 0;
    std::string rest;
    if (!(ls >> x >> y) || (ls >> rest) || x < 1 || y < 1)
      throw InvalidParams(path + ":" + std::to_string(lineno) + ": expected \"x y\"");
    pts.push_back({static_cast<std::size_t>(x), static_cast<std::size_t>(y)});
  }
  return LatticePointSet(side, std::move(pts));
}

LatticePointSet label_points(const LabelSet& ls, std::size_t side) {
  std::vector<LatticePoint> pts;
  for (const LabelPair& lp : ls.pairs)
    if (lp.x >= 1 && lp.x <= side && lp.y >= 1 && lp.y <= side)
      pts.push_back({lp.x, lp.y});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return LatticePointSet(side, std::move(pts));
}

ConditionScan condition_scan(const LatticePointSet& s) {
  const std::size_t n = s.side();
  Grid occ(n);
  for (const LatticePoint& p : s.points())
    occ.at(p.x, p.y) = 1;

  // col[a][b] = |A(a,b)|, row[a][b] = |B(a,b)|
  std::vector<std::size_t> col((n + 1) * (n + 1), 0), row((n + 1) * (n + 1), 0);
  auto idx = [n](std::size_t a, std::size_t b) { return a * (n + 1) + b; };
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= n; ++b) {
      col[idx(a, b)] = col[idx(a, b - 1)] + occ.at(a, b);
      row[idx(a, b)] = row[idx(a - 1, b)] + occ.at(a, b);
    }

  ConditionScan scan;
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= n; ++b) {
      const std::size_t ac = col[idx(a, b)];
      const std::size_t bc = row[idx(a, b)];
      if (ac > n + 1 - a && bc > n + 1 - b) {
        scan.triggered_at = LatticePoint{a, b};
        scan.a_count = ac;
        scan.b_count = bc;
        return scan;
      }
      scan.a_count = std::max(scan.a_count, ac);
      scan.b_count = std::max(scan.b_count, bc);
    }
  return scan;
}

LatticePointSet triangle_points(std::size_t side) {
  if (side == 0)
    throw InvalidParams("lattice side must be positive");
  std::vector<LatticePoint> pts;
  pts.reserve(side * (side + 1) / 2);
  for (std::size_t x = 1; x <= side; ++x)
    for (std::size_t y = 1; x + y <= side + 1; ++y)
      pts.push_back({x, y});
  return LatticePointSet(side, std::move(pts));
}

ConditionFreeMax max_condition_free(std::size_t side) {
  if (side == 0)
    throw InvalidParams("lattice side must be positive");
  if (side > max_condition_free_limit)
    throw TooLarge("max_condition_free supports N <= " +
                   std::to_string(max_condition_free_limit));

  std::vector<LatticePoint> cells;
  for (std::size_t x = 1; x <= side; ++x)
    for (std::size_t y = 1; y <= side; ++y)
      cells.push_back({x, y});

  ConditionCounter counter(side);
  std::vector<LatticePoint> current, best;

  auto dfs = [&](auto&& self, std::size_t next) -> void {
    if (current.size() > best.size())
      best = current;
    if (current.size() + (cells.size() - next) <= best.size())
      return;
    for (std::size_t i = next; i < cells.size(); ++i) {
      if (current.size() + (cells.size() - i) <= best.size())
        return;
      const LatticePoint c = cells[i];
      const bool triggered = counter.add(c.x, c.y);
      if (!triggered) {
        current.push_back(c);
        self(self, i + 1);
        current.pop_back();
      }
      counter.remove(c.x, c.y);
    }
  };
  dfs(dfs, 0);

  const std::size_t size = best.size();
  return {size, LatticePointSet(side, std::move(best))};
}

ShiftTrace shift_into_triangle(const LatticePointSet& s) {
  const ConditionScan scan = condition_scan(s);
  if (scan.triggered_at)
    throw PreconditionViolated("point set triggers the condition at (" +
                               std::to_string(scan.triggered_at->x) + "," +
                               std::to_string(scan.triggered_at->y) + ")");
  const std::size_t n = s.side();

  ShiftTrace trace;
  for (const LatticePoint& p : s.points()) {
    std::size_t a_count = 0;
    for (const LatticePoint& q : s.points())
      if (q.x == p.x && q.y <= p.y)
        ++a_count;
    if (a_count > n + 1 - p.x)
      trace.qualifying.push_back(p);
  }

  std::vector<LatticePoint> order = s.points();
  std::sort(order.begin(), order.end(), [](LatticePoint a, LatticePoint b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });

  auto dominated = [&](LatticePoint p) {
    return std::any_of(trace.qualifying.begin(), trace.qualifying.end(),
                       [&](LatticePoint c) { return p.x <= c.x && p.y >= c.y; });
  };

  Grid occupied(n);
  std::vector<LatticePoint> placed;
  placed.reserve(s.size());

  for (const LatticePoint& p : order) {
    if (!dominated(p))
      continue;
    const std::size_t limit = std::min(p.x, n + 1 - p.y);
    std::optional<std::size_t> target;
    for (std::size_t x = 1; x <= limit; ++x)
      if (!occupied.at(x, p.y)) {
        target = x;
        break;
      }
    if (!target) {
      trace.failure = ShiftFailure{p, 1, "no free cell of row " + std::to_string(p.y) +
                                             " inside T at or left of x=" + std::to_string(p.x)};
      break;
    }
    occupied.at(*target, p.y) = 1;
    trace.step1_moves.push_back({p, {*target, p.y}});
    placed.push_back({*target, p.y});
  }

  if (!trace.failure) {
    for (const LatticePoint& p : order) {
      if (dominated(p))
        continue;
      const std::size_t limit = std::min(p.y, n + 1 - p.x);
      std::optional<std::size_t> target;
      for (std::size_t y = 1; y <= limit; ++y)
        if (!occupied.at(p.x, y)) {
          target = y;
          break;
        }
      if (!target) {
        trace.failure = ShiftFailure{p, 2, "no free cell of column " + std::to_string(p.x) +
                                               " inside T at or below y=" +
                                               std::to_string(p.y)};
        break;
      }
      occupied.at(p.x, *target) = 1;
      trace.step2_moves.push_back({p, {p.x, *target}});
      placed.push_back({p.x, *target});
    }
  }

  trace.result = LatticePointSet(n, std::move(placed));
  return trace;
}

} // namespace kmodal
