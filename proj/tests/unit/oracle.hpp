#pragma once

// Test-only brute-force oracles. Nothing here calls into the solver or the
// modality classifier: costs come from enumerating segmentations directly.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "kmodal/core.hpp"

namespace oracle {

using kmodal::Value;

struct Costs {
  std::size_t any = 0;
  std::size_t inc_first = 0;
  std::size_t dec_first = 0;
};

inline bool monotone(std::span<const Value> s, bool up) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if ((s[i] < s[i + 1]) != up)
      return false;
  return true;
}

// Fewest breakpoints over every segmentation into monotone parts that share
// their boundary elements. Exponential in |s|; keep |s| small.
inline Costs segmentation_costs(std::span<const Value> s) {
  const std::size_t m = s.size();
  if (m <= 1)
    return {};
  const std::size_t inf = 1000;
  Costs best{inf, inf, inf};
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<std::size_t> cut{0};
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::uint32_t{1} << i))
        cut.push_back(i);
    cut.push_back(m - 1);
    bool ok = true;
    for (std::size_t j = 0; j + 1 < cut.size() && ok; ++j) {
      if (cut[j + 1] < cut[j]) {
        ok = false;
        break;
      }
      auto part = s.subspan(cut[j], cut[j + 1] - cut[j] + 1);
      ok = monotone(part, true) || monotone(part, false);
    }
    if (!ok)
      continue;
    const std::size_t p = static_cast<std::size_t>(std::popcount(mask));
    auto first = s.subspan(0, cut[1] + 1);
    best.any = std::min(best.any, p);
    if (monotone(first, true))
      best.inc_first = std::min(best.inc_first, p);
    if (monotone(first, false))
      best.dec_first = std::min(best.dec_first, p);
  }
  return best;
}

inline std::size_t cost_for(const Costs& c, int mode) { // 0 inc, 1 dec, 2 any
  return mode == 0 ? c.inc_first : mode == 1 ? c.dec_first : c.any;
}

struct Subsequence {
  std::vector<std::size_t> positions; // 0-based
  std::vector<Value> values;
  Costs costs;
};

// Every nonempty subsequence with its costs.
inline std::vector<Subsequence> all_subsequences(const kmodal::Permutation& p) {
  std::vector<Subsequence> out;
  const std::size_t n = p.size();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    Subsequence s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint32_t{1} << i)) {
        s.positions.push_back(i);
        s.values.push_back(p.values()[i]);
      }
    s.costs = segmentation_costs(s.values);
    out.push_back(std::move(s));
  }
  return out;
}

inline std::size_t longest(const std::vector<Subsequence>& subs, std::size_t k, int mode) {
  std::size_t best = 0;
  for (const auto& s : subs)
    if (cost_for(s.costs, mode) <= k)
      best = std::max(best, s.values.size());
  return best;
}

// Longest mode-first k-modal subsequence ending (or starting) at each position.
inline std::vector<std::size_t> anchored(const std::vector<Subsequence>& subs, std::size_t n,
                                         std::size_t k, int mode, bool ending) {
  std::vector<std::size_t> out(n, 0);
  for (const auto& s : subs) {
    if (cost_for(s.costs, mode) > k)
      continue;
    const std::size_t anchor = ending ? s.positions.back() : s.positions.front();
    out[anchor] = std::max(out[anchor], s.values.size());
  }
  return out;
}

inline std::vector<Value> random_values(std::mt19937_64& rng, std::size_t n) {
  std::vector<Value> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = static_cast<Value>(i + 1);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

// Calls f on every permutation of {1..n} in lexicographic order.
template <typename F>
void for_each_permutation(std::size_t n, F&& f) {
  std::vector<Value> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = static_cast<Value>(i + 1);
  do
    f(kmodal::make_permutation(v));
  while (std::next_permutation(v.begin(), v.end()));
}

} // namespace oracle
