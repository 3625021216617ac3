#include "kmodal/labeling.hpp"

#include <algorithm>
#include <numeric>

#include "kmodal/detail/fenwick.hpp"
#include "kmodal/solver.hpp"

namespace kmodal {

namespace {

// Longest increasing subsequence ending at each position.
std::vector<std::size_t> inc_ending(std::span<const Value> values) {
  detail::MaxFenwick<std::size_t> tree(values.size());
  std::vector<std::size_t> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = tree.prefix_max(values[i] - 1) + 1;
    tree.raise(values[i], out[i]);
  }
  return out;
}

std::vector<Value> complemented(std::span<const Value> values) {
  const auto n = static_cast<Value>(values.size());
  std::vector<Value> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(), [n](Value v) { return n + 1 - v; });
  return out;
}

} // namespace

LabelScheme LabelScheme::theorem1(std::size_t k) {
  return {{Direction::Inc, 0, Anchor::EndingAt}, {Direction::Dec, k, Anchor::StartingAt}};
}

LabelScheme LabelScheme::theorem2(std::size_t k) {
  return {{Direction::Inc, k, Anchor::EndingAt}, {Direction::Dec, k, Anchor::EndingAt}};
}

LabelScheme LabelScheme::theorem3(std::size_t k) {
  return theorem2(k);
}

std::vector<std::size_t> directional_labels(const Permutation& p, Direction dir, Anchor anchor) {
  if (anchor == Anchor::EndingAt) {
    if (dir == Direction::Inc)
      return inc_ending(p.values());
    return inc_ending(complemented(p.values()));
  }
  // Starting at i in direction d is ending at n+1-i, direction flipped, in the
  // position-reversed sequence.
  const Permutation r = reverse(p);
  auto rev = directional_labels(r, opposite(dir), Anchor::EndingAt);
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::vector<std::size_t> kmodal_ending_labels(const Permutation& p, std::size_t k,
                                              Direction first) {
  return kmodal_ending_lengths(p, k, first);
}

std::vector<std::size_t> kmodal_starting_labels(const Permutation& p, std::size_t k,
                                                Direction first) {
  // Reversing positions and complementing values maps a subsequence starting
  // at i with first part d onto one ending at n+1-i with last part d.
  const Permutation r = flip(reverse(p));
  auto rev = kmodal_last_part_lengths(r, k, first);
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::vector<std::size_t> labels_for(const Permutation& p, const LabelSpec& spec) {
  if (spec.modal_budget == 0)
    return directional_labels(p, spec.direction_first, spec.anchor);
  if (spec.anchor == Anchor::EndingAt)
    return kmodal_ending_labels(p, spec.modal_budget, spec.direction_first);
  return kmodal_starting_labels(p, spec.modal_budget, spec.direction_first);
}

LabelSet label_pairs(const Permutation& p, const LabelScheme& scheme) {
  const auto xs = labels_for(p, scheme.x);
  const auto ys = labels_for(p, scheme.y);
  LabelSet out{scheme, {}};
  out.pairs.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    out.pairs.push_back({xs[i], ys[i]});
  return out;
}

std::optional<Collision> injectivity_check(const LabelSet& ls) {
  std::vector<std::size_t> order(ls.pairs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ls.pairs[a] < ls.pairs[b]; });
  std::optional<Collision> best;
  for (std::size_t r = 1; r < order.size(); ++r) {
    // stable sort keeps each group's positions ascending; its first two form
    // the group's smallest pair
    if (ls.pairs[order[r]] != ls.pairs[order[r - 1]])
      continue;
    if (r >= 2 && ls.pairs[order[r - 2]] == ls.pairs[order[r]])
      continue;
    const Collision c{order[r - 1] + 1, order[r] + 1};
    if (!best || c.first < best->first || (c.first == best->first && c.second < best->second))
      best = c;
  }
  return best;
}

} // namespace kmodal
