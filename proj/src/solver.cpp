#include "kmodal/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "kmodal/detail/fenwick.hpp"

namespace kmodal {

namespace {

constexpr std::uint64_t pack(std::uint64_t len, std::size_t pos) noexcept {
  // Larger length wins; among equal lengths the smaller position wins.
  return len == 0 ? 0 : (len << 32) | (0xffffffffULL - pos);
}

constexpr std::uint32_t packed_len(std::uint64_t key) noexcept {
  return static_cast<std::uint32_t>(key >> 32);
}

constexpr std::size_t packed_pos(std::uint64_t key) noexcept {
  return static_cast<std::size_t>(0xffffffffULL - (key & 0xffffffffULL));
}

std::uint32_t singleton_length(DpStart start, std::size_t c, Direction d) noexcept {
  switch (start) {
  case DpStart::Free:
    return 1;
  case DpStart::IncFirst:
    return (d == Direction::Inc || c > 0) ? 1 : 0;
  case DpStart::DecFirst:
    return (d == Direction::Dec || c > 0) ? 1 : 0;
  }
  return 0;
}

DpStart start_for(Direction first) noexcept {
  return first == Direction::Inc ? DpStart::IncFirst : DpStart::DecFirst;
}

void require_nonempty(const Permutation& p) {
  if (p.empty())
    throw EmptyPermutation();
}

} // namespace

std::string_view to_string(SolveMode m) noexcept {
  switch (m) {
  case SolveMode::IncFirst:
    return "inc";
  case SolveMode::DecFirst:
    return "dec";
  case SolveMode::Any:
    break;
  }
  return "any";
}

SolveMode parse_solve_mode(std::string_view s) {
  if (s == "inc" || s == "IncFirst")
    return SolveMode::IncFirst;
  if (s == "dec" || s == "DecFirst")
    return SolveMode::DecFirst;
  if (s == "any" || s == "Any")
    return SolveMode::Any;
  throw InvalidParams("unknown mode '" + std::string(s) + "'");
}

ModalDp ModalDp::run(const Permutation& p, std::size_t k, DpStart start, bool keep_parents) {
  ModalDp dp;
  dp.n_ = p.size();
  dp.k_ = k;
  dp.start_ = start;
  const std::size_t n = p.size();
  const std::size_t layers = k + 1;
  dp.length_.assign(n * layers * 2, 0);
  if (keep_parents)
    dp.parent_.assign(n * layers * 2, 0);

  // up: keyed by value, layer c holds max(L[c][Inc], L[c-1][Dec]) so that an
  // upward step lands in (c, Inc). down: keyed by reversed value, symmetric.
  detail::LayeredMaxFenwick up(n, layers);
  detail::LayeredMaxFenwick down(n, layers);
  std::vector<std::uint64_t> q_up(layers), q_down(layers), ins_up(layers), ins_down(layers);

  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t v = p[i];
    up.prefix_max(v - 1, q_up);
    down.prefix_max(n - v, q_down);

    for (std::size_t c = 0; c < layers; ++c) {
      for (Direction d : {Direction::Inc, Direction::Dec}) {
        const std::uint64_t q = d == Direction::Inc ? q_up[c] : q_down[c];
        std::uint32_t len = singleton_length(start, c, d);
        std::uint32_t link = 0;
        if (q != 0 && packed_len(q) + 1 > len) {
          len = packed_len(q) + 1;
          if (keep_parents) {
            const std::size_t j = packed_pos(q);
            const bool same = dp.length_[dp.slot(j, c, d)] == packed_len(q);
            link = static_cast<std::uint32_t>((j << 1) | (same ? 0 : 1));
          }
        }
        dp.length_[dp.slot(i, c, d)] = len;
        if (keep_parents)
          dp.parent_[dp.slot(i, c, d)] = link;
      }
    }

    for (std::size_t c = 0; c < layers; ++c) {
      const std::uint32_t inc = dp.length_[dp.slot(i, c, Direction::Inc)];
      const std::uint32_t dec = dp.length_[dp.slot(i, c, Direction::Dec)];
      const std::uint32_t inc_prev = c > 0 ? dp.length_[dp.slot(i, c - 1, Direction::Inc)] : 0;
      const std::uint32_t dec_prev = c > 0 ? dp.length_[dp.slot(i, c - 1, Direction::Dec)] : 0;
      ins_up[c] = pack(std::max(inc, dec_prev), i);
      ins_down[c] = pack(std::max(dec, inc_prev), i);
    }
    up.raise(v, ins_up);
    down.raise(n + 1 - v, ins_down);
  }
  return dp;
}

std::size_t ModalDp::length(std::size_t pos, std::size_t changes, Direction dir) const {
  if (pos == 0 || pos > n_ || changes > k_)
    throw InvalidParams("DP state out of range");
  return length_[slot(pos, changes, dir)];
}

std::size_t ModalDp::ending_label(std::size_t pos) const {
  return std::max(length(pos, k_, Direction::Inc), length(pos, k_, Direction::Dec));
}

std::optional<ModalDp::State> ModalDp::parent(const State& s) const {
  if (parent_.empty())
    throw InvalidParams("DP was run without parent links");
  const std::uint32_t link = parent_[slot(s.pos, s.changes, s.dir)];
  if (link == 0)
    return std::nullopt;
  const std::size_t j = link >> 1;
  if ((link & 1) == 0)
    return State{j, s.changes, s.dir};
  return State{j, s.changes - 1, opposite(s.dir)};
}

std::vector<std::size_t> ModalDp::chain(const State& s) const {
  std::vector<std::size_t> out;
  std::optional<State> cur = s;
  while (cur) {
    out.push_back(cur->pos);
    cur = parent(*cur);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

ModalDp::State ModalDp::best_state() const {
  if (n_ == 0)
    throw EmptyPermutation();
  const Direction preferred = start_ == DpStart::DecFirst ? Direction::Dec : Direction::Inc;
  State best{1, k_, preferred};
  std::size_t best_len = 0;
  for (std::size_t i = 1; i <= n_; ++i) {
    for (Direction d : {preferred, opposite(preferred)}) {
      const std::size_t len = length_[slot(i, k_, d)];
      if (len > best_len) {
        best_len = len;
        best = State{i, k_, d};
      }
    }
  }
  return best;
}

Witness longest_kmodal(const Permutation& p, std::size_t k, SolveMode mode) {
  require_nonempty(p);
  auto solve_first = [&](DpStart start) {
    const ModalDp dp = ModalDp::run(p, k, start, true);
    return make_witness(p, dp.chain(dp.best_state()));
  };
  switch (mode) {
  case SolveMode::IncFirst:
    return solve_first(DpStart::IncFirst);
  case SolveMode::DecFirst:
    return solve_first(DpStart::DecFirst);
  case SolveMode::Any:
    break;
  }
  Witness inc = solve_first(DpStart::IncFirst);
  Witness dec = solve_first(DpStart::DecFirst);
  return dec.length() > inc.length() ? dec : inc;
}

std::size_t longest_kmodal_quadratic(const Permutation& p, std::size_t k, SolveMode mode) {
  require_nonempty(p);
  const std::size_t n = p.size();
  auto solve_first = [&](DpStart start) {
    // best[i][c][d], c = changes used, d = direction of the last step
    std::vector<std::array<std::size_t, 2>> best(n * (k + 1));
    auto at = [&](std::size_t i, std::size_t c) -> std::array<std::size_t, 2>& {
      return best[i * (k + 1) + c];
    };
    std::size_t answer = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c <= k; ++c) {
        for (int d = 0; d < 2; ++d) {
          const Direction dir = d == 0 ? Direction::Inc : Direction::Dec;
          std::size_t len = singleton_length(start, c, dir);
          for (std::size_t j = 0; j < i; ++j) {
            const bool step_up = p.values()[j] < p.values()[i];
            if (step_up != (dir == Direction::Inc))
              continue;
            std::size_t from = at(j, c)[d];
            if (c > 0)
              from = std::max(from, at(j, c - 1)[1 - d]);
            if (from > 0)
              len = std::max(len, from + 1);
          }
          at(i, c)[d] = len;
        }
      }
      answer = std::max({answer, at(i, k)[0], at(i, k)[1]});
    }
    return answer;
  };
  switch (mode) {
  case SolveMode::IncFirst:
    return solve_first(DpStart::IncFirst);
  case SolveMode::DecFirst:
    return solve_first(DpStart::DecFirst);
  case SolveMode::Any:
    break;
  }
  return std::max(solve_first(DpStart::IncFirst), solve_first(DpStart::DecFirst));
}

std::vector<std::size_t> kmodal_ending_lengths(const Permutation& p, std::size_t k,
                                               Direction first) {
  const ModalDp dp = ModalDp::run(p, k, start_for(first), false);
  std::vector<std::size_t> out(p.size());
  for (std::size_t i = 1; i <= p.size(); ++i)
    out[i - 1] = dp.ending_label(i);
  return out;
}

std::vector<std::size_t> kmodal_last_part_lengths(const Permutation& p, std::size_t k,
                                                  Direction last) {
  const ModalDp dp = ModalDp::run(p, k, DpStart::Free, false);
  std::vector<std::size_t> out(p.size());
  for (std::size_t i = 1; i <= p.size(); ++i) {
    std::size_t len = dp.length(i, k, last);
    if (k > 0)
      len = std::max(len, dp.length(i, k - 1, opposite(last)));
    out[i - 1] = len;
  }
  return out;
}

JointAnchor best_joint_anchor(const Permutation& p, std::size_t k) {
  require_nonempty(p);
  const auto inc = kmodal_ending_lengths(p, k, Direction::Inc);
  const auto dec = kmodal_ending_lengths(p, k, Direction::Dec);
  JointAnchor best;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const JointAnchor cand{i + 1, inc[i], dec[i]};
    if (best.position == 0 || cand.joint() > best.joint())
      best = cand;
  }
  return best;
}

namespace {

// Fills `values` with the subsequence selected by `mask`.
void gather(const Permutation& p, std::uint32_t mask, std::vector<Value>& values) {
  values.clear();
  for (std::size_t i = 0; i < p.size(); ++i)
    if (mask & (std::uint32_t{1} << i))
      values.push_back(p.values()[i]);
}

bool fits(const ModalityProfile& prof, std::size_t k, SolveMode mode) {
  switch (mode) {
  case SolveMode::IncFirst:
    return prof.min_changes_inc_first <= k;
  case SolveMode::DecFirst:
    return prof.min_changes_dec_first <= k;
  case SolveMode::Any:
    break;
  }
  return prof.min_changes <= k;
}

} // namespace

std::size_t brute_longest_kmodal(const Permutation& p, std::size_t k, SolveMode mode) {
  require_nonempty(p);
  if (p.size() > brute_longest_limit)
    throw TooLarge("brute_longest_kmodal supports n <= " + std::to_string(brute_longest_limit));
  const std::uint32_t full = (std::uint32_t{1} << p.size()) - 1;
  std::vector<Value> values;
  values.reserve(p.size());
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const auto len = static_cast<std::size_t>(std::popcount(mask));
    if (len <= best)
      continue;
    gather(p, mask, values);
    if (fits(modality(values), k, mode))
      best = len;
  }
  return best;
}

JointAnchor brute_best_joint(const Permutation& p, std::size_t k) {
  require_nonempty(p);
  if (p.size() > brute_joint_limit)
    throw TooLarge("brute_best_joint supports n <= " + std::to_string(brute_joint_limit));
  const std::size_t n = p.size();
  std::vector<std::size_t> inc(n, 0), dec(n, 0);
  std::vector<Value> values;
  values.reserve(n);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::size_t last = 31 - static_cast<std::size_t>(std::countl_zero(mask));
    gather(p, mask, values);
    const ModalityProfile prof = modality(values);
    if (prof.min_changes_inc_first <= k)
      inc[last] = std::max(inc[last], values.size());
    if (prof.min_changes_dec_first <= k)
      dec[last] = std::max(dec[last], values.size());
  }
  JointAnchor best;
  for (std::size_t i = 0; i < n; ++i) {
    const JointAnchor cand{i + 1, inc[i], dec[i]};
    if (best.position == 0 || cand.joint() > best.joint())
      best = cand;
  }
  return best;
}

} // namespace kmodal
