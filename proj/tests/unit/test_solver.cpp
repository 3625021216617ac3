#include "doctest.h"

#include <random>

#include "kmodal/generators.hpp"
#include "kmodal/solver.hpp"
#include "oracle.hpp"

using namespace kmodal;

namespace {

Permutation perm(std::vector<Value> v) {
  return make_permutation(std::move(v));
}

constexpr SolveMode modes[] = {SolveMode::IncFirst, SolveMode::DecFirst, SolveMode::Any};

bool witness_fits(const Witness& w, std::size_t k, SolveMode mode) {
  switch (mode) {
  case SolveMode::IncFirst:
    return w.profile.min_changes_inc_first <= k;
  case SolveMode::DecFirst:
    return w.profile.min_changes_dec_first <= k;
  case SolveMode::Any:
    break;
  }
  return w.profile.min_changes <= k;
}

} // namespace

TEST_CASE("longest_kmodal worked examples") {
  const Witness w = longest_kmodal(perm({1, 5, 3, 2, 4}), 1, SolveMode::IncFirst);
  CHECK(w.length() == 4);
  CHECK(w.values == std::vector<Value>{1, 5, 3, 2});
  CHECK(w.indices == std::vector<std::size_t>{1, 2, 3, 4});

  CHECK(longest_kmodal(strong_make(2, 5), 2, SolveMode::IncFirst).length() == 9);

  for (std::size_t k : {0u, 1u, 4u})
    for (SolveMode m : modes) {
      const std::size_t want = k == 0 && m == SolveMode::DecFirst ? 1 : 9;
      CHECK(longest_kmodal(Permutation::identity(9), k, m).length() == want);
    }

  CHECK_THROWS_AS(longest_kmodal(Permutation{}, 1, SolveMode::Any), EmptyPermutation);
}

TEST_CASE("brute-force oracle examples") {
  CHECK(brute_longest_kmodal(perm({2, 1}), 0, SolveMode::IncFirst) == 1);
  CHECK(brute_longest_kmodal(perm({2, 1}), 1, SolveMode::IncFirst) == 2);
  CHECK(brute_longest_kmodal(perm({1, 5, 3, 2, 4}), 1, SolveMode::IncFirst) == 4);
  CHECK_THROWS_AS(brute_longest_kmodal(Permutation::identity(21), 1, SolveMode::Any), TooLarge);
  CHECK_THROWS_AS(brute_best_joint(Permutation::identity(17), 1), TooLarge);

  CHECK(brute_best_joint(perm({1}), 3) == JointAnchor{1, 1, 1});
  const JointAnchor a = brute_best_joint(perm({1, 2}), 1);
  CHECK(a.position == 2);
  CHECK(a.inc_len == 2);
  CHECK(a.dec_len >= 1);
}

TEST_CASE("solver brute oracle agrees with the segmentation oracle") {
  for (std::size_t n = 1; n <= 6; ++n)
    oracle::for_each_permutation(n, [](const Permutation& p) {
      const auto subs = oracle::all_subsequences(p);
      for (std::size_t k = 0; k <= 2; ++k)
        for (int m = 0; m < 3; ++m)
          REQUIRE(brute_longest_kmodal(p, k, modes[m]) == oracle::longest(subs, k, m));
    });
}

TEST_CASE("DP matches brute force and quadratic fallback for n <= 7, k <= 3") {
  for (std::size_t n = 1; n <= 7; ++n)
    oracle::for_each_permutation(n, [](const Permutation& p) {
      for (std::size_t k = 0; k <= 3; ++k)
        for (SolveMode m : modes) {
          const Witness w = longest_kmodal(p, k, m);
          const std::size_t want = brute_longest_kmodal(p, k, m);
          REQUIRE(w.length() == want);
          REQUIRE(longest_kmodal_quadratic(p, k, m) == want);
          REQUIRE(witness_is_consistent(p, w));
          REQUIRE(witness_fits(w, k, m));
        }
    });
}

TEST_CASE("best_joint_anchor") {
  const JointAnchor a = best_joint_anchor(perm({1, 5, 3, 2, 4}), 1);
  CHECK(a.joint() == 3);
  CHECK(a == JointAnchor{4, 4, 3});
  CHECK(best_joint_anchor(perm({1}), 5) == JointAnchor{1, 1, 1});
  for (std::size_t n = 1; n <= 10; ++n) {
    const Permutation id = Permutation::identity(n);
    CHECK(best_joint_anchor(id, 1).joint() == brute_best_joint(id, 1).joint());
    CHECK(best_joint_anchor(id, 1).joint() == n);
  }

  for (std::size_t n = 1; n <= 6; ++n)
    oracle::for_each_permutation(n, [](const Permutation& p) {
      for (std::size_t k = 1; k <= 2; ++k)
        REQUIRE(best_joint_anchor(p, k) == brute_best_joint(p, k));
    });
}

TEST_CASE("DP state invariants") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 30;
    const std::size_t k = trial % 4;
    const Permutation p = perm(oracle::random_values(rng, n));
    for (DpStart start : {DpStart::IncFirst, DpStart::DecFirst, DpStart::Free}) {
      const ModalDp dp = ModalDp::run(p, k, start);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t c = 0; c <= k; ++c)
          for (Direction d : {Direction::Inc, Direction::Dec}) {
            const std::size_t len = dp.length(i, c, d);
            const bool forced_off = c == 0 &&
                ((start == DpStart::IncFirst && d == Direction::Dec) ||
                 (start == DpStart::DecFirst && d == Direction::Inc));
            if (!forced_off)
              CHECK(len >= 1);
            if (c > 0)
              CHECK(len >= dp.length(i, c - 1, d));
            if (len == 0)
              continue;
            const auto chain = dp.chain({i, c, d});
            CHECK(chain.size() == len);
            CHECK(chain.back() == i);
            for (std::size_t t = 1; t < chain.size(); ++t)
              CHECK(chain[t - 1] < chain[t]);
            const Witness w = make_witness(p, chain);
            if (start == DpStart::IncFirst)
              CHECK(w.profile.min_changes_inc_first <= c);
            else if (start == DpStart::DecFirst)
              CHECK(w.profile.min_changes_dec_first <= c);
            else
              CHECK(w.profile.min_changes <= c);
          }
    }
  }
}

TEST_CASE("solver properties on random permutations") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + (trial * 7) % 120;
    const Permutation p = perm(oracle::random_values(rng, n));
    std::size_t prev_any = 0;
    for (std::size_t k = 0; k <= 5; ++k) {
      const Witness inc = longest_kmodal(p, k, SolveMode::IncFirst);
      const Witness dec = longest_kmodal(p, k, SolveMode::DecFirst);
      const Witness any = longest_kmodal(p, k, SolveMode::Any);
      CHECK(any.length() == std::max(inc.length(), dec.length()));
      CHECK(any.length() >= prev_any);
      prev_any = any.length();
      CHECK(inc.length() == longest_kmodal(flip(p), k, SolveMode::DecFirst).length());
      CHECK(longest_kmodal_quadratic(p, k, SolveMode::Any) == any.length());
      for (const auto* w : {&inc, &dec, &any})
        CHECK(witness_is_consistent(p, *w));
      CHECK(witness_fits(inc, k, SolveMode::IncFirst));
      CHECK(witness_fits(dec, k, SolveMode::DecFirst));
      CHECK(witness_fits(any, k, SolveMode::Any));
      // a k-modal witness is a (k+1)-modal witness in both first directions
      CHECK(witness_fits(any, k + 1, SolveMode::IncFirst));
      CHECK(witness_fits(any, k + 1, SolveMode::DecFirst));
    }
    CHECK(longest_kmodal(p, n, SolveMode::Any).length() == n);
    CHECK(longest_kmodal(p, n, SolveMode::IncFirst).length() == n);
  }
}

TEST_CASE("witnesses are deterministic") {
  std::mt19937_64 rng(3);
  const Permutation p = perm(oracle::random_values(rng, 200));
  const Witness a = longest_kmodal(p, 3, SolveMode::Any);
  const Witness b = longest_kmodal(p, 3, SolveMode::Any);
  CHECK(a.indices == b.indices);
}

TEST_CASE("parse_solve_mode") {
  CHECK(parse_solve_mode("inc") == SolveMode::IncFirst);
  CHECK(parse_solve_mode("dec") == SolveMode::DecFirst);
  CHECK(parse_solve_mode("any") == SolveMode::Any);
  CHECK_THROWS_AS(parse_solve_mode("both"), InvalidParams);
}
