#include "kmodal/random.hpp"

#include <numeric>
#include <random>
#include <utility>

namespace kmodal {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t cell, std::uint64_t sample) noexcept {
  return mix64(mix64(mix64(base) ^ cell) ^ sample);
}

namespace {

// uniform in [0, bound)
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r = 0;
  do
    r = rng();
  while (r >= limit);
  return r % bound;
}

} // namespace

Permutation random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<Value> v(n);
  std::iota(v.begin(), v.end(), Value{1});
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i)
    std::swap(v[i - 1], v[draw_below(rng, i)]);
  return make_permutation(std::move(v), true);
}

} // namespace kmodal
