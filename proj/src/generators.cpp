#include "kmodal/generators.hpp"

#include <numeric>
#include <string>

namespace kmodal {

namespace {

void check_params(std::size_t k, std::size_t t) {
  if (k == 0 || t == 0)
    throw InvalidParams("generators need k >= 1 and t >= 1 (got k=" + std::to_string(k) +
                        ", t=" + std::to_string(t) + ")");
}

// Each block is count+len-1, ..., count and later blocks sit above earlier ones.
Permutation from_blocks(const std::vector<std::size_t>& lengths) {
  std::vector<Value> out;
  out.reserve(std::accumulate(lengths.begin(), lengths.end(), std::size_t{0}));
  Value count = 1;
  for (std::size_t len : lengths) {
    for (std::size_t j = len; j-- > 0;)
      out.push_back(count + static_cast<Value>(j));
    count += static_cast<Value>(len);
  }
  return make_permutation(std::move(out), true);
}

} // namespace

std::string_view to_string(Family f) noexcept {
  return f == Family::Strong ? "strong" : "perm";
}

Family parse_family(std::string_view s) {
  if (s == "strong")
    return Family::Strong;
  if (s == "perm")
    return Family::Perm;
  throw InvalidParams("unknown family '" + std::string(s) + "'");
}

std::vector<std::size_t> block_lengths(Family family, std::size_t k, std::size_t t) {
  check_params(k, t);
  std::vector<std::size_t> lengths;
  if (family == Family::Strong) {
    lengths.assign(t * (k / 2), t);
    if (k % 2 == 1)
      for (std::size_t i = t; i-- > 0;)
        if (i > 0)
          lengths.push_back(i);
    return lengths;
  }
  for (std::size_t i = 0; i < t; ++i)
    lengths.push_back(t + i);
  lengths.insert(lengths.end(), (k - 1) * t, 2 * t);
  for (std::size_t i = t; i-- > 0;)
    lengths.push_back(t + i);
  return lengths;
}

Permutation strong_make(std::size_t k, std::size_t t) {
  return from_blocks(block_lengths(Family::Strong, k, t));
}

Permutation perm_make(std::size_t k, std::size_t t) {
  return from_blocks(block_lengths(Family::Perm, k, t));
}

Permutation generate(Family family, std::size_t k, std::size_t t) {
  return family == Family::Strong ? strong_make(k, t) : perm_make(k, t);
}

std::size_t predicted_size(Family family, std::size_t k, std::size_t t) {
  check_params(k, t);
  if (family == Family::Perm)
    return (2 * k + 1) * t * t - t;
  if (k % 2 == 0)
    return k * t * t / 2;
  return (k - 1) * t * t / 2 + t * (t - 1) / 2;
}

} // namespace kmodal
