#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace kmodal::detail {

// Prefix-maximum Fenwick tree over keys 1..n. Values only ever grow.
template <typename T>
class MaxFenwick {
public:
  explicit MaxFenwick(std::size_t n, T zero = T{}) : zero_(zero), tree_(n + 1, zero) {}

  void raise(std::size_t key, T value) {
    for (; key < tree_.size(); key += key & (~key + 1))
      tree_[key] = std::max(tree_[key], value);
  }

  // max over keys 1..key (zero when key == 0)
  T prefix_max(std::size_t key) const {
    T best = zero_;
    for (; key > 0; key -= key & (~key + 1))
      best = std::max(best, tree_[key]);
    return best;
  }

private:
  T zero_;
  std::vector<T> tree_;
};

// Several prefix-max Fenwick trees sharing one key space, stored interleaved
// so that a single root-to-leaf walk serves every layer.
class LayeredMaxFenwick {
public:
  LayeredMaxFenwick(std::size_t n, std::size_t layers)
      : n_(n), layers_(layers), tree_((n + 1) * layers, 0) {}

  void raise(std::size_t key, std::span<const std::uint64_t> values) {
    for (; key <= n_; key += key & (~key + 1)) {
      std::uint64_t* node = &tree_[key * layers_];
      for (std::size_t c = 0; c < layers_; ++c)
        node[c] = std::max(node[c], values[c]);
    }
  }

  // out[c] = max over keys 1..key of layer c
  void prefix_max(std::size_t key, std::span<std::uint64_t> out) const {
    std::fill(out.begin(), out.end(), std::uint64_t{0});
    for (; key > 0; key -= key & (~key + 1)) {
      const std::uint64_t* node = &tree_[key * layers_];
      for (std::size_t c = 0; c < layers_; ++c)
        out[c] = std::max(out[c], node[c]);
    }
  }

private:
  std::size_t n_;
  std::size_t layers_;
  std::vector<std::uint64_t> tree_;
};

} // namespace kmodal::detail
