#include "kmodal/core.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace kmodal {

std::string_view to_string(Direction d) noexcept {
  return d == Direction::Inc ? "inc" : "dec";
}

std::string_view to_string(FirstDirection d) noexcept {
  switch (d) {
  case FirstDirection::Inc:
    return "inc";
  case FirstDirection::Dec:
    return "dec";
  case FirstDirection::Both:
    break;
  }
  return "both";
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Value> v(n);
  std::iota(v.begin(), v.end(), Value{1});
  return Permutation(std::move(v));
}

Value Permutation::at(std::size_t pos) const {
  if (pos == 0 || pos > values_.size())
    throw InvalidPositions("position " + std::to_string(pos) + " outside 1.." +
                           std::to_string(values_.size()));
  return values_[pos - 1];
}

Permutation make_permutation(std::vector<Value> values, bool allow_empty) {
  if (values.empty() && !allow_empty)
    throw NotAPermutation("empty sequence");
  const std::size_t n = values.size();
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Value v = values[i];
    if (v < 1 || v > n)
      throw NotAPermutation("value " + std::to_string(v) + " at position " +
                            std::to_string(i + 1) + " outside 1.." + std::to_string(n));
    if (seen[v])
      throw NotAPermutation("duplicate value " + std::to_string(v) + " at position " +
                            std::to_string(i + 1));
    seen[v] = true;
  }
  return Permutation(std::move(values));
}

Permutation flip(const Permutation& p) {
  const auto n = static_cast<Value>(p.size());
  std::vector<Value> out;
  out.reserve(n);
  for (Value v : p.values())
    out.push_back(n + 1 - v);
  return make_permutation(std::move(out), true);
}

Permutation reverse(const Permutation& p) {
  std::vector<Value> out(p.values().rbegin(), p.values().rend());
  return make_permutation(std::move(out), true);
}

Permutation rank_values(std::span<const Value> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<Value> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && values[order[r]] == values[order[r - 1]])
      throw DuplicateValues("value " + std::to_string(values[order[r]]) + " repeats");
    ranks[order[r]] = static_cast<Value>(r + 1);
  }
  return make_permutation(std::move(ranks), true);
}

Permutation restrict(const Permutation& p, std::span<const std::size_t> positions) {
  std::vector<Value> picked;
  picked.reserve(positions.size());
  std::size_t prev = 0;
  for (std::size_t pos : positions) {
    if (pos == 0 || pos > p.size())
      throw InvalidPositions("position " + std::to_string(pos) + " outside 1.." +
                             std::to_string(p.size()));
    if (pos <= prev)
      throw InvalidPositions("positions must be strictly increasing");
    picked.push_back(p[pos]);
    prev = pos;
  }
  return rank_values(picked);
}

ModalityProfile modality(std::span<const Value> values) {
  bool distinct = true;
  if (values.size() <= 32) {
    for (std::size_t i = 0; i < values.size() && distinct; ++i)
      for (std::size_t j = i + 1; j < values.size(); ++j)
        if (values[i] == values[j]) {
          distinct = false;
          break;
        }
  } else {
    std::vector<Value> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  if (!distinct)
    throw DuplicateValues("modality needs pairwise distinct values");
  ModalityProfile prof;
  if (values.size() <= 1)
    return prof;

  const bool first_up = values[0] < values[1];
  bool up = first_up;
  std::size_t alternations = 0;
  for (std::size_t i = 2; i < values.size(); ++i) {
    const bool step_up = values[i - 1] < values[i];
    if (step_up != up)
      ++alternations;
    up = step_up;
  }
  prof.min_changes = alternations;
  prof.min_changes_inc_first = alternations + (first_up ? 0 : 1);
  prof.min_changes_dec_first = alternations + (first_up ? 1 : 0);
  prof.first_direction = first_up ? FirstDirection::Inc : FirstDirection::Dec;
  return prof;
}

Witness make_witness(const Permutation& p, std::vector<std::size_t> indices) {
  Witness w;
  w.values.reserve(indices.size());
  std::size_t prev = 0;
  for (std::size_t pos : indices) {
    if (pos <= prev || pos > p.size())
      throw InvalidPositions("witness indices must be strictly increasing within 1..n");
    w.values.push_back(p[pos]);
    prev = pos;
  }
  w.indices = std::move(indices);
  w.profile = modality(w.values);
  return w;
}

bool witness_is_consistent(const Permutation& p, const Witness& w) {
  if (w.indices.size() != w.values.size())
    return false;
  std::size_t prev = 0;
  for (std::size_t t = 0; t < w.indices.size(); ++t) {
    const std::size_t pos = w.indices[t];
    if (pos <= prev || pos > p.size() || p[pos] != w.values[t])
      return false;
    prev = pos;
  }
  return modality(w.values) == w.profile;
}

Permutation parse_permutation(std::string_view text, bool allow_empty) {
  std::vector<Value> values;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j]))
      ++j;
    const std::string_view tok = text.substr(i, j - i);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw NotAPermutation("not an integer: '" + std::string(tok) + "'");
    if (v < 1 || v > static_cast<long long>(UINT32_MAX))
      throw NotAPermutation("value out of range: " + std::string(tok));
    values.push_back(static_cast<Value>(v));
    i = j;
  }
  return make_permutation(std::move(values), allow_empty);
}

std::string format_permutation(const Permutation& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

Permutation read_permutation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_permutation(buf.str());
}

void write_permutation_file(const std::string& path, const Permutation& p) {
  std::ofstream out(path);
  if (!out)
    throw Error("cannot open '" + path + "' for writing");
  out << p << '\n';
  if (!out)
    throw Error("write to '" + path + "' failed");
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  bool first = true;
  for (Value v : p.values()) {
    if (!first)
      os << ' ';
    os << v;
    first = false;
  }
  return os;
}

} // namespace kmodal
