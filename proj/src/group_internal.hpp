#pragma once

// Index-level helpers over a CayleyTable. Not part of the public API.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tsg/perm_group.hpp"

namespace tsg::detail {

struct PermGroupBuilder {
  // Trusts that `elements` is sorted, duplicate-free and generated by `gens`.
  static PermGroup assemble(int degree, std::vector<Permutation> gens,
                            std::vector<Permutation> elements) {
    PermGroup g;
    g.degree_ = degree;
    g.generators_ = std::move(gens);
    g.elements_ = std::move(elements);
    return g;
  }
};

/// Subset of a group's element indices.
class IndexSet {
public:
  explicit IndexSet(std::size_t universe = 0) : words_((universe + 63) / 64, 0) {}

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  bool set(std::size_t i) {
    auto &w = words_[i >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (w & bit)
      return false;
    w |= bit;
    ++count_;
    return true;
  }
  std::size_t count() const noexcept { return count_; }
  const std::vector<std::uint64_t> &words() const noexcept { return words_; }

  std::vector<std::uint16_t> members() const {
    std::vector<std::uint16_t> out;
    out.reserve(count_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
        out.push_back(static_cast<std::uint16_t>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
    return out;
  }

  friend bool operator==(const IndexSet &a, const IndexSet &b) { return a.words_ == b.words_; }
  friend bool operator<(const IndexSet &a, const IndexSet &b) { return a.words_ < b.words_; }

private:
  std::vector<std::uint64_t> words_;
  std::size_t count_ = 0;
};

struct IndexSetHash {
  std::size_t operator()(const IndexSet &s) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ull;
    for (auto w : s.words())
      h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

/// Subgroup generated by the given element indices.
inline IndexSet close_indices(const CayleyTable &t, const std::vector<std::uint16_t> &gens) {
  IndexSet s(t.size());
  std::vector<std::uint16_t> queue{CayleyTable::identity};
  s.set(CayleyTable::identity);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = queue[head];
    for (auto g : gens) {
      const auto y = t.mul(g, x);
      if (s.set(y))
        queue.push_back(y);
    }
  }
  return s;
}

/// Greedy generating set of the whole table's group, largest orders first.
inline std::vector<std::uint16_t> greedy_generators(const CayleyTable &t) {
  std::vector<std::uint16_t> order(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    order[i] = static_cast<std::uint16_t>(i);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return t.element_order(a) > t.element_order(b);
  });
  std::vector<std::uint16_t> gens;
  IndexSet reached = close_indices(t, gens);
  for (auto x : order) {
    if (reached.test(x))
      continue;
    gens.push_back(x);
    reached = close_indices(t, gens);
    if (reached.count() == t.size())
      break;
  }
  return gens;
}

} // namespace tsg::detail
