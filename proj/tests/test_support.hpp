#pragma once

// Shared helpers and independent brute-force oracles for the test suites.
// Nothing here calls the library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tsg/perm_group.hpp"
#include "tsg/permutation.hpp"

namespace tsg::testing {

inline Permutation P(const std::string &cycles, int n) { return parse_cycles(cycles, n); }

inline PermGroup G(int n, std::initializer_list<const char *> gens) {
  std::vector<Permutation> ps;
  for (const char *g : gens)
    ps.push_back(parse_cycles(g, n));
  return PermGroup::generate(n, ps);
}

/// Closure by naive fixpoint over a std::set: multiply everything by
/// everything until stable.
inline std::set<Permutation> naive_closure(int n, const std::vector<Permutation> &gens) {
  std::set<Permutation> s{Permutation::identity(n)};
  s.insert(gens.begin(), gens.end());
  for (bool grown = true; grown;) {
    grown = false;
    std::vector<Permutation> cur(s.begin(), s.end());
    for (const auto &a : cur)
      for (const auto &b : cur)
        if (s.insert(a * b).second)
          grown = true;
  }
  return s;
}

/// Subgroup oracle: closures of every subset of at most `k` elements.
/// Complete whenever every subgroup is generated by <= k elements, which the
/// caller confirms by observing that k+1 adds nothing new.
inline std::set<std::vector<Permutation>> subgroups_by_subset_closure(const PermGroup &g, int k) {
  const auto &el = g.elements();
  const std::size_t n = el.size();
  // Index-level multiplication, built directly from permutations.
  std::vector<std::vector<std::uint16_t>> mul(n, std::vector<std::uint16_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto prod = el[a] * el[b];
      mul[a][b] = static_cast<std::uint16_t>(
          std::lower_bound(el.begin(), el.end(), prod) - el.begin());
    }
  auto close = [&](const std::vector<std::size_t> &gens) {
    std::vector<char> in(n, 0);
    std::vector<std::size_t> q{0};
    in[0] = 1;
    for (std::size_t h = 0; h < q.size(); ++h)
      for (auto s : gens) {
        auto y = mul[s][q[h]];
        if (!in[y]) {
          in[y] = 1;
          q.push_back(y);
        }
      }
    std::vector<Permutation> out;
    for (std::size_t i = 0; i < n; ++i)
      if (in[i])
        out.push_back(el[i]);
    return out;
  };

  std::set<std::vector<Permutation>> result;
  std::vector<std::size_t> pick;
  auto rec = [&](auto &&self, std::size_t start) -> void {
    result.insert(close(pick));
    if (static_cast<int>(pick.size()) == k)
      return;
    for (std::size_t i = start; i < n; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  return result;
}

inline std::map<int, int> brute_order_histogram(const PermGroup &g) {
  std::map<int, int> h;
  for (const auto &x : g.elements()) {
    int k = 1;
    for (auto y = x; !y.is_identity(); y = y * x)
      ++k;
    ++h[k];
  }
  return h;
}

} // namespace tsg::testing
