#include <algorithm>
#include <functional>
#include <unordered_set>

#include "group_internal.hpp"
#include "tsg/error.hpp"
#include "tsg/perm_group.hpp"

namespace tsg {

using detail::close_indices;
using detail::IndexSet;
using detail::IndexSetHash;

namespace {

void check_guard(const PermGroup &g, std::size_t guard, const char *what) {
  if (g.order() > guard)
    throw DomainError("guard_exceeded", std::string(what) + ": group order " +
                                            std::to_string(g.order()) + " exceeds guard " +
                                            std::to_string(guard));
}

bool commutes_with_all(const Permutation &x, const std::vector<Permutation> &gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Permutation &g) { return x * g == g * x; });
}

// Normal closure in g of the commutators of g's generators.
std::size_t derived_subgroup_order(const PermGroup &g) {
  const auto &gens = g.generators();
  std::vector<Permutation> comm;
  for (const auto &a : gens)
    for (const auto &b : gens) {
      auto c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity())
        comm.push_back(std::move(c));
    }
  PermGroup d = PermGroup::generate(g.degree(), comm);
  for (bool grown = true; grown;) {
    grown = false;
    for (const auto &x : g.generators()) {
      for (const auto &n : d.generators()) {
        auto c = x.inverse() * n * x;
        if (!d.contains(c)) {
          auto next = d.generators();
          next.push_back(std::move(c));
          d = PermGroup::generate(g.degree(), std::move(next));
          grown = true;
          break;
        }
      }
      if (grown)
        break;
    }
  }
  return d.order();
}

struct SubgroupRecord {
  IndexSet members;
  std::vector<std::uint16_t> gens;
};

} // namespace

GroupFingerprint fingerprint(const PermGroup &g) {
  GroupFingerprint fp;
  fp.order = g.order();
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size() && fp.abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) {
        fp.abelian = false;
        break;
      }
  for (const auto &x : g.elements()) {
    ++fp.order_histogram[static_cast<int>(x.order())];
    if (commutes_with_all(x, gens))
      ++fp.center_order;
  }
  fp.derived_order = fp.abelian ? 1 : derived_subgroup_order(g);
  return fp;
}

std::vector<PermGroup> enumerate_subgroups(const PermGroup &g, Exec exec, std::size_t guard) {
  check_guard(g, guard, "enumerate_subgroups");
  const CayleyTable table(g);
  const std::size_t n = table.size();

  std::vector<SubgroupRecord> found;
  std::unordered_set<IndexSet, IndexSetHash> known;

  // Cyclic seeds, one generator each.
  std::vector<std::uint16_t> cyclic_gens;
  std::vector<IndexSet> cyclic_sets;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::uint16_t> gens;
    if (x != CayleyTable::identity)
      gens.push_back(static_cast<std::uint16_t>(x));
    IndexSet s = close_indices(table, gens);
    if (known.insert(s).second) {
      found.push_back({s, gens});
      if (!gens.empty()) {
        cyclic_gens.push_back(gens.front());
        cyclic_sets.push_back(s);
      }
    }
  }

  std::vector<std::size_t> frontier(found.size());
  for (std::size_t i = 0; i < frontier.size(); ++i)
    frontier[i] = i;

  while (!frontier.empty()) {
    // Extensions of each frontier subgroup are independent; `known` is only
    // read during this phase.
    auto extensions = kernels::map_indices(
        frontier.size(),
        [&](std::size_t f) {
          const SubgroupRecord &base = found[frontier[f]];
          std::vector<SubgroupRecord> out;
          std::unordered_set<IndexSet, IndexSetHash> local;
          for (std::size_t c = 0; c < cyclic_gens.size(); ++c) {
            if (base.members.test(cyclic_gens[c]))
              continue;
            auto gens = base.gens;
            gens.push_back(cyclic_gens[c]);
            IndexSet s = close_indices(table, gens);
            if (known.count(s) || !local.insert(s).second)
              continue;
            out.push_back({std::move(s), std::move(gens)});
          }
          return out;
        },
        exec);

    std::vector<std::size_t> next;
    for (auto &batch : extensions)
      for (auto &rec : batch)
        if (known.insert(rec.members).second) {
          next.push_back(found.size());
          found.push_back(std::move(rec));
        }
    frontier = std::move(next);
  }

  std::vector<std::pair<std::vector<std::uint16_t>, std::size_t>> keyed;
  keyed.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i)
    keyed.emplace_back(found[i].members.members(), i);
  std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) {
    if (a.first.size() != b.first.size())
      return a.first.size() < b.first.size();
    return a.first < b.first;
  });

  const auto &el = g.elements();
  std::vector<PermGroup> out;
  out.reserve(keyed.size());
  for (const auto &[members, idx] : keyed) {
    std::vector<Permutation> elems;
    elems.reserve(members.size());
    for (auto m : members)
      elems.push_back(el[m]);
    std::vector<Permutation> gens;
    for (auto x : found[idx].gens)
      gens.push_back(el[x]);
    out.push_back(detail::PermGroupBuilder::assemble(g.degree(), std::move(gens), std::move(elems)));
  }
  return out;
}

namespace {

class IsomorphismSearch {
public:
  IsomorphismSearch(const CayleyTable &src, const CayleyTable &dst)
      : src_(src), dst_(dst), gens_(detail::greedy_generators(src)) {
    for (auto gen : gens_) {
      std::vector<std::uint16_t> cands;
      for (std::size_t y = 0; y < dst.size(); ++y)
        if (dst.element_order(y) == src.element_order(gen))
          cands.push_back(static_cast<std::uint16_t>(y));
      candidates_.push_back(std::move(cands));
    }
    images_.resize(gens_.size());
  }

  bool run() { return extend(0); }

private:
  bool extend(std::size_t depth) {
    if (depth == gens_.size())
      return true;
    for (auto c : candidates_[depth]) {
      images_[depth] = c;
      if (consistent(depth + 1) && extend(depth + 1))
        return true;
    }
    return false;
  }

  // Checks that gens_[0..k) -> images_[0..k) extends to an injective
  // homomorphism on the subgroup they generate.
  bool consistent(std::size_t k) {
    std::vector<int> map(src_.size(), -1);
    std::vector<char> used(dst_.size(), 0);
    std::vector<std::uint16_t> queue{CayleyTable::identity};
    map[CayleyTable::identity] = CayleyTable::identity;
    used[CayleyTable::identity] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto x = queue[head];
      for (std::size_t i = 0; i < k; ++i) {
        const auto y = src_.mul(gens_[i], x);
        const int img = dst_.mul(images_[i], static_cast<std::size_t>(map[x]));
        if (map[y] == -1) {
          if (used[static_cast<std::size_t>(img)])
            return false;
          used[static_cast<std::size_t>(img)] = 1;
          map[y] = img;
          queue.push_back(y);
        } else if (map[y] != img) {
          return false;
        }
      }
    }
    return true;
  }

  const CayleyTable &src_;
  const CayleyTable &dst_;
  std::vector<std::uint16_t> gens_;
  std::vector<std::vector<std::uint16_t>> candidates_;
  std::vector<std::uint16_t> images_;
};

} // namespace

bool isomorphic(const PermGroup &g, const PermGroup &h, std::size_t guard) {
  check_guard(g, guard, "isomorphic");
  check_guard(h, guard, "isomorphic");
  if (g.order() != h.order())
    return false;
  if (fingerprint(g) != fingerprint(h))
    return false;
  if (g.order() <= 2)
    return true;
  const CayleyTable tg(g), th(h);
  return IsomorphismSearch(tg, th).run();
}

} // namespace tsg
