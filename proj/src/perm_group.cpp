#include "tsg/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "tsg/error.hpp"

namespace tsg {

namespace {

std::vector<Permutation> closure(int degree, const std::vector<Permutation> &gens,
                                 std::size_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  auto id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto &g : gens) {
      Permutation y = g * x;
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw DomainError("cap_exceeded", "group order exceeds cap of " +
                                                std::to_string(cap));
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

PermGroup PermGroup::generate(int degree, std::vector<Permutation> gens, std::size_t cap) {
  if (degree < 0)
    throw DomainError("bad_degree", "degree must be non-negative");
  if (cap < 1)
    throw DomainError("bad_cap", "cap must be at least 1");
  for (const auto &g : gens)
    if (g.degree() != degree)
      throw DomainError("degree_mismatch", "generator " + g.to_cycle_string() +
                                               " has degree " + std::to_string(g.degree()) +
                                               ", expected " + std::to_string(degree));
  PermGroup g;
  g.degree_ = degree;
  g.elements_ = closure(degree, gens, cap);
  std::erase_if(gens, [](const Permutation &p) { return p.is_identity(); });
  g.generators_ = std::move(gens);
  return g;
}

PermGroup PermGroup::trivial(int degree) { return generate(degree, {}); }

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const auto &p : elements)
    if (p.degree() != degree)
      throw DomainError("degree_mismatch", "element of wrong degree");

  // Greedy generating set, preferring elements of large order.
  std::vector<std::pair<long long, std::size_t>> by_order;
  by_order.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    by_order.emplace_back(-elements[i].order(), i);
  std::sort(by_order.begin(), by_order.end());

  std::vector<Permutation> gens;
  std::vector<Permutation> reached{Permutation::identity(degree)};
  for (auto [neg_order, i] : by_order) {
    const auto &x = elements[i];
    if (std::binary_search(reached.begin(), reached.end(), x))
      continue;
    gens.push_back(x);
    try {
      reached = closure(degree, gens, elements.size());
    } catch (const DomainError &) {
      throw VerificationFailure("not_closed", "element set is not a group");
    }
  }
  if (reached != elements)
    throw VerificationFailure("not_closed", "element set is not a group");

  PermGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(gens);
  g.elements_ = std::move(elements);
  return g;
}

bool PermGroup::contains(const Permutation &p) const { return index_of(p) != npos; }

std::size_t PermGroup::index_of(const Permutation &p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p)
    return npos;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup &g) const {
  if (degree_ != g.degree_ || g.order() % order() != 0)
    return false;
  return std::includes(g.elements_.begin(), g.elements_.end(), elements_.begin(),
                       elements_.end());
}

CayleyTable::CayleyTable(const PermGroup &g) : n_(g.order()) {
  if (n_ > 65535)
    throw DomainError("guard_exceeded", "group too large for a Cayley table");
  const auto &el = g.elements();
  std::unordered_map<Permutation, std::uint16_t, PermutationHash> index;
  index.reserve(n_ * 2);
  for (std::size_t i = 0; i < n_; ++i)
    index.emplace(el[i], static_cast<std::uint16_t>(i));

  table_.resize(n_ * n_);
  inverse_.resize(n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      auto it = index.find(el[a] * el[b]);
      if (it == index.end())
        throw VerificationFailure("not_closed", "group element set not closed");
      table_[a * n_ + b] = it->second;
      if (it->second == identity)
        inverse_[a] = static_cast<std::uint16_t>(b);
    }

  orders_.resize(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    int k = 1;
    for (std::size_t x = a; x != identity; x = mul(a, x))
      ++k;
    orders_[a] = k;
  }
}

std::set<int> orbit(const PermGroup &g, int point) {
  if (point < 0 || point >= g.degree())
    throw DomainError("invalid_point", "point " + std::to_string(point + 1) +
                                           " outside 1.." + std::to_string(g.degree()));
  std::set<int> out;
  for (const auto &p : g.elements())
    out.insert(p(point));
  return out;
}

std::set<Edge> orbit(const PermGroup &g, const Edge &e) {
  if (e.u < 0 || e.v >= g.degree() || e.u == e.v)
    throw DomainError("invalid_edge", "edge " + to_string(e) + " invalid for degree " +
                                          std::to_string(g.degree()));
  std::set<Edge> out;
  for (const auto &p : g.elements())
    out.insert(p(e));
  return out;
}

PermGroup edge_pointwise_stabilizer(const PermGroup &g, const Edge &e, Exec exec) {
  if (e.u < 0 || e.v >= g.degree() || e.u == e.v)
    throw DomainError("invalid_edge", "edge " + to_string(e) + " invalid for degree " +
                                          std::to_string(g.degree()));
  const auto &el = g.elements();
  auto keep = kernels::select_indices(
      el.size(), [&](std::size_t i) { return el[i].fixes(e.u) && el[i].fixes(e.v); }, exec);
  std::vector<Permutation> sub;
  sub.reserve(keep.size());
  for (auto i : keep)
    sub.push_back(el[i]);
  return PermGroup::from_elements(g.degree(), std::move(sub));
}

} // namespace tsg
