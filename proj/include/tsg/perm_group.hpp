#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "tsg/edge.hpp"
#include "tsg/exec.hpp"
#include "tsg/permutation.hpp"

namespace tsg {

inline constexpr std::size_t kGenerateCap = 1'000'000;
inline constexpr std::size_t kSubgroupGuard = 2000;

namespace detail {
struct PermGroupBuilder;
}

/// Finitely generated permutation group with its full element set
/// materialized. Elements are kept sorted; the identity is always first.
class PermGroup {
public:
  /// Closure of `gens` under composition. Throws DomainError
  /// "degree_mismatch" or "cap_exceeded".
  static PermGroup generate(int degree, std::vector<Permutation> gens,
                            std::size_t cap = kGenerateCap);

  static PermGroup trivial(int degree);

  /// Wraps an element set that must already be a group. A small generating
  /// set is recovered greedily. Throws VerificationFailure "not_closed" if
  /// the set is not closed.
  static PermGroup from_elements(int degree, std::vector<Permutation> elements);

  int degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation> &generators() const noexcept { return generators_; }
  const std::vector<Permutation> &elements() const noexcept { return elements_; }
  bool is_trivial() const noexcept { return elements_.size() == 1; }

  bool contains(const Permutation &p) const;
  /// Position of p in elements(), or npos.
  std::size_t index_of(const Permutation &p) const;
  bool is_subgroup_of(const PermGroup &g) const;

  /// Equality of element sets (generators are ignored).
  friend bool operator==(const PermGroup &a, const PermGroup &b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  friend struct detail::PermGroupBuilder;

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Dense multiplication table over a materialized group, indexed by the
/// positions in PermGroup::elements(). mul(a, b) is the index of a*b.
class CayleyTable {
public:
  explicit CayleyTable(const PermGroup &g);

  std::size_t size() const noexcept { return n_; }
  std::uint16_t mul(std::size_t a, std::size_t b) const noexcept { return table_[a * n_ + b]; }
  std::uint16_t inv(std::size_t a) const noexcept { return inverse_[a]; }
  int element_order(std::size_t a) const noexcept { return orders_[a]; }
  static constexpr std::uint16_t identity = 0;

private:
  std::size_t n_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
  std::vector<int> orders_;
};

std::set<int> orbit(const PermGroup &g, int point);
std::set<Edge> orbit(const PermGroup &g, const Edge &e);

/// True iff p swaps the endpoints of e.
inline bool inverts(const Permutation &p, const Edge &e) {
  return p(e.u) == e.v && p(e.v) == e.u;
}

/// {p in g : p(u) = u and p(v) = v}. An element swapping u and v is not
/// included.
PermGroup edge_pointwise_stabilizer(const PermGroup &g, const Edge &e,
                                    Exec exec = Exec::parallel);

struct GroupFingerprint {
  std::size_t order = 0;
  bool abelian = true;
  std::map<int, int> order_histogram;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;

  bool operator==(const GroupFingerprint &) const = default;
};

GroupFingerprint fingerprint(const PermGroup &g);

/// Every subgroup of g exactly once, sorted by (order, element set).
/// Seeds with the cyclic subgroups and extends each known subgroup by each
/// cyclic subgroup until nothing new appears. Throws DomainError
/// "guard_exceeded" when g.order() > guard.
std::vector<PermGroup> enumerate_subgroups(const PermGroup &g, Exec exec = Exec::parallel,
                                           std::size_t guard = kSubgroupGuard);

/// Abstract group isomorphism: fingerprint comparison, then a backtracking
/// search over generator images with matching element orders.
bool isomorphic(const PermGroup &g, const PermGroup &h, std::size_t guard = kSubgroupGuard);

} // namespace tsg
