#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tsg/edge.hpp"

namespace tsg {

/// Cycle structure of a permutation. `counts` holds non-trivial cycles only
/// (length >= 2); fixed points are tracked separately.
struct CycleType {
  std::map<int, int> counts;
  int fixed_points = 0;

  int degree() const;
  long long order() const; // lcm of cycle lengths
  bool operator==(const CycleType &) const = default;
};

/// Bijection on {0..n-1}. Externally every point is 1-indexed; see
/// parse_cycles / to_cycle_string.
///
/// Composition follows (a * b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  Edge operator()(const Edge &e) const { return Edge((*this)(e.u), (*this)(e.v)); }

  const std::vector<int> &images() const noexcept { return images_; }
  std::vector<int> one_based_images() const;

  Permutation inverse() const;
  bool is_identity() const noexcept;
  bool fixes(int x) const { return (*this)(x) == x; }
  long long order() const;

  /// Non-trivial cycles, each starting at its smallest point, sorted.
  std::vector<std::vector<int>> cycles() const;

  /// 1-indexed cycle notation; identity renders as "()".
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation &a, const Permutation &b);
  friend auto operator<=>(const Permutation &, const Permutation &) = default;
  friend bool operator==(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> images_;
};

/// Parses whitespace-separated disjoint cycles over points 1..n, e.g.
/// "(1 2 3)(4 5)". The empty string and "()" denote the identity.
/// Throws DomainError: "point_out_of_range", "repeated_point",
/// "malformed_cycle".
Permutation parse_cycles(std::string_view text, int n);

CycleType cycle_type(const Permutation &p);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace tsg
