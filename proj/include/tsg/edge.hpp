#pragma once

#include <compare>
#include <string>
#include <utility>

namespace tsg {

/// Unordered pair of distinct points, stored 0-indexed with u < v.
struct Edge {
  int u = 0;
  int v = 1;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(int x) const noexcept { return x == u || x == v; }

  friend auto operator<=>(const Edge &, const Edge &) = default;
  friend bool operator==(const Edge &, const Edge &) = default;
};

/// "{u,v}" with 1-indexed points.
inline std::string to_string(const Edge &e) {
  return "{" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "}";
}

} // namespace tsg
