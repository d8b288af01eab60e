#pragma once

#include <set>
#include <vector>

#include "tsg/edge.hpp"
#include "tsg/permutation.hpp"

namespace tsg {

class PermGroup;

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
  Graph() = default;
  /// Throws DomainError "invalid_edge" on out-of-range endpoints.
  Graph(int n, std::set<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  const std::set<Edge> &edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool has_edge(const Edge &e) const { return edges_.contains(e); }
  std::vector<std::vector<int>> adjacency() const;

  bool operator==(const Graph &) const = default;

private:
  int n_ = 0;
  std::set<Edge> edges_;
};

struct Subgraph {
  std::set<int> vertices;
  std::set<Edge> edges;

  bool operator==(const Subgraph &) const = default;
};

/// K_n. Throws DomainError "bad_parameter" for n < 1.
Graph complete_graph(int n);

/// At least 4 vertices, connected, and still connected after deleting any
/// one or two vertices. Checked exhaustively.
bool is_three_connected(const Graph &g);

/// Fixed vertices of p with the edges of g between them.
Subgraph fixed_subgraph(const Graph &g, const Permutation &p);

/// Homeomorphic to a subspace of the circle: a disjoint union of paths and
/// points (the empty graph included), or exactly one cycle.
bool embeds_in_circle(const Subgraph &s);

bool is_automorphism(const Graph &g, const Permutation &p);

/// Throws DomainError "not_an_automorphism" (with the offending generator as
/// witness) unless every generator of `group` preserves g.
void require_acts_on(const Graph &g, const PermGroup &group);

} // namespace tsg
