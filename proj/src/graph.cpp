#include "tsg/graph.hpp"

#include <map>

#include "tsg/error.hpp"
#include "tsg/perm_group.hpp"

namespace tsg {

Graph::Graph(int n, std::set<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0)
    throw DomainError("bad_parameter", "negative vertex count");
  for (const auto &e : edges_)
    if (e.u == e.v || e.u < 0 || e.v >= n)
      throw DomainError("invalid_edge", "edge " + to_string(e) + " is not a pair of distinct vertices of the graph");
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
  for (const auto &e : edges_) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

Graph complete_graph(int n) {
  if (n < 1)
    throw DomainError("bad_parameter", "complete_graph requires n >= 1");
  std::set<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      edges.emplace(u, v);
  return Graph(n, std::move(edges));
}

namespace {

// Connectivity of g with the vertices in `removed` deleted.
bool connected_without(const std::vector<std::vector<int>> &adj, std::vector<char> removed) {
  const int n = static_cast<int>(adj.size());
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[static_cast<std::size_t>(v)]) {
      ++alive;
      if (start < 0)
        start = v;
    }
  if (alive == 0)
    return false;
  std::vector<int> stack{start};
  removed[static_cast<std::size_t>(start)] = 1;
  int seen = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[static_cast<std::size_t>(x)])
      if (!removed[static_cast<std::size_t>(y)]) {
        removed[static_cast<std::size_t>(y)] = 1;
        ++seen;
        stack.push_back(y);
      }
  }
  return seen == alive;
}

} // namespace

bool is_three_connected(const Graph &g) {
  const int n = g.vertex_count();
  if (n < 4)
    return false;
  const auto adj = g.adjacency();
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  if (!connected_without(adj, removed))
    return false;
  for (int a = 0; a < n; ++a) {
    removed[static_cast<std::size_t>(a)] = 1;
    if (!connected_without(adj, removed))
      return false;
    for (int b = a + 1; b < n; ++b) {
      removed[static_cast<std::size_t>(b)] = 1;
      bool ok = connected_without(adj, removed);
      removed[static_cast<std::size_t>(b)] = 0;
      if (!ok)
        return false;
    }
    removed[static_cast<std::size_t>(a)] = 0;
  }
  return true;
}

Subgraph fixed_subgraph(const Graph &g, const Permutation &p) {
  if (p.degree() != g.vertex_count())
    throw DomainError("degree_mismatch", "permutation degree differs from vertex count");
  Subgraph s;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (p(v) == v)
      s.vertices.insert(v);
  for (const auto &e : g.edges())
    if (s.vertices.contains(e.u) && s.vertices.contains(e.v))
      s.edges.insert(e);
  return s;
}

bool embeds_in_circle(const Subgraph &s) {
  std::map<int, int> degree;
  for (int v : s.vertices)
    degree[v] = 0;
  for (const auto &e : s.edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  for (auto [v, d] : degree)
    if (d > 2)
      return false;

  // Union-find over vertices; a component is a cycle iff it has as many
  // edges as vertices (all degrees 2).
  std::map<int, int> parent;
  for (auto [v, d] : degree)
    parent[v] = v;
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<int, int> comp_vertices, comp_edges;
  for (const auto &e : s.edges)
    parent[find(e.u)] = find(e.v);
  for (auto [v, d] : degree)
    ++comp_vertices[find(v)];
  for (const auto &e : s.edges)
    ++comp_edges[find(e.u)];

  int cycles = 0;
  for (auto [root, nv] : comp_vertices)
    if (comp_edges[root] >= nv)
      ++cycles;
  if (cycles == 0)
    return true;
  return cycles == 1 && comp_vertices.size() == 1;
}

bool is_automorphism(const Graph &g, const Permutation &p) {
  if (p.degree() != g.vertex_count())
    return false;
  for (const auto &e : g.edges())
    if (!g.has_edge(p(e)))
      return false;
  return true;
}

void require_acts_on(const Graph &g, const PermGroup &group) {
  if (group.degree() != g.vertex_count())
    throw DomainError("degree_mismatch", "group degree differs from vertex count");
  for (const auto &x : group.generators())
    if (!is_automorphism(g, x))
      throw DomainError("not_an_automorphism", "generator does not preserve the graph",
                        x.to_cycle_string());
}

} // namespace tsg
