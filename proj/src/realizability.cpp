#include "tsg/realizability.hpp"

#include <algorithm>
#include <numeric>

#include "tsg/error.hpp"
#include "tsg/standard_groups.hpp"

namespace tsg {

namespace {

void require_n(int n) {
  if (n <= 6)
    throw DomainError("n_too_small", "the automorphism conditions need n > 6");
}

std::string describe(const CycleType &ct) {
  std::string s;
  for (auto [len, count] : ct.counts)
    s += (s.empty() ? "" : ", ") + std::to_string(count) + " cycle(s) of order " + std::to_string(len);
  return (s.empty() ? "no cycles" : s) + ", " + std::to_string(ct.fixed_points) + " fixed";
}

bool only_length(const CycleType &ct, long long len) {
  return ct.counts.size() == 1 && ct.counts.begin()->first == len;
}

std::size_t orbit_size(const Permutation &p, int v) {
  std::size_t k = 1;
  for (int x = p(v); x != v; x = p(x))
    ++k;
  return k;
}

std::set<int> cyclic_orbit(const Permutation &p, int v) {
  std::set<int> out{v};
  for (int x = p(v); x != v; x = p(x))
    out.insert(x);
  return out;
}

void assert_free(const PermGroup &g, const Edge &e) {
  auto stab = edge_pointwise_stabilizer(g, e);
  if (!stab.is_trivial())
    throw VerificationFailure("stabilizer_nontrivial",
                              "witness edge " + to_string(e) + " is fixed pointwise by a non-identity element",
                              stab.elements()[1].to_cycle_string());
}

} // namespace

RealizabilityVerdict check_automorphism(int n, const Permutation &p) {
  require_n(n);
  if (p.degree() != n)
    throw DomainError("degree_mismatch", "permutation degree differs from n");
  RealizabilityVerdict v;
  v.cycles = cycle_type(p);
  v.m = v.cycles.order();
  const long long m = v.m;
  const int fixed = v.cycles.fixed_points;
  if (p.is_identity()) {
    v.realizable = true;
    v.identity = true;
    v.condition = 0;
    return v;
  }
  const std::string seen = describe(v.cycles);

  auto matched = [&](int c) {
    v.realizable = true;
    v.condition = c;
    return v;
  };

  // (1) m even, m > 2, all cycles of order m, no fixed vertices
  if (m % 2 != 0 || m <= 2)
    v.failures[1] = "m is not even and greater than 2";
  else if (!only_length(v.cycles, m))
    v.failures[1] = "not all cycles have order m (" + seen + ")";
  else if (fixed != 0)
    v.failures[1] = "fixes " + std::to_string(fixed) + " vertices";
  else
    return matched(1);

  // (2) m = 2, all cycles of order two, at most two fixed vertices
  if (m != 2)
    v.failures[2] = "m is not 2";
  else if (fixed > 2)
    v.failures[2] = "fixes " + std::to_string(fixed) + " > 2 vertices";
  else
    return matched(2);

  // (3) m odd, all cycles of order m, at most three fixed vertices
  if (m % 2 == 0)
    v.failures[3] = "m is even";
  else if (!only_length(v.cycles, m))
    v.failures[3] = "not all cycles have order m (" + seen + ")";
  else if (fixed > 3)
    v.failures[3] = "fixes " + std::to_string(fixed) + " > 3 vertices";
  else
    return matched(3);

  // (4) m an odd multiple of 3, all cycles of order m except one of
  // order 3, no fixed vertices
  auto count = [&](long long len) {
    auto it = v.cycles.counts.find(len);
    return it == v.cycles.counts.end() ? 0 : it->second;
  };
  if (m % 2 == 0 || m % 3 != 0 || m == 3)
    v.failures[4] = m == 3 ? "m = 3 leaves no room for an exceptional 3-cycle"
                           : "m is not an odd multiple of 3";
  else if (v.cycles.counts.size() != 2 || count(3) != 1 || count(m) < 1)
    v.failures[4] = "cycle orders are not m plus a single 3 (" + seen + ")";
  else if (fixed != 0)
    v.failures[4] = "fixes " + std::to_string(fixed) + " vertices";
  else
    return matched(4);

  return v;
}

ShapeResult check_group_realizable_shape(const PermGroup &h, std::size_t guard) {
  if (h.order() > guard)
    throw DomainError("guard_exceeded", "group order exceeds the guard");
  const auto N = h.order();
  const CayleyTable table(h);
  ShapeResult out;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (static_cast<std::size_t>(table.element_order(i)) == N) {
      out.realizable_shape = true;
      out.kind = "cyclic";
      out.k = static_cast<int>(N);
      return out;
    }
  if (N % 2 == 0 && N >= 4 && isomorphic(h, dihedral_group(static_cast<int>(N / 2)), guard)) {
    out.realizable_shape = true;
    out.kind = "dihedral";
    out.k = static_cast<int>(N / 2);
    return out;
  }

  // Known families; parameters are odd and at least 3.
  const auto fp = fingerprint(h);
  auto try_family = [&](Family f, int r, int s) {
    if (family_order(f, r, s) != N)
      return false;
    auto ref = reference_group(f, r, s);
    if (fingerprint(ref) != fp || !isomorphic(ref, h, guard))
      return false;
    out.realizable_shape = true;
    out.kind = "dihedral_product_subgroup";
    out.family = f;
    out.r = r;
    out.s = s;
    out.m = s == 0 ? r : std::lcm(r, s);
    return true;
  };
  for (Family f : kAllFamilies) {
    const int params = family_parameter_count(f);
    if (params == 0)
      continue;
    // D_r x Z_s is the only family not symmetric in r and s
    const bool ordered = f == Family::dr_x_zs;
    for (int r = 3; family_order(f, r, params == 2 ? 3 : 0) <= N; r += 2) {
      if (params == 1) {
        if (try_family(f, r, 0))
          return out;
        continue;
      }
      for (int s = ordered ? 3 : r; family_order(f, r, s) <= N; s += 2)
        if (try_family(f, r, s))
          return out;
    }
  }

  struct Named {
    const char *name;
    PermGroup group;
  };
  for (auto &[name, group] : {Named{"A4", alternating_group(4)}, Named{"S4", symmetric_group(4)},
                              Named{"A5", alternating_group(5)}})
    if (group.order() == N && isomorphic(group, h, guard)) {
      out.realizable_shape = true;
      out.kind = name;
      return out;
    }
  return out;
}

HypothesisResult subgroup_theorem_hypothesis(const PermGroup &g, const PermGroup &h,
                                             const Graph &graph, const std::vector<Edge> &edges) {
  if (h.degree() != g.degree() || !h.is_subgroup_of(g))
    throw DomainError("not_subgroup", "h is not a subgroup of g");
  if (!is_three_connected(graph))
    throw DomainError("not_three_connected", "graph must be 3-connected");
  require_acts_on(graph, g);
  if (edges.empty())
    throw DomainError("no_edges", "at least one edge is required");
  std::vector<std::set<Edge>> orbits;
  for (const auto &e : edges) {
    if (!graph.has_edge(e))
      throw DomainError("invalid_edge", "edge is not in the graph", to_string(e));
    auto o = orbit(h, e);
    if (std::find(orbits.begin(), orbits.end(), o) != orbits.end())
      throw DomainError("duplicate_orbit", "two edges lie in the same h-orbit", to_string(e));
    orbits.push_back(std::move(o));
  }

  const Edge e1 = edges.front();
  for (const auto &phi : g.elements()) {
    if (phi.is_identity() || phi(e1.u) != e1.u || phi(e1.v) != e1.v)
      continue;
    bool keeps_orbits = true;
    for (const auto &o : orbits)
      for (const auto &f : o)
        if (!o.contains(phi(f))) {
          keeps_orbits = false;
          break;
        }
    if (keeps_orbits && embeds_in_circle(fixed_subgraph(graph, phi)))
      return {false, phi};
  }
  return {true, std::nullopt};
}

std::optional<Edge> find_free_edge(const PermGroup &g, const Graph &graph) {
  if (g.degree() != graph.vertex_count())
    throw DomainError("degree_mismatch", "group degree differs from vertex count");
  for (const auto &e : graph.edges()) {
    bool free = true;
    for (const auto &p : g.elements())
      if (!p.is_identity() && p(e.u) == e.u && p(e.v) == e.v) {
        free = false;
        break;
      }
    if (free)
      return e;
  }
  return std::nullopt;
}

WitnessEdge prop1_witness(int n, const Permutation &alpha, const std::optional<Permutation> &beta) {
  require_n(n);
  if (alpha.degree() != n || (beta && beta->degree() != n))
    throw DomainError("degree_mismatch", "generator degree differs from n");
  if (alpha.is_identity())
    throw DomainError("bad_generator", "alpha must be non-trivial");
  const long long m = alpha.order();
  std::vector<Permutation> gens{alpha};
  if (beta) {
    if (beta->order() != 2)
      throw DomainError("bad_generator", "beta must be an involution", beta->to_cycle_string());
    if (alpha * *beta != *beta * alpha.inverse())
      throw DomainError("relation_fails", "alpha beta != beta alpha^-1");
    gens.push_back(*beta);
  }
  auto group = PermGroup::generate(n, gens);

  WitnessEdge w{Edge{}, -1, "", group, {}};
  if (beta && m == 2) {
    const Permutation ab = alpha * *beta;
    for (int v = 0; v < n && w.vertex < 0; ++v) {
      std::set<int> four{v, alpha(v), (*beta)(v), ab(v)};
      if (four.size() == 4)
        w.vertex = v;
    }
    if (w.vertex < 0)
      throw DomainError("d2_search_exhausted",
                        "no vertex v with v, alpha(v), beta(v), alpha beta(v) distinct");
    w.branch = "d2";
  } else {
    for (int v = 0; v < n && w.vertex < 0; ++v)
      if (static_cast<long long>(orbit_size(alpha, v)) == m)
        w.vertex = v;
    if (w.vertex < 0)
      throw DomainError("no_m_cycle", "alpha has no cycle of length equal to its order");
    w.branch = beta ? "dihedral" : "cyclic";
  }
  w.edge = Edge(w.vertex, alpha(w.vertex));
  assert_free(group, w.edge);
  return w;
}

WitnessEdge prop2_witness(int n, const Permutation &alpha, const Permutation &beta,
                          const std::vector<Permutation> &extra) {
  require_n(n);
  if (alpha.degree() != n || beta.degree() != n)
    throw DomainError("degree_mismatch", "generator degree differs from n");
  for (const auto &x : extra)
    if (x.degree() != n)
      throw DomainError("degree_mismatch", "generator degree differs from n");
  const long long r = alpha.order(), s = beta.order();
  if (r < 3 || r % 2 == 0 || s < 3 || s % 2 == 0)
    throw DomainError("bad_generator", "alpha and beta need odd orders >= 3");
  if (alpha * beta != beta * alpha)
    throw DomainError("relation_fails", "alpha and beta do not commute");
  const auto a_group = PermGroup::generate(n, {alpha});
  for (auto x = beta; !x.is_identity(); x = x * beta)
    if (a_group.contains(x))
      throw DomainError("intersection_nontrivial", "<alpha> and <beta> share a non-identity element",
                        x.to_cycle_string());

  std::vector<Permutation> gens{alpha, beta};
  gens.insert(gens.end(), extra.begin(), extra.end());
  auto group = PermGroup::generate(n, gens);
  const auto base = PermGroup::generate(n, {alpha, beta});
  const auto rs = static_cast<std::size_t>(r * s);

  WitnessEdge w{Edge{}, -1, "", group, {}};
  if (r == 3 && s == 3)
    w.notes.push_back("r = s = 3: vertex found by exhaustive search over all vertices");
  if (group.order() == rs) {
    w.branch = "ZrxZs";
  } else if (group.order() == 2 * rs) {
    // The extra involution inverts both factors (semidirect) or only one.
    w.branch = "DrxZs";
    for (const auto &t : group.elements())
      if (!base.contains(t) && t * alpha * t.inverse() == alpha.inverse() &&
          t * beta * t.inverse() == beta.inverse())
        w.branch = "SemidirectZrZsZ2";
  } else if (group.order() == 4 * rs) {
    w.branch = "DrxDs";
  } else {
    throw DomainError("unsupported_shape", "group order is not rs, 2rs or 4rs");
  }

  for (int v = 0; v < n && w.vertex < 0; ++v) {
    if (static_cast<long long>(orbit_size(alpha, v)) != r ||
        static_cast<long long>(orbit_size(beta, v)) != s)
      continue;
    auto oa = cyclic_orbit(alpha, v), ob = cyclic_orbit(beta, v);
    std::vector<int> common;
    std::set_intersection(oa.begin(), oa.end(), ob.begin(), ob.end(), std::back_inserter(common));
    if (common.size() == 1)
      w.vertex = v;
  }
  if (w.vertex < 0)
    throw DomainError("no_vertex",
                      "no vertex lies in an r-cycle of alpha and an s-cycle of beta meeting only there");
  w.edge = Edge(w.vertex, (alpha * beta)(w.vertex));
  assert_free(group, w.edge);
  return w;
}

namespace {

std::vector<KnotPick> choose_knots(const PermGroup &h, const std::vector<Edge> &edges,
                                   const std::vector<PrimeKnot> &alphabet) {
  std::vector<PrimeKnot> non_inv, inv;
  for (const auto &k : alphabet)
    (k.invertible ? inv : non_inv).push_back(k);
  std::size_t a = 0, b = 0;
  std::vector<KnotPick> picks;
  for (const auto &e : edges) {
    if (inverted_by(h, e)) {
      if (b == inv.size())
        throw DomainError("alphabet_exhausted", "not enough invertible knots");
      picks.push_back({e, inv[b++]});
    } else {
      if (a == non_inv.size())
        throw DomainError("alphabet_exhausted", "not enough non-invertible knots");
      picks.push_back({e, non_inv[a++]});
    }
  }
  return picks;
}

} // namespace

Certificate realize_subgroup(const PermGroup &g, const PermGroup &h, const Graph &graph,
                             const std::vector<PrimeKnot> &alphabet, const RealizeOptions &opts) {
  if (h.degree() != g.degree() || !h.is_subgroup_of(g))
    throw DomainError("not_subgroup", "target is not a subgroup of the ambient group");
  const LabeledEmbedding base(graph, g);
  const auto knots = alphabet.empty() ? default_alphabet(opts.max_edges, opts.max_edges) : alphabet;

  auto build = [&](const std::vector<Edge> &edges, std::string route) {
    auto picks = choose_knots(h, edges, knots);
    auto emb = add_knots(base, h, picks);
    auto refined = refine(emb, opts.exec);
    Certificate c{g, h, {}, emb, refined, refined == h, std::move(route), {kAmbientNote}, {}, {}};
    for (const auto &p : picks)
      c.edges.push_back({p.edge, p.knot, orbit(h, p.edge)});
    for (const auto &p : refined.elements())
      if (!h.contains(p)) {
        c.offending.push_back(p);
        if (!embeds_in_circle(fixed_subgraph(graph, p)))
          c.smith_contradictions.push_back(p);
      }
    return c;
  };

  if (auto e = find_free_edge(g, graph)) {
    auto c = build({*e}, "free_edge");
    c.notes.push_back("edge " + to_string(*e) + " is fixed pointwise by no non-trivial element");
    return c;
  }

  // No free edge: bounded search over edge sets satisfying the hypothesis.
  const std::vector<Edge> all(graph.edges().begin(), graph.edges().end());
  std::optional<Certificate> fallback;
  std::vector<std::size_t> idx;
  std::optional<Certificate> found;
  auto rec = [&](auto &&self, std::size_t start, int left) -> void {
    if (found)
      return;
    if (left == 0) {
      std::vector<Edge> edges;
      for (auto i : idx)
        edges.push_back(all[i]);
      HypothesisResult hyp;
      try {
        hyp = subgroup_theorem_hypothesis(g, h, graph, edges);
      } catch (const DomainError &err) {
        if (err.code() == "duplicate_orbit")
          return;
        throw;
      }
      if (!hyp.holds)
        return;
      auto c = build(edges, "edge_set");
      if (c.verified)
        found = std::move(c);
      else if (!fallback)
        fallback = std::move(c);
      return;
    }
    for (std::size_t i = start; i < all.size() && !found; ++i) {
      idx.push_back(i);
      self(self, i + 1, left - 1);
      idx.pop_back();
    }
  };
  for (int k = 1; k <= opts.max_edges && !found; ++k)
    rec(rec, 0, k);

  if (found) {
    found->notes.push_back("no free edge; used a set of " + std::to_string(found->edges.size()) +
                           " edges satisfying the subgroup hypothesis");
    return *found;
  }
  if (fallback) {
    fallback->notes.push_back("refined group is larger than the target; surviving elements listed");
    return *fallback;
  }
  throw DomainError("no_witness", "no edge set of size <= " + std::to_string(opts.max_edges) +
                                      " satisfies the subgroup hypothesis");
}

} // namespace tsg
