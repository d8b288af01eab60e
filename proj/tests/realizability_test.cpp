#include <gtest/gtest.h>

#include <numeric>

#include "automorphism_instances.hpp"
#include "test_support.hpp"
#include "tsg/error.hpp"
#include "tsg/realizability.hpp"
#include "tsg/standard_groups.hpp"

using namespace tsg;
using tsg::testing::G;
using tsg::testing::P;

namespace {

Edge E(int u, int v) { return Edge(u - 1, v - 1); }

std::string error_code(auto &&fn) {
  try {
    fn();
  } catch (const DomainError &e) {
    return e.code();
  }
  return "";
}

// Independent evaluation of the four conditions from raw cycle lengths.
int oracle_condition(const Permutation &p) {
  const int n = p.degree();
  std::vector<int> lens;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int fixed = 0;
  for (int x = 0; x < n; ++x) {
    if (seen[static_cast<std::size_t>(x)])
      continue;
    int len = 0;
    for (int y = x; !seen[static_cast<std::size_t>(y)]; y = p(y)) {
      seen[static_cast<std::size_t>(y)] = 1;
      ++len;
    }
    if (len == 1)
      ++fixed;
    else
      lens.push_back(len);
  }
  if (lens.empty())
    return 0;
  long long m = 1;
  for (int l : lens)
    m = std::lcm(m, static_cast<long long>(l));
  auto all_m = std::all_of(lens.begin(), lens.end(), [&](int l) { return l == m; });
  if (m % 2 == 0 && m > 2 && all_m && fixed == 0)
    return 1;
  if (m == 2 && fixed <= 2)
    return 2;
  if (m % 2 == 1 && all_m && fixed <= 3)
    return 3;
  if (m % 2 == 1 && m % 3 == 0 && m > 3 && fixed == 0) {
    int threes = 0, ms = 0, other = 0;
    for (int l : lens)
      ++(l == 3 ? threes : l == m ? ms : other);
    if (threes == 1 && ms >= 1 && other == 0)
      return 4;
  }
  return -1;
}

// Representative permutation with the given cycle lengths laid out
// consecutively.
Permutation from_partition(int n, const std::vector<int> &parts) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  int at = 0;
  for (int len : parts) {
    for (int i = 0; i < len; ++i)
      img[static_cast<std::size_t>(at + i)] = at + (i + 1) % len;
    at += len;
  }
  return Permutation(std::move(img));
}

void partitions(int n, int max_part, std::vector<int> &cur, std::vector<std::vector<int>> &out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

int verdict_code(const RealizabilityVerdict &v) { return v.condition ? *v.condition : -1; }

// Z3 x Z3 on K_9 and its extensions.
const char *kAlpha = "(1 2 3)(4 5 6)(7 8 9)";
const char *kBeta = "(1 4 7)(2 5 8)(3 6 9)";
const char *kGamma = "(2 3)(5 6)(8 9)";
const char *kDelta = "(4 7)(5 8)(6 9)";
const char *kMu = "(2 3)(4 7)(5 9)(6 8)";

} // namespace

TEST(CheckAutomorphism, Examples) {
  auto v = check_automorphism(7, P("(1 2 3 4 5 6 7)", 7));
  EXPECT_TRUE(v.realizable);
  EXPECT_EQ(v.condition, 3);
  EXPECT_EQ(v.m, 7);

  v = check_automorphism(7, P("(1 2)(3 4)", 7));
  EXPECT_FALSE(v.realizable);
  EXPECT_FALSE(v.condition.has_value());
  EXPECT_EQ(v.failures.size(), 4u);
  EXPECT_NE(v.failures.at(2).find("3 > 2"), std::string::npos);

  v = check_automorphism(12, P("(1 2 3 4 5 6 7 8 9)(10 11 12)", 12));
  EXPECT_EQ(v.condition, 4);
  EXPECT_EQ(v.m, 9);

  v = check_automorphism(9, P("(1 2 3)(4 5 6 7 8 9)", 9));
  EXPECT_FALSE(v.realizable);

  EXPECT_EQ(error_code([] { check_automorphism(6, P("(1 2)", 6)); }), "n_too_small");
  EXPECT_EQ(error_code([] { check_automorphism(8, P("(1 2)", 7)); }), "degree_mismatch");
}

TEST(CheckAutomorphism, IdentityIsConditionZero) {
  auto v = check_automorphism(9, Permutation::identity(9));
  EXPECT_TRUE(v.realizable);
  EXPECT_TRUE(v.identity);
  EXPECT_EQ(v.condition, 0);
}

TEST(CheckAutomorphism, InstanceSuite) {
  std::map<int, std::pair<int, int>> per_condition; // positives, negatives
  for (const auto &inst : tsg::testing::automorphism_instances()) {
    auto p = P(inst.cycles, inst.n);
    auto v = check_automorphism(inst.n, p);
    EXPECT_EQ(verdict_code(v), inst.expected) << inst.n << " " << inst.cycles;
    EXPECT_EQ(oracle_condition(p), inst.expected) << inst.n << " " << inst.cycles;
    EXPECT_EQ(v.realizable, inst.expected > 0);
    EXPECT_GE(inst.n, 7);
    EXPECT_LE(inst.n, 12);
    auto &[pos, neg] = per_condition[inst.group];
    ++(inst.expected > 0 ? pos : neg);
  }
  for (int c = 1; c <= 4; ++c) {
    EXPECT_GE(per_condition[c].first, 3) << c;
    EXPECT_GE(per_condition[c].second, 3) << c;
  }
}

TEST(CheckAutomorphism, EveryCycleTypeMatchesOracle) {
  for (int n = 7; n <= 12; ++n) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(n, n, cur, parts);
    for (const auto &pt : parts) {
      auto p = from_partition(n, pt);
      auto v = check_automorphism(n, p);
      ASSERT_EQ(verdict_code(v), oracle_condition(p)) << n << " " << p.to_cycle_string();
      ASSERT_EQ(v.cycles, cycle_type(p));
    }
  }
}

TEST(CheckAutomorphism, FourFixedPointsBoundary) {
  // Odd-order permutations with all cycles of order m: realizable exactly
  // when at most three points are fixed.
  int checked = 0;
  for (int n = 7; n <= 12; ++n)
    for (int m = 3; m <= n; m += 2)
      for (int k = 1; k * m <= n; ++k) {
        const int fixed = n - k * m;
        auto v = check_automorphism(n, from_partition(n, std::vector<int>(static_cast<std::size_t>(k), m)));
        EXPECT_EQ(v.realizable, fixed <= 3) << n << " " << m << " " << k;
        if (fixed >= 4)
          ++checked;
      }
  EXPECT_GT(checked, 10);
}

TEST(CheckAutomorphism, FixedVertexReductionOnCompleteGraphs) {
  // Fixed subgraph of K_n is K_f; it embeds in a circle iff f <= 3.
  for (int n = 4; n <= 9; ++n) {
    auto kn = complete_graph(n);
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(n, n, cur, parts);
    for (const auto &pt : parts) {
      auto p = from_partition(n, pt);
      EXPECT_EQ(embeds_in_circle(fixed_subgraph(kn, p)), cycle_type(p).fixed_points <= 3);
    }
  }
}

TEST(Shape, Examples) {
  auto z6 = check_group_realizable_shape(cyclic_group(6));
  EXPECT_EQ(z6.kind, "cyclic");
  EXPECT_EQ(z6.k, 6);

  auto z3z3 = check_group_realizable_shape(G(9, {kAlpha, kBeta}));
  EXPECT_TRUE(z3z3.realizable_shape);
  EXPECT_EQ(z3z3.kind, "dihedral_product_subgroup");
  EXPECT_EQ(z3z3.family, Family::zr_x_zs);
  EXPECT_EQ(z3z3.r, 3);
  EXPECT_EQ(z3z3.s, 3);

  auto z2cubed = check_group_realizable_shape(G(6, {"(1 2)", "(3 4)", "(5 6)"}));
  EXPECT_FALSE(z2cubed.realizable_shape);
  EXPECT_EQ(z2cubed.kind, "none");

  EXPECT_EQ(check_group_realizable_shape(dihedral_group(5)).kind, "dihedral");
  EXPECT_EQ(check_group_realizable_shape(dihedral_group(2)).kind, "dihedral");
  EXPECT_EQ(check_group_realizable_shape(PermGroup::trivial(3)).kind, "cyclic");
  EXPECT_EQ(check_group_realizable_shape(alternating_group(4)).kind, "A4");
  EXPECT_EQ(check_group_realizable_shape(symmetric_group(4)).kind, "S4");
  EXPECT_EQ(check_group_realizable_shape(alternating_group(5)).kind, "A5");

  auto semi = check_group_realizable_shape(G(9, {kAlpha, kBeta, kMu}));
  EXPECT_EQ(semi.family, Family::semidirect_zr_zs_z2);

  auto d3z3 = check_group_realizable_shape(direct_product(dihedral_group(3), cyclic_group(3)));
  EXPECT_EQ(d3z3.family, Family::dr_x_zs);

  auto d3d5 = check_group_realizable_shape(direct_product(dihedral_group(3), dihedral_group(5)));
  EXPECT_EQ(d3d5.family, Family::dr_x_ds);
  EXPECT_EQ(d3d5.m, 15);

  // Q_8 is neither cyclic, dihedral nor in any family
  auto q8 = G(8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"});
  ASSERT_EQ(q8.order(), 8u);
  EXPECT_FALSE(check_group_realizable_shape(q8).realizable_shape);
  EXPECT_FALSE(check_group_realizable_shape(symmetric_group(5)).realizable_shape);
}

TEST(Hypothesis, Examples) {
  auto k7 = complete_graph(7);
  auto z7 = cyclic_group(7);
  auto r = subgroup_theorem_hypothesis(z7, PermGroup::trivial(7), k7, {E(1, 2)});
  EXPECT_TRUE(r.holds);

  auto k4 = complete_graph(4);
  auto g = G(4, {"(3 4)"});
  r = subgroup_theorem_hypothesis(g, PermGroup::trivial(4), k4, {E(1, 2)});
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, P("(3 4)", 4));

  // a second edge moved by (3 4) rules it out
  EXPECT_TRUE(subgroup_theorem_hypothesis(g, PermGroup::trivial(4), k4, {E(1, 2), E(1, 3)}).holds);

  EXPECT_EQ(error_code([&] { subgroup_theorem_hypothesis(z7, z7, k7, {E(1, 2), E(2, 3)}); }),
            "duplicate_orbit");
  EXPECT_EQ(error_code([&] { subgroup_theorem_hypothesis(z7, z7, k7, {}); }), "no_edges");
  EXPECT_EQ(error_code([&] { subgroup_theorem_hypothesis(z7, dihedral_group(7), k7, {E(1, 2)}); }),
            "not_subgroup");
  auto c5 = Graph(5, {E(1, 2), E(2, 3), E(3, 4), E(4, 5), E(1, 5)});
  EXPECT_EQ(error_code([&] {
              subgroup_theorem_hypothesis(PermGroup::trivial(5), PermGroup::trivial(5), c5, {E(1, 2)});
            }),
            "not_three_connected");
}

TEST(FreeEdge, Examples) {
  auto k7 = complete_graph(7);
  EXPECT_EQ(find_free_edge(cyclic_group(7), k7), E(1, 2));
  EXPECT_EQ(find_free_edge(G(7, {"(3 4)"}), k7), E(1, 3));
  EXPECT_FALSE(find_free_edge(symmetric_group(4), complete_graph(4)).has_value());
}

TEST(Prop1, CyclicAndDihedral) {
  auto w = prop1_witness(7, P("(1 2 3 4 5 6 7)", 7));
  EXPECT_EQ(w.branch, "cyclic");
  EXPECT_EQ(w.edge, E(1, 2));
  EXPECT_EQ(w.group.order(), 7u);

  w = prop1_witness(7, P("(1 2 3 4 5 6 7)", 7), P("(2 7)(3 6)(4 5)", 7));
  EXPECT_EQ(w.branch, "dihedral");
  EXPECT_EQ(w.group.order(), 14u);
  EXPECT_TRUE(edge_pointwise_stabilizer(w.group, w.edge).is_trivial());

  // alpha with a cycle shorter than its order: the witness uses an m-cycle
  w = prop1_witness(9, P("(1 2 3)(4 5 6 7 8 9)", 9));
  EXPECT_EQ(w.edge, E(4, 5));
}

TEST(Prop1, KleinFour) {
  // The commuting pair on K_7
  auto w = prop1_witness(7, P("(1 2)(3 4)(5 6)", 7), P("(1 3)(2 4)(5 6)", 7));
  EXPECT_EQ(w.branch, "d2");
  EXPECT_EQ(w.edge, E(1, 2));
  EXPECT_EQ(w.group.order(), 4u);

  // fixed-point-free pair on K_8
  w = prop1_witness(8, P("(1 2)(3 4)(5 6)(7 8)", 8), P("(1 3)(2 4)(5 7)(6 8)", 8));
  EXPECT_EQ(w.branch, "d2");
  EXPECT_TRUE(edge_pointwise_stabilizer(w.group, w.edge).is_trivial());

  // these two involutions do not commute
  EXPECT_EQ(error_code([] { prop1_witness(7, P("(1 2)(3 4)(5 6)", 7), P("(1 3)(2 4)(5 7)", 7)); }),
            "relation_fails");
}

TEST(Prop1, Errors) {
  EXPECT_EQ(error_code([] { prop1_witness(6, P("(1 2 3 4 5 6)", 6)); }), "n_too_small");
  EXPECT_EQ(error_code([] { prop1_witness(7, Permutation::identity(7)); }), "bad_generator");
  EXPECT_EQ(error_code([] { prop1_witness(7, P("(1 2 3 4 5 6 7)", 7), P("(1 2 3)", 7)); }),
            "bad_generator");
  EXPECT_EQ(error_code([] { prop1_witness(7, P("(1 2 3 4 5 6 7)", 7), P("(1 2)", 7)); }),
            "relation_fails");
  // order 6 from a 2-cycle and a 3-cycle: no 6-cycle to draw the edge from
  EXPECT_EQ(error_code([] { prop1_witness(7, P("(1 2)(3 4 5)", 7)); }), "no_m_cycle");
  // commuting involutions on only four points: every vertex outside
  // {1,2,3,4} is fixed by all of them, but 1 still works
  EXPECT_EQ(prop1_witness(7, P("(1 2)(3 4)", 7), P("(1 3)(2 4)", 7)).edge, E(1, 2));
  EXPECT_EQ(error_code([] { prop1_witness(7, P("(1 2)", 7), P("(3 4)", 7)); }),
            "d2_search_exhausted");
}

TEST(Prop2, Shapes) {
  auto alpha = P(kAlpha, 9), beta = P(kBeta, 9);
  // the extra generators act on alpha and beta as expected
  auto gamma = P(kGamma, 9), delta = P(kDelta, 9), mu = P(kMu, 9);
  EXPECT_EQ(gamma * alpha * gamma, alpha.inverse());
  EXPECT_EQ(gamma * beta * gamma, beta);
  EXPECT_EQ(delta * alpha * delta, alpha);
  EXPECT_EQ(delta * beta * delta, beta.inverse());
  EXPECT_EQ(mu * alpha * mu, alpha.inverse());
  EXPECT_EQ(mu * beta * mu, beta.inverse());

  auto w = prop2_witness(9, alpha, beta);
  EXPECT_EQ(w.branch, "ZrxZs");
  EXPECT_EQ(w.notes.size(), 1u);
  EXPECT_EQ(w.edge, E(1, 5));
  EXPECT_EQ(w.group.order(), 9u);

  w = prop2_witness(9, alpha, beta, {gamma});
  EXPECT_EQ(w.branch, "DrxZs");
  EXPECT_EQ(w.group.order(), 18u);
  EXPECT_TRUE(isomorphic(w.group, direct_product(dihedral_group(3), cyclic_group(3))));

  w = prop2_witness(9, alpha, beta, {gamma, delta});
  EXPECT_EQ(w.branch, "DrxDs");
  EXPECT_EQ(w.group.order(), 36u);

  w = prop2_witness(9, alpha, beta, {mu});
  EXPECT_EQ(w.branch, "SemidirectZrZsZ2");
  EXPECT_EQ(w.group.order(), 18u);
  EXPECT_TRUE(edge_pointwise_stabilizer(w.group, w.edge).is_trivial());
}

TEST(Prop2, Errors) {
  auto alpha = P(kAlpha, 9);
  EXPECT_EQ(error_code([&] { prop2_witness(9, alpha, alpha); }), "intersection_nontrivial");
  EXPECT_EQ(error_code([&] { prop2_witness(9, alpha, alpha.inverse()); }), "intersection_nontrivial");
  EXPECT_EQ(error_code([&] { prop2_witness(9, alpha, P("(1 2)", 9)); }), "bad_generator");
  EXPECT_EQ(error_code([&] { prop2_witness(9, alpha, P("(1 4 7)", 9)); }), "relation_fails");
  EXPECT_EQ(error_code([&] { prop2_witness(9, alpha, P(kBeta, 9), {P("(1 2)", 9)}); }),
            "unsupported_shape");
  EXPECT_EQ(error_code([] { prop2_witness(6, P("(1 2 3)", 6), P("(4 5 6)", 6)); }), "n_too_small");
  // disjoint supports: no vertex moved by both
  EXPECT_EQ(error_code([] { prop2_witness(7, P("(1 2 3)", 7), P("(4 5 6)", 7)); }), "no_vertex");
}

namespace {

void expect_realizes_every_subgroup(const PermGroup &g, const Graph &graph) {
  for (const auto &h : enumerate_subgroups(g)) {
    auto c = realize_subgroup(g, h, graph);
    EXPECT_TRUE(c.verified) << "order " << h.order();
    EXPECT_EQ(c.refined, h);
    EXPECT_EQ(c.route, "free_edge");
    EXPECT_TRUE(c.offending.empty());
    ASSERT_FALSE(c.notes.empty());
    EXPECT_EQ(c.notes.front(), kAmbientNote);
    for (const auto &ce : c.edges) {
      EXPECT_EQ(ce.knot.invertible, inverted_by(h, ce.edge));
      EXPECT_EQ(ce.orbit, orbit(h, ce.edge));
    }
  }
}

} // namespace

TEST(Realize, EverySubgroupOnK7) {
  expect_realizes_every_subgroup(cyclic_group(7), complete_graph(7));
  expect_realizes_every_subgroup(dihedral_group(7), complete_graph(7));
}

TEST(Realize, EverySubgroupOnK9) {
  expect_realizes_every_subgroup(G(9, {kAlpha, kBeta}), complete_graph(9));
  expect_realizes_every_subgroup(G(9, {kAlpha, kBeta, kMu}), complete_graph(9));
}

TEST(Realize, EverySubgroupOnK8) {
  expect_realizes_every_subgroup(cyclic_group(8), complete_graph(8));
  expect_realizes_every_subgroup(dihedral_group(8), complete_graph(8));
  expect_realizes_every_subgroup(G(8, {"(1 2 3)(4 5 6)"}), complete_graph(8));
}

TEST(Realize, InvertedOrbitGetsInvertibleKnot) {
  auto g = dihedral_group(7);
  auto h = G(7, {"(1 2)(3 7)(4 6)"});
  ASSERT_TRUE(h.is_subgroup_of(g));
  auto c = realize_subgroup(g, h, complete_graph(7));
  EXPECT_TRUE(c.verified);
  ASSERT_EQ(c.edges.size(), 1u);
  EXPECT_EQ(c.edges[0].edge, E(1, 2));
  EXPECT_TRUE(c.edges[0].knot.invertible);
}

TEST(Realize, WithoutFreeEdge) {
  auto g = symmetric_group(4);
  auto k4 = complete_graph(4);
  auto c = realize_subgroup(g, PermGroup::trivial(4), k4);
  EXPECT_EQ(c.route, "edge_set");
  EXPECT_TRUE(c.verified);
  EXPECT_GE(c.edges.size(), 2u);

  // whatever the search returns is honest about what survived
  for (const auto &h : enumerate_subgroups(g)) {
    std::optional<Certificate> found;
    try {
      found = realize_subgroup(g, h, k4);
    } catch (const DomainError &e) {
      EXPECT_EQ(e.code(), "no_witness");
      continue;
    }
    const auto &cert = *found;
    EXPECT_TRUE(h.is_subgroup_of(cert.refined));
    EXPECT_EQ(cert.verified, cert.offending.empty());
    EXPECT_TRUE(subgroup_theorem_hypothesis(g, h, k4, [&] {
                  std::vector<Edge> es;
                  for (const auto &ce : cert.edges)
                    es.push_back(ce.edge);
                  return es;
                }()).holds);
  }
}

TEST(Realize, Errors) {
  auto k7 = complete_graph(7);
  EXPECT_EQ(error_code([&] { realize_subgroup(cyclic_group(7), dihedral_group(7), k7); }),
            "not_subgroup");
  std::vector<PrimeKnot> only_invertible{{"3_1", true}};
  EXPECT_EQ(error_code([&] {
              realize_subgroup(cyclic_group(7), PermGroup::trivial(7), k7, only_invertible);
            }),
            "alphabet_exhausted");
}

TEST(Realize, SerialMatchesParallel) {
  auto g = dihedral_group(7);
  auto k7 = complete_graph(7);
  for (const auto &h : enumerate_subgroups(g)) {
    auto a = realize_subgroup(g, h, k7, {}, {3, Exec::serial});
    auto b = realize_subgroup(g, h, k7, {}, {3, Exec::parallel});
    EXPECT_EQ(a.refined, b.refined);
    EXPECT_EQ(a.edges.size(), b.edges.size());
  }
}
