#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tsg/dihedral_products.hpp"
#include "tsg/graph.hpp"
#include "tsg/knot_labels.hpp"
#include "tsg/perm_group.hpp"

namespace tsg {

/// Outcome of checking one automorphism of K_n against the four
/// realizability conditions. `condition` is 1..4 for the first matching
/// condition, 0 for the identity, and absent when not realizable.
struct RealizabilityVerdict {
  bool realizable = false;
  std::optional<int> condition;
  bool identity = false;
  long long m = 1;
  CycleType cycles;
  /// Why each condition fails, keyed by condition number (only the ones
  /// evaluated before a match).
  std::map<int, std::string> failures;
};

/// Throws DomainError "n_too_small" (n <= 6) or "degree_mismatch".
RealizabilityVerdict check_automorphism(int n, const Permutation &p);

struct ShapeResult {
  bool realizable_shape = false;
  /// "cyclic", "dihedral", "dihedral_product_subgroup", "A4", "S4", "A5" or
  /// "none".
  std::string kind = "none";
  /// For cyclic/dihedral: the k in Z_k / D_k.
  int k = 0;
  /// For dihedral_product_subgroup: the matching family and an odd m with
  /// the family inside D_m x D_m.
  std::optional<Family> family;
  int r = 0, s = 0, m = 0;
};

/// Whether h is abstractly one of the groups that can occur for complete
/// graphs. Throws DomainError "guard_exceeded".
ShapeResult check_group_realizable_shape(const PermGroup &h, std::size_t guard = kSubgroupGuard);

struct HypothesisResult {
  bool holds = false;
  std::optional<Permutation> witness;
};

/// Subgroup-theorem hypothesis: distinct h-orbits of the edges, and every
/// non-identity phi in g fixing edges[0] pointwise and each orbit setwise
/// fixes a subgraph that does not embed in the circle. Errors:
/// "not_subgroup", "not_three_connected", "no_edges", "invalid_edge",
/// "duplicate_orbit".
HypothesisResult subgroup_theorem_hypothesis(const PermGroup &g, const PermGroup &h,
                                             const Graph &graph, const std::vector<Edge> &edges);

/// Lexicographically first edge no non-trivial element of g fixes pointwise.
std::optional<Edge> find_free_edge(const PermGroup &g, const Graph &graph);

struct WitnessEdge {
  Edge edge;
  int vertex = 0;
  std::string branch;
  PermGroup group;
  std::vector<std::string> notes;
};

/// Free edge {v, alpha(v)} for <alpha> or <alpha, beta> (dihedral, beta an
/// involution with alpha beta = beta alpha^-1) on K_n. Errors:
/// "n_too_small", "bad_generator", "relation_fails", "no_m_cycle",
/// "d2_search_exhausted". The result's pointwise stabilizer is checked by
/// brute force (VerificationFailure "stabilizer_nontrivial").
WitnessEdge prop1_witness(int n, const Permutation &alpha,
                          const std::optional<Permutation> &beta = std::nullopt);

/// Free edge {v, alpha beta(v)} with <v>_alpha and <v>_beta meeting only in
/// v. `extra` holds the further generators (gamma, delta or mu). The branch
/// names the group shape: "ZrxZs", "DrxZs", "DrxDs" or "SemidirectZrZsZ2".
/// Errors: "n_too_small", "bad_generator", "relation_fails",
/// "intersection_nontrivial", "unsupported_shape", "no_vertex".
WitnessEdge prop2_witness(int n, const Permutation &alpha, const Permutation &beta,
                          const std::vector<Permutation> &extra = {});

struct CertificateEdge {
  Edge edge;
  PrimeKnot knot;
  std::set<Edge> orbit;
};

struct Certificate {
  PermGroup ambient;
  PermGroup target;
  std::vector<CertificateEdge> edges;
  LabeledEmbedding embedding;
  PermGroup refined;
  bool verified = false;
  /// "free_edge" or "edge_set".
  std::string route;
  std::vector<std::string> notes;
  /// Surviving elements outside the target. Those fixing a subgraph that
  /// does not embed in the circle are Smith-rule contradictions.
  std::vector<Permutation> offending;
  std::vector<Permutation> smith_contradictions;
};

struct RealizeOptions {
  int max_edges = 3;
  Exec exec = Exec::parallel;
};

/// Labels orbits of witness edges so that the refined group is h. Errors:
/// "not_subgroup", "not_three_connected", "alphabet_exhausted",
/// "no_witness" (no edge set within the bound satisfies the hypothesis).
Certificate realize_subgroup(const PermGroup &g, const PermGroup &h, const Graph &graph,
                             const std::vector<PrimeKnot> &alphabet = {},
                             const RealizeOptions &opts = {});

inline constexpr const char *kAmbientNote = "valid relative to the supplied ambient group";

} // namespace tsg
