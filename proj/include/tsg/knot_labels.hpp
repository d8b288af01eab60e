#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsg/exec.hpp"
#include "tsg/graph.hpp"
#include "tsg/perm_group.hpp"

namespace tsg {

/// A prime knot known only by name. Two knots are the same iff their
/// symbols agree.
struct PrimeKnot {
  std::string symbol;
  bool invertible = true;

  friend auto operator<=>(const PrimeKnot &, const PrimeKnot &) = default;
  friend bool operator==(const PrimeKnot &, const PrimeKnot &) = default;
};

/// One summand of a connected sum. `sign` is +1 or -1 relative to the
/// edge's orientation; always +1 for invertible knots.
struct KnotFactor {
  PrimeKnot knot;
  int sign = 1;

  friend auto operator<=>(const KnotFactor &, const KnotFactor &) = default;
  friend bool operator==(const KnotFactor &, const KnotFactor &) = default;
};

/// Connected sum of prime knots, as a sorted multiset of factors. Empty
/// means unknotted.
class KnotLabel {
public:
  KnotLabel() = default;
  /// Normalizes signs of invertible factors and sorts. Throws DomainError
  /// "bad_sign", "inconsistent_knot" (one symbol, two invertibility flags)
  /// or "mixed_orientation" (a non-invertible prime summed with its own
  /// reverse, which would make the label invertible).
  explicit KnotLabel(std::vector<KnotFactor> factors);

  const std::vector<KnotFactor> &factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  bool invertible() const;
  bool mentions(const std::string &symbol) const;
  /// Same knot with the edge direction reversed.
  KnotLabel reversed() const;
  KnotLabel plus(const KnotFactor &f) const;

  friend bool operator==(const KnotLabel &, const KnotLabel &) = default;

private:
  std::vector<KnotFactor> factors_;
};

std::string to_string(const KnotLabel &label);

enum class ConnectivityPolicy {
  require_three_connected,
  /// Skip the 3-connectivity check. Only for toy models such as a lone
  /// triangle; none of the realization machinery accepts it.
  unchecked,
};

using Orientation = std::pair<int, int>; // (tail, head), 0-indexed

/// Graph with a base symmetry group and knotted edges. Non-invertible labels
/// carry an orientation; factor signs are relative to it.
class LabeledEmbedding {
public:
  /// Validates everything: labeled edges exist, orientation present exactly
  /// for non-invertible labels and matching the edge, base_group acts on the
  /// graph, consistent knot symbols, and (by default) 3-connectivity.
  LabeledEmbedding(Graph graph, PermGroup base_group, std::map<Edge, KnotLabel> labels = {},
                   std::map<Edge, Orientation> orientations = {},
                   ConnectivityPolicy policy = ConnectivityPolicy::require_three_connected);

  const Graph &graph() const noexcept { return graph_; }
  const PermGroup &base_group() const noexcept { return base_; }
  const std::map<Edge, KnotLabel> &labels() const noexcept { return labels_; }
  const std::map<Edge, Orientation> &orientations() const noexcept { return orientations_; }
  ConnectivityPolicy policy() const noexcept { return policy_; }

  /// Label of e (empty if unlabeled) with signs taken relative to the
  /// direction e.u -> e.v.
  KnotLabel canonical_label(const Edge &e) const;
  bool uses_symbol(const std::string &symbol) const;

private:
  Graph graph_;
  PermGroup base_;
  std::map<Edge, KnotLabel> labels_;
  std::map<Edge, Orientation> orientations_;
  std::map<Edge, KnotLabel> canonical_;
  ConnectivityPolicy policy_;
};

/// p preserves every label, transporting orientations. Throws DomainError
/// "not_in_base_group".
bool admissible(const LabeledEmbedding &emb, const Permutation &p);

/// The subgroup of admissible base elements.
PermGroup refine(const LabeledEmbedding &emb, Exec exec = Exec::parallel);

/// Base elements that send a non-invertible-labeled edge to itself with its
/// ends swapped. The input is then inconsistent as a model of an embedding;
/// these are reported rather than silently dropped (refine excludes them
/// like any other inadmissible element).
std::vector<Permutation> inverting_base_elements(const LabeledEmbedding &emb);

/// Some element of h swaps the ends of e.
bool inverted_by(const PermGroup &h, const Edge &e);

struct KnotPick {
  Edge edge;
  PrimeKnot knot;
};

/// Adds knot K_i to every edge of the h-orbit of e_i. Orientations for
/// non-invertible K_i point from the smaller endpoint of e_i and are pushed
/// forward through h. Errors (DomainError): "h_not_admissible",
/// "invalid_edge", "duplicate_orbit", "knot_reuse",
/// "invertibility_mismatch".
LabeledEmbedding add_knots(const LabeledEmbedding &emb, const PermGroup &h,
                           const std::vector<KnotPick> &picks);

/// Non-invertible knots first, then invertible ones. The first few of each
/// kind carry knot-table names; past those the symbols are synthetic.
std::vector<PrimeKnot> default_alphabet(int non_invertible, int invertible);

} // namespace tsg
