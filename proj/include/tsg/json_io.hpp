#pragma once

// JSON encodings shared by the CLI and its tests. Points are 1-indexed on
// the wire. Objects are nlohmann::json, whose std::map storage gives sorted
// keys and therefore byte-stable dumps.

#include <string>
#include <vector>

#include <json.hpp>

#include "tsg/dihedral_products.hpp"
#include "tsg/graph.hpp"
#include "tsg/knot_labels.hpp"
#include "tsg/realizability.hpp"

namespace tsg {

using nlohmann::json;

/// One-line image array, e.g. (1 2 3) on 4 points is [2,3,1,4].
json perm_to_json(const Permutation &p);
/// Accepts an image array or a cycle string. Throws DomainError
/// "bad_json" / the parse_cycles codes.
Permutation perm_from_json(const json &j, int n);

/// Generators separated by ';'. Blank entries are skipped, so "" is the
/// trivial group.
std::vector<Permutation> parse_generator_list(const std::string &s, int n);
/// String (as above) or array of cycle strings / image arrays.
std::vector<Permutation> generators_from_json(const json &j, int n);

/// {degree, generators:[cycle strings], order}.
json group_to_json(const PermGroup &g);
PermGroup group_from_json(const json &j);

json edge_to_json(const Edge &e);
Edge edge_from_json(const json &j);
/// "u,v" with 1-indexed points.
Edge parse_edge(const std::string &s);

/// {n, edges:[[u,v], ...]}.
json graph_to_json(const Graph &g);
Graph graph_from_json(const json &j);
/// "K7", "K_7" or JSON graph text.
Graph parse_graph_arg(const std::string &s);

json knot_label_to_json(const KnotLabel &label);
KnotLabel knot_label_from_json(const json &j);

/// {graph, base_group, labels:[{edge, factors, orientation?}]}, plus
/// "connectivity":"unchecked" when the 3-connectivity check was skipped.
json embedding_to_json(const LabeledEmbedding &emb);
LabeledEmbedding embedding_from_json(const json &j);

json verdict_to_json(int n, const Permutation &p, const RealizabilityVerdict &v);
json shape_to_json(const ShapeResult &s);
json classification_to_json(const GroupClassification &c);
json report_to_json(const ClassificationReport &r);
json hypothesis_to_json(const HypothesisResult &h);
json witness_to_json(const WitnessEdge &w);
/// {ambient, target, edges:[{edge, knot, invertible, orbit}], verified,
/// refine_order, notes, route, embedding, offending, smith_contradictions}.
json certificate_to_json(const Certificate &c);

/// Re-derives everything a certificate claims from its own JSON: the
/// target is a subgroup of the ambient group, the embedding's base group is
/// the ambient group, the labels are the listed knots on the listed orbits,
/// and refine(embedding) has refine_order elements, equal to the target iff
/// verified. Throws VerificationFailure "bad_certificate".
void validate_certificate_json(const json &j);

json error_to_json(const std::string &code, const std::string &message,
                   const std::optional<std::string> &witness);

} // namespace tsg
