#include "tsg/json_io.hpp"

#include <algorithm>
#include <cctype>

#include "tsg/error.hpp"
#include "tsg/standard_groups.hpp"

namespace tsg {

namespace {

[[noreturn]] void bad_json(const std::string &what) { throw DomainError("bad_json", what); }

const json &field(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    bad_json(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const json &j, const char *what) {
  if (!j.is_number_integer())
    bad_json(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos)
    return "";
  auto e = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(b, e - b + 1));
}

json cycle_strings(const std::vector<Permutation> &ps) {
  json out = json::array();
  for (const auto &p : ps)
    out.push_back(p.to_cycle_string());
  return out;
}

} // namespace

json perm_to_json(const Permutation &p) { return p.one_based_images(); }

Permutation perm_from_json(const json &j, int n) {
  if (j.is_string())
    return parse_cycles(j.get<std::string>(), n);
  if (!j.is_array())
    bad_json("permutation must be a cycle string or an image array");
  if (static_cast<int>(j.size()) != n)
    throw DomainError("degree_mismatch", "image array has " + std::to_string(j.size()) +
                                             " entries, expected " + std::to_string(n));
  std::vector<int> img;
  for (const auto &x : j)
    img.push_back(as_int(x, "image") - 1);
  return Permutation(std::move(img));
}

std::vector<Permutation> parse_generator_list(const std::string &s, int n) {
  std::vector<Permutation> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto end = s.find(';', start);
    if (end == std::string::npos)
      end = s.size();
    auto piece = trim(std::string_view(s).substr(start, end - start));
    if (!piece.empty())
      out.push_back(parse_cycles(piece, n));
    start = end + 1;
  }
  return out;
}

std::vector<Permutation> generators_from_json(const json &j, int n) {
  if (j.is_string())
    return parse_generator_list(j.get<std::string>(), n);
  if (!j.is_array())
    bad_json("generators must be a string or an array");
  std::vector<Permutation> out;
  for (const auto &g : j)
    out.push_back(perm_from_json(g, n));
  return out;
}

json group_to_json(const PermGroup &g) {
  return {{"degree", g.degree()}, {"generators", cycle_strings(g.generators())}, {"order", g.order()}};
}

PermGroup group_from_json(const json &j) {
  const int n = as_int(field(j, "degree"), "degree");
  auto g = PermGroup::generate(n, generators_from_json(field(j, "generators"), n));
  if (j.contains("order") && j.at("order") != g.order())
    throw VerificationFailure("order_mismatch", "stated order " + j.at("order").dump() +
                                                    " differs from the generated order " +
                                                    std::to_string(g.order()));
  return g;
}

json edge_to_json(const Edge &e) { return json::array({e.u + 1, e.v + 1}); }

Edge edge_from_json(const json &j) {
  if (!j.is_array() || j.size() != 2)
    bad_json("edge must be a pair [u,v]");
  const int u = as_int(j[0], "endpoint"), v = as_int(j[1], "endpoint");
  if (u == v)
    throw DomainError("invalid_edge", "edge endpoints coincide");
  return Edge(u - 1, v - 1);
}

Edge parse_edge(const std::string &s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw DomainError("bad_edge", "edge must be written u,v", s);
  try {
    return edge_from_json(json::array({std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))}));
  } catch (const std::logic_error &) {
    throw DomainError("bad_edge", "edge must be written u,v", s);
  }
}

json graph_to_json(const Graph &g) {
  json edges = json::array();
  for (const auto &e : g.edges())
    edges.push_back(edge_to_json(e));
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json &j) {
  const int n = as_int(field(j, "n"), "n");
  std::set<Edge> edges;
  for (const auto &e : field(j, "edges"))
    edges.insert(edge_from_json(e));
  return Graph(n, std::move(edges));
}

Graph parse_graph_arg(const std::string &s) {
  auto t = trim(s);
  if (!t.empty() && (t[0] == 'K' || t[0] == 'k')) {
    auto digits = t.substr(t.size() > 1 && t[1] == '_' ? 2 : 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw DomainError("bad_graph", "expected K<n> or a JSON graph", s);
    return complete_graph(std::stoi(digits));
  }
  json j;
  try {
    j = json::parse(t);
  } catch (const json::parse_error &) {
    throw DomainError("bad_graph", "expected K<n> or a JSON graph", s);
  }
  return graph_from_json(j);
}

json knot_label_to_json(const KnotLabel &label) {
  json out = json::array();
  for (const auto &f : label.factors())
    out.push_back({{"symbol", f.knot.symbol}, {"invertible", f.knot.invertible}, {"sign", f.sign}});
  return out;
}

KnotLabel knot_label_from_json(const json &j) {
  if (!j.is_array())
    bad_json("factors must be an array");
  std::vector<KnotFactor> fs;
  for (const auto &f : j) {
    KnotFactor kf;
    kf.knot.symbol = field(f, "symbol").get<std::string>();
    kf.knot.invertible = field(f, "invertible").get<bool>();
    kf.sign = f.contains("sign") ? as_int(f.at("sign"), "sign") : 1;
    fs.push_back(std::move(kf));
  }
  return KnotLabel(std::move(fs));
}

json embedding_to_json(const LabeledEmbedding &emb) {
  json labels = json::array();
  for (const auto &[e, label] : emb.labels()) {
    json entry{{"edge", edge_to_json(e)}, {"factors", knot_label_to_json(label)}};
    if (auto it = emb.orientations().find(e); it != emb.orientations().end())
      entry["orientation"] = json::array({it->second.first + 1, it->second.second + 1});
    labels.push_back(std::move(entry));
  }
  json out{{"graph", graph_to_json(emb.graph())},
           {"base_group", group_to_json(emb.base_group())},
           {"labels", labels}};
  if (emb.policy() == ConnectivityPolicy::unchecked)
    out["connectivity"] = "unchecked";
  return out;
}

LabeledEmbedding embedding_from_json(const json &j) {
  auto graph = graph_from_json(field(j, "graph"));
  auto base = group_from_json(field(j, "base_group"));
  std::map<Edge, KnotLabel> labels;
  std::map<Edge, Orientation> orientations;
  if (j.contains("labels"))
    for (const auto &entry : j.at("labels")) {
      const Edge e = edge_from_json(field(entry, "edge"));
      if (labels.contains(e))
        throw DomainError("duplicate_label", "edge labeled twice", to_string(e));
      labels[e] = knot_label_from_json(field(entry, "factors"));
      if (entry.contains("orientation")) {
        const auto &o = entry.at("orientation");
        if (!o.is_array() || o.size() != 2)
          bad_json("orientation must be [tail, head]");
        orientations[e] = {as_int(o[0], "tail") - 1, as_int(o[1], "head") - 1};
      }
    }
  auto policy = ConnectivityPolicy::require_three_connected;
  if (j.contains("connectivity")) {
    const auto c = j.at("connectivity").get<std::string>();
    if (c == "unchecked")
      policy = ConnectivityPolicy::unchecked;
    else if (c != "three_connected")
      bad_json("connectivity must be \"three_connected\" or \"unchecked\"");
  }
  return LabeledEmbedding(std::move(graph), std::move(base), std::move(labels),
                          std::move(orientations), policy);
}

json verdict_to_json(int n, const Permutation &p, const RealizabilityVerdict &v) {
  json counts = json::object();
  for (auto [len, count] : v.cycles.counts)
    counts[std::to_string(len)] = count;
  json failures = json::object();
  for (const auto &[c, why] : v.failures)
    failures[std::to_string(c)] = why;
  json out{{"n", n},
           {"perm", p.to_cycle_string()},
           {"realizable", v.realizable},
           {"identity", v.identity},
           {"m", v.m},
           {"cycle_type", {{"cycles", counts}, {"fixed_points", v.cycles.fixed_points}}},
           {"failures", failures}};
  if (v.condition)
    out["condition"] = *v.condition;
  return out;
}

json shape_to_json(const ShapeResult &s) {
  json out{{"realizable_shape", s.realizable_shape}, {"kind", s.kind}};
  if (s.kind == "cyclic" || s.kind == "dihedral")
    out["k"] = s.k;
  if (s.family) {
    out["family"] = family_tag(*s.family);
    out["r"] = s.r;
    out["s"] = s.s;
    out["m"] = s.m;
  }
  return out;
}

json classification_to_json(const GroupClassification &c) {
  json image = json::array();
  for (auto [a, b] : c.sigma_image)
    image.push_back(json::array({a, b}));
  return {{"family", family_tag(c.family)},
          {"r", c.r},
          {"s", c.s},
          {"order", c.order},
          {"swapped_factors", c.swapped_factors},
          {"proof_case", c.proof_case},
          {"kernel_rank", c.kernel_rank},
          {"kernel_order", c.kernel_order},
          {"sigma_image", image}};
}

json report_to_json(const ClassificationReport &r) {
  json mismatches = json::array();
  for (const auto &mm : r.mismatches)
    mismatches.push_back({{"index", mm.index},
                          {"subgroup", group_to_json(mm.subgroup)},
                          {"classification", classification_to_json(mm.classification)}});
  return {{"m", r.m},
          {"subgroup_count", r.subgroup_count},
          {"census", r.census},
          {"mismatches", mismatches},
          {"all_match", r.mismatches.empty()}};
}

json hypothesis_to_json(const HypothesisResult &h) {
  json out{{"holds", h.holds}};
  if (h.witness)
    out["witness"] = h.witness->to_cycle_string();
  return out;
}

json witness_to_json(const WitnessEdge &w) {
  return {{"edge", edge_to_json(w.edge)},
          {"vertex", w.vertex + 1},
          {"branch", w.branch},
          {"group", group_to_json(w.group)},
          {"notes", w.notes}};
}

json certificate_to_json(const Certificate &c) {
  json edges = json::array();
  for (const auto &ce : c.edges) {
    json orbit = json::array();
    for (const auto &e : ce.orbit)
      orbit.push_back(edge_to_json(e));
    edges.push_back({{"edge", edge_to_json(ce.edge)},
                     {"knot", ce.knot.symbol},
                     {"invertible", ce.knot.invertible},
                     {"orbit", orbit}});
  }
  return {{"ambient", group_to_json(c.ambient)},
          {"target", group_to_json(c.target)},
          {"edges", edges},
          {"verified", c.verified},
          {"refine_order", c.refined.order()},
          {"notes", c.notes},
          {"route", c.route},
          {"embedding", embedding_to_json(c.embedding)},
          {"offending", cycle_strings(c.offending)},
          {"smith_contradictions", cycle_strings(c.smith_contradictions)}};
}

void validate_certificate_json(const json &j) {
  auto fail = [](const std::string &why) -> void {
    throw VerificationFailure("bad_certificate", why);
  };
  const auto ambient = group_from_json(field(j, "ambient"));
  const auto target = group_from_json(field(j, "target"));
  if (target.degree() != ambient.degree() || !target.is_subgroup_of(ambient))
    fail("target is not a subgroup of the ambient group");
  const auto emb = embedding_from_json(field(j, "embedding"));
  if (!(emb.base_group() == ambient))
    fail("embedding base group differs from the ambient group");

  std::set<Edge> covered;
  for (const auto &entry : field(j, "edges")) {
    const Edge e = edge_from_json(field(entry, "edge"));
    const auto symbol = field(entry, "knot").get<std::string>();
    const bool inv = field(entry, "invertible").get<bool>();
    std::set<Edge> listed;
    for (const auto &f : field(entry, "orbit"))
      listed.insert(edge_from_json(f));
    if (listed != orbit(target, e))
      fail("orbit of " + to_string(e) + " does not match the target group");
    if (inv != inverted_by(target, e))
      fail("knot on " + to_string(e) + " has the wrong invertibility");
    for (const auto &f : listed) {
      if (!emb.canonical_label(f).mentions(symbol))
        fail("edge " + to_string(f) + " lacks knot " + symbol);
      covered.insert(f);
    }
  }
  for (const auto &[e, label] : emb.labels())
    if (!covered.contains(e))
      fail("edge " + to_string(e) + " is labeled but not in any listed orbit");

  const auto refined = refine(emb, Exec::serial);
  if (refined.order() != field(j, "refine_order").get<std::size_t>())
    fail("refine_order does not match the embedding");
  if (field(j, "verified").get<bool>() != (refined == target))
    fail("verified flag does not match refine == target");
  if (!target.is_subgroup_of(refined))
    fail("target is not contained in the refined group");
}

json error_to_json(const std::string &code, const std::string &message,
                   const std::optional<std::string> &witness) {
  json out{{"error", {{"code", code}, {"message", message}}}};
  if (witness)
    out["error"]["witness"] = *witness;
  return out;
}

} // namespace tsg
