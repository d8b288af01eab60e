#include "tsg/cli.hpp"

#include <functional>
#include <map>
#include <random>

#include "tsg/error.hpp"
#include "tsg/random_instances.hpp"
#include "tsg/standard_groups.hpp"

namespace tsg::cli {

namespace {

// Option access with usage errors for missing or malformed values.
class Args {
public:
  Args(const CommandSpec &spec, const json &raw) : spec_(spec), raw_(raw) {
    if (!raw_.is_object())
      throw UsageError("arguments must be a JSON object");
    for (const auto &[key, value] : raw_.items()) {
      bool known = key == "seed";
      for (const auto &o : spec_.options)
        known = known || o.name == key;
      if (!known)
        throw UsageError("unknown option '" + key + "' for " + spec_.name);
    }
    for (const auto &o : spec_.options)
      if (o.required && !has(o.name))
        throw UsageError("missing required option --" + o.name);
  }

  bool has(const std::string &key) const { return raw_.contains(key) && !raw_.at(key).is_null(); }

  const json &value(const std::string &key) const {
    if (!has(key))
      throw UsageError("missing required option --" + key);
    return raw_.at(key);
  }

  std::string str(const std::string &key, const std::string &fallback = "") const {
    if (!has(key))
      return fallback;
    const auto &v = raw_.at(key);
    return v.is_string() ? v.get<std::string>() : v.dump();
  }

  std::string required_str(const std::string &key) const {
    value(key);
    return str(key);
  }

  long long integer(const std::string &key) const {
    const auto &v = value(key);
    if (v.is_number_integer())
      return v.get<long long>();
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      std::size_t used = 0;
      try {
        long long x = std::stoll(s, &used);
        if (used == s.size())
          return x;
      } catch (const std::logic_error &) {
      }
    }
    throw UsageError("option --" + key + " must be an integer");
  }

  long long integer(const std::string &key, long long fallback) const {
    return has(key) ? integer(key) : fallback;
  }

  std::vector<Permutation> gens(const std::string &key, int n) const {
    return has(key) ? generators_from_json(raw_.at(key), n) : std::vector<Permutation>{};
  }

  Graph graph(const std::string &key) const {
    const auto &v = value(key);
    return v.is_string() ? parse_graph_arg(v.get<std::string>()) : graph_from_json(v);
  }

private:
  const CommandSpec &spec_;
  const json &raw_;
};

int degree_arg(const Args &a) {
  const auto n = a.integer("n");
  if (n < 1 || n > 64)
    throw DomainError("bad_parameter", "n must lie in 1..64");
  return static_cast<int>(n);
}

std::vector<PrimeKnot> parse_alphabet(const std::string &s) {
  // comma-separated "symbol:i" (invertible) or "symbol:n" (non-invertible)
  std::vector<PrimeKnot> out;
  std::size_t start = 0;
  while (start < s.size()) {
    auto end = s.find(',', start);
    if (end == std::string::npos)
      end = s.size();
    auto item = s.substr(start, end - start);
    auto colon = item.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 2 != item.size() ||
        (item.back() != 'i' && item.back() != 'n'))
      throw UsageError("alphabet entries look like 3_1:i or 8_17:n, got '" + item + "'");
    out.push_back({item.substr(0, colon), item.back() == 'i'});
    start = end + 1;
  }
  return out;
}

json cmd_check_automorphism(const Args &a) {
  const int n = degree_arg(a);
  auto p = parse_cycles(a.required_str("perm"), n);
  return verdict_to_json(n, p, check_automorphism(n, p));
}

json cmd_classify(const Args &a) {
  const auto m = a.integer("m");
  if (m < 3 || m % 2 == 0)
    throw DomainError("bad_parameter", "m must be odd and at least 3");
  auto dp = build_dihedral_product(static_cast<int>(m));
  auto g = PermGroup::generate(2 * dp.m, a.gens("gens", 2 * dp.m));
  auto c = classify_subgroup(dp, g);
  const bool oracle = isomorphic(reference_group(c.family, c.r, c.s), g);
  if (!oracle)
    throw VerificationFailure("classification_mismatch",
                              "subgroup is not isomorphic to its classified family",
                              family_tag(c.family));
  auto out = classification_to_json(c);
  out["m"] = dp.m;
  out["oracle_isomorphic"] = oracle;
  out["subgroup"] = group_to_json(g);
  return out;
}

json cmd_realize(const Args &a) {
  auto graph = a.graph("graph");
  const int n = graph.vertex_count();
  auto g = PermGroup::generate(n, a.gens("ambient-gens", n));
  auto h = PermGroup::generate(n, a.gens("target-gens", n));
  RealizeOptions opts;
  opts.max_edges = static_cast<int>(a.integer("max-edges", opts.max_edges));
  if (opts.max_edges < 1)
    throw UsageError("--max-edges must be positive");
  auto alphabet = a.has("alphabet") ? parse_alphabet(a.str("alphabet")) : std::vector<PrimeKnot>{};
  auto out = certificate_to_json(realize_subgroup(g, h, graph, alphabet, opts));
  validate_certificate_json(out);
  return out;
}

json cmd_orbits(const Args &a) {
  auto graph = a.has("graph") ? a.graph("graph") : complete_graph(degree_arg(a));
  const int n = graph.vertex_count();
  auto g = PermGroup::generate(n, a.gens("gens", n));
  require_acts_on(graph, g);
  json vertex_orbits = json::array(), edge_orbits = json::array();
  std::set<int> seen_v;
  for (int v = 0; v < n; ++v)
    if (!seen_v.contains(v)) {
      json o = json::array();
      for (int x : orbit(g, v)) {
        seen_v.insert(x);
        o.push_back(x + 1);
      }
      vertex_orbits.push_back(o);
    }
  std::set<Edge> seen_e;
  for (const auto &e : graph.edges())
    if (!seen_e.contains(e)) {
      json o = json::array();
      for (const auto &f : orbit(g, e)) {
        seen_e.insert(f);
        o.push_back(edge_to_json(f));
      }
      edge_orbits.push_back(o);
    }
  return {{"group", group_to_json(g)}, {"vertex_orbits", vertex_orbits}, {"edge_orbits", edge_orbits}};
}

json cmd_stabilizer(const Args &a) {
  const int n = degree_arg(a);
  auto g = PermGroup::generate(n, a.gens("gens", n));
  const Edge e = parse_edge(a.required_str("edge"));
  if (e.v >= n || e.u < 0)
    throw DomainError("invalid_edge", "edge endpoint out of range", to_string(e));
  return {{"group", group_to_json(g)},
          {"edge", edge_to_json(e)},
          {"stabilizer", group_to_json(edge_pointwise_stabilizer(g, e))}};
}

json cmd_subgroups(const Args &a) {
  const int n = degree_arg(a);
  auto g = PermGroup::generate(n, a.gens("gens", n));
  json subs = json::array();
  for (const auto &s : enumerate_subgroups(g))
    subs.push_back(group_to_json(s));
  return {{"group", group_to_json(g)}, {"count", subs.size()}, {"subgroups", subs}};
}

json cmd_verify_lemma2(const Args &a) {
  const auto m = a.integer("m");
  if (m < 3 || m % 2 == 0)
    throw DomainError("bad_parameter", "m must be odd and at least 3");
  auto report = verify_classification(build_dihedral_product(static_cast<int>(m)));
  if (!report.mismatches.empty())
    throw VerificationFailure("classification_mismatch",
                              std::to_string(report.mismatches.size()) +
                                  " subgroups are not isomorphic to their classified family",
                              group_to_json(report.mismatches.front().subgroup).dump());
  return report_to_json(report);
}

std::vector<Edge> parse_edge_list(const json &v) {
  std::vector<Edge> out;
  if (v.is_array()) {
    for (const auto &e : v)
      out.push_back(edge_from_json(e));
    return out;
  }
  const auto s = v.get<std::string>();
  std::size_t start = 0;
  while (start < s.size()) {
    auto end = s.find(';', start);
    if (end == std::string::npos)
      end = s.size();
    if (end > start)
      out.push_back(parse_edge(s.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

json cmd_hypothesis(const Args &a) {
  auto graph = a.graph("graph");
  const int n = graph.vertex_count();
  auto g = PermGroup::generate(n, a.gens("ambient-gens", n));
  auto h = PermGroup::generate(n, a.gens("target-gens", n));
  return hypothesis_to_json(subgroup_theorem_hypothesis(g, h, graph, parse_edge_list(a.value("edges"))));
}

json cmd_prop1(const Args &a) {
  const int n = degree_arg(a);
  auto alpha = parse_cycles(a.required_str("alpha"), n);
  std::optional<Permutation> beta;
  if (a.has("beta"))
    beta = parse_cycles(a.str("beta"), n);
  return witness_to_json(prop1_witness(n, alpha, beta));
}

json cmd_prop2(const Args &a) {
  const int n = degree_arg(a);
  auto alpha = parse_cycles(a.required_str("alpha"), n);
  auto beta = parse_cycles(a.required_str("beta"), n);
  return witness_to_json(prop2_witness(n, alpha, beta, a.gens("extra", n)));
}

json cmd_refine(const Args &a) {
  const auto &v = a.value("embedding");
  json doc;
  if (v.is_string()) {
    try {
      doc = json::parse(v.get<std::string>());
    } catch (const json::parse_error &) {
      throw UsageError("--embedding must be JSON text");
    }
  } else {
    doc = v;
  }
  auto emb = embedding_from_json(doc);
  auto refined = refine(emb);
  json inverting = json::array();
  for (const auto &p : inverting_base_elements(emb))
    inverting.push_back(p.to_cycle_string());
  return {{"refined", group_to_json(refined)},
          {"order", refined.order()},
          {"inverting_base_elements", inverting}};
}

json cmd_shape(const Args &a) {
  const int n = degree_arg(a);
  auto g = PermGroup::generate(n, a.gens("gens", n));
  auto out = shape_to_json(check_group_realizable_shape(g));
  out["group"] = group_to_json(g);
  return out;
}

json cmd_random_instance(const Args &a) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(a.integer("seed", 1)));
  RandomInstanceOptions opts;
  opts.min_n = static_cast<int>(a.integer("min-n", opts.min_n));
  opts.max_n = static_cast<int>(a.integer("max-n", opts.max_n));
  opts.max_order = static_cast<std::size_t>(a.integer("max-order", static_cast<long long>(opts.max_order)));
  if (opts.min_n < 4 || opts.max_n < opts.min_n || opts.max_n > 16 || opts.max_order < 1)
    throw DomainError("bad_parameter", "need 4 <= min-n <= max-n <= 16 and max-order >= 1");
  auto inst = random_knot_instance(rng, opts);
  json picks = json::array();
  for (const auto &p : inst.picks)
    picks.push_back({{"edge", edge_to_json(p.edge)}, {"knot", p.knot.symbol}, {"invertible", p.knot.invertible}});
  auto after = add_knots(inst.embedding, inst.h, inst.picks);
  return {{"embedding", embedding_to_json(inst.embedding)},
          {"h", group_to_json(inst.h)},
          {"picks", picks},
          {"refine_before", group_to_json(refine(inst.embedding))},
          {"refine_after", group_to_json(refine(after))}};
}

using Handler = std::function<json(const Args &)>;

const std::map<std::string, Handler> &handlers() {
  static const std::map<std::string, Handler> h = {
      {"check-automorphism", cmd_check_automorphism},
      {"classify", cmd_classify},
      {"realize", cmd_realize},
      {"orbits", cmd_orbits},
      {"stabilizer", cmd_stabilizer},
      {"subgroups", cmd_subgroups},
      {"verify-lemma2", cmd_verify_lemma2},
      {"hypothesis", cmd_hypothesis},
      {"prop1", cmd_prop1},
      {"prop2", cmd_prop2},
      {"refine", cmd_refine},
      {"shape", cmd_shape},
      {"random-instance", cmd_random_instance},
  };
  return h;
}

const CommandSpec &spec_for(const std::string &name) {
  for (const auto &s : command_specs())
    if (s.name == name)
      return s;
  throw UsageError("unknown command '" + name + "'");
}

} // namespace

const std::vector<CommandSpec> &command_specs() {
  static const std::vector<CommandSpec> specs = {
      {"check-automorphism",
       "Check an automorphism of K_n against the realizability conditions",
       {{"n", "number of vertices (> 6)", true}, {"perm", "permutation in cycle notation", true}}},
      {"classify",
       "Classify a subgroup of D_m x D_m (acting on 2m points)",
       {{"m", "odd m >= 3", true}, {"gens", "generators separated by ';'", true}}},
      {"realize",
       "Certificate labeling edges so the refined group is the target",
       {{"graph", "K<n> or JSON {n, edges}", true},
        {"ambient-gens", "ambient group generators separated by ';'", true},
        {"target-gens", "target subgroup generators; empty for trivial", false},
        {"alphabet", "knots as symbol:i or symbol:n, comma-separated", false},
        {"max-edges", "edge-set size bound when no free edge exists", false}}},
      {"orbits",
       "Vertex and edge orbits of a group",
       {{"n", "number of points (ignored with --graph)", false},
        {"gens", "generators separated by ';'", true},
        {"graph", "graph whose edges are orbited (default K_n)", false}}},
      {"stabilizer",
       "Pointwise stabilizer of an edge",
       {{"n", "number of points", true},
        {"gens", "generators separated by ';'", true},
        {"edge", "edge as u,v", true}}},
      {"subgroups",
       "All subgroups of a group",
       {{"n", "number of points", true}, {"gens", "generators separated by ';'", true}}},
      {"verify-lemma2",
       "Classify every subgroup of D_m x D_m and check each against the isomorphism oracle",
       {{"m", "odd m >= 3", true}}},
      {"hypothesis",
       "Check the subgroup-theorem hypothesis for an edge list",
       {{"graph", "K<n> or JSON {n, edges}", true},
        {"ambient-gens", "ambient group generators", true},
        {"target-gens", "target subgroup generators; empty for trivial", false},
        {"edges", "edges u,v separated by ';' (first is e_1)", true}}},
      {"prop1",
       "Free edge for a cyclic or dihedral group on K_n",
       {{"n", "number of vertices", true},
        {"alpha", "generator", true},
        {"beta", "involution with alpha beta = beta alpha^-1", false}}},
      {"prop2",
       "Free edge for a group containing Z_r x Z_s on K_n",
       {{"n", "number of vertices", true},
        {"alpha", "order r generator", true},
        {"beta", "order s generator commuting with alpha", true},
        {"extra", "further generators separated by ';'", false}}},
      {"refine",
       "Subgroup of the base group preserving all knot labels",
       {{"embedding", "labeled embedding JSON", true}}},
      {"shape",
       "Whether a group has one of the shapes possible for complete graphs",
       {{"n", "number of points", true}, {"gens", "generators separated by ';'", true}}},
      {"random-instance",
       "Random valid knot-addition instance (uses --seed)",
       {{"min-n", "smallest K_n", false},
        {"max-n", "largest K_n", false},
        {"max-order", "bound on the ambient group order", false}}},
  };
  return specs;
}

CommandOutcome run_command(const std::string &name, const json &args) {
  try {
    const auto &spec = spec_for(name);
    Args a(spec, args);
    return {kExitOk, handlers().at(name)(a)};
  } catch (const UsageError &e) {
    return {kExitUsage, error_to_json("usage", e.what(), std::nullopt)};
  } catch (const DomainError &e) {
    return {kExitDomain, error_to_json(e.code(), e.what(), e.witness())};
  } catch (const VerificationFailure &e) {
    return {kExitVerification, error_to_json(e.code(), e.what(), e.witness())};
  } catch (const json::exception &e) {
    return {kExitDomain, error_to_json("bad_json", e.what(), std::nullopt)};
  } catch (const std::exception &e) {
    return {kExitVerification, error_to_json("internal_error", e.what(), std::nullopt)};
  }
}

} // namespace tsg::cli
