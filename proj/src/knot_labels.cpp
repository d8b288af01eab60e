#include "tsg/knot_labels.hpp"

#include <algorithm>
#include <set>

#include "tsg/error.hpp"

namespace tsg {

KnotLabel::KnotLabel(std::vector<KnotFactor> factors) : factors_(std::move(factors)) {
  std::map<std::string, bool> invertible;
  std::map<std::string, int> signs_seen;
  for (auto &f : factors_) {
    if (f.sign != 1 && f.sign != -1)
      throw DomainError("bad_sign", "factor sign must be +1 or -1", f.knot.symbol);
    auto [it, fresh] = invertible.emplace(f.knot.symbol, f.knot.invertible);
    if (!fresh && it->second != f.knot.invertible)
      throw DomainError("inconsistent_knot", "knot symbol used with two invertibility flags",
                        f.knot.symbol);
    if (f.knot.invertible) {
      f.sign = 1;
      continue;
    }
    signs_seen[f.knot.symbol] |= (f.sign > 0 ? 1 : 2);
    if (signs_seen[f.knot.symbol] == 3)
      throw DomainError("mixed_orientation",
                        "a non-invertible knot and its reverse on one edge form an invertible sum",
                        f.knot.symbol);
  }
  std::sort(factors_.begin(), factors_.end());
}

bool KnotLabel::invertible() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const KnotFactor &f) { return f.knot.invertible; });
}

bool KnotLabel::mentions(const std::string &symbol) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const KnotFactor &f) { return f.knot.symbol == symbol; });
}

KnotLabel KnotLabel::reversed() const {
  KnotLabel out = *this;
  for (auto &f : out.factors_)
    if (!f.knot.invertible)
      f.sign = -f.sign;
  std::sort(out.factors_.begin(), out.factors_.end());
  return out;
}

KnotLabel KnotLabel::plus(const KnotFactor &f) const {
  auto fs = factors_;
  fs.push_back(f);
  return KnotLabel(std::move(fs));
}

std::string to_string(const KnotLabel &label) {
  if (label.empty())
    return "unknot";
  std::string s;
  for (const auto &f : label.factors()) {
    if (!s.empty())
      s += " # ";
    if (f.sign < 0)
      s += "-";
    s += f.knot.symbol;
  }
  return s;
}

LabeledEmbedding::LabeledEmbedding(Graph graph, PermGroup base_group,
                                   std::map<Edge, KnotLabel> labels,
                                   std::map<Edge, Orientation> orientations,
                                   ConnectivityPolicy policy)
    : graph_(std::move(graph)), base_(std::move(base_group)),
      orientations_(std::move(orientations)), policy_(policy) {
  if (policy_ == ConnectivityPolicy::require_three_connected && !is_three_connected(graph_))
    throw DomainError("not_three_connected", "graph must be 3-connected");
  require_acts_on(graph_, base_);

  for (auto &[e, lab] : labels) {
    if (!graph_.has_edge(e))
      throw DomainError("invalid_edge", "labeled edge is not in the graph", to_string(e));
    if (!lab.empty())
      labels_.emplace(e, std::move(lab));
  }

  std::map<std::string, bool> alphabet;
  for (const auto &[e, lab] : labels_)
    for (const auto &f : lab.factors()) {
      auto [it, fresh] = alphabet.emplace(f.knot.symbol, f.knot.invertible);
      if (!fresh && it->second != f.knot.invertible)
        throw DomainError("inconsistent_knot", "knot symbol used with two invertibility flags",
                          f.knot.symbol);
    }

  for (const auto &[e, o] : orientations_) {
    auto it = labels_.find(e);
    if (it == labels_.end() || it->second.invertible())
      throw DomainError("unexpected_orientation",
                        "only edges with non-invertible labels carry an orientation", to_string(e));
    if (Edge(o.first, o.second) != e || o.first == o.second)
      throw DomainError("bad_orientation", "orientation endpoints differ from the edge",
                        to_string(e));
  }

  for (const auto &[e, lab] : labels_) {
    if (lab.invertible()) {
      canonical_.emplace(e, lab);
      continue;
    }
    auto it = orientations_.find(e);
    if (it == orientations_.end())
      throw DomainError("missing_orientation", "non-invertible label needs an orientation",
                        to_string(e));
    canonical_.emplace(e, it->second.first == e.u ? lab : lab.reversed());
  }
}

KnotLabel LabeledEmbedding::canonical_label(const Edge &e) const {
  auto it = canonical_.find(e);
  return it == canonical_.end() ? KnotLabel{} : it->second;
}

bool LabeledEmbedding::uses_symbol(const std::string &symbol) const {
  return std::any_of(labels_.begin(), labels_.end(),
                     [&](const auto &kv) { return kv.second.mentions(symbol); });
}

namespace {

// Labels are a bijection-invariant: checking that every labeled edge lands on
// an equally labeled edge also forces unlabeled edges onto unlabeled ones.
bool preserves_labels(const LabeledEmbedding &emb, const Permutation &p) {
  for (const auto &[e, lab] : emb.labels()) {
    const KnotLabel canon = emb.canonical_label(e);
    const int a = p(e.u), b = p(e.v);
    if (a == e.v && b == e.u && !canon.invertible())
      return false;
    const KnotLabel moved = a < b ? canon : canon.reversed();
    if (moved != emb.canonical_label(Edge(a, b)))
      return false;
  }
  return true;
}

} // namespace

bool admissible(const LabeledEmbedding &emb, const Permutation &p) {
  if (!emb.base_group().contains(p))
    throw DomainError("not_in_base_group", "permutation is not in the base group",
                      p.to_cycle_string());
  return preserves_labels(emb, p);
}

PermGroup refine(const LabeledEmbedding &emb, Exec exec) {
  const auto &elems = emb.base_group().elements();
  auto keep = kernels::select_indices(
      elems.size(), [&](std::size_t i) { return preserves_labels(emb, elems[i]); }, exec);
  std::vector<Permutation> sub;
  sub.reserve(keep.size());
  for (auto i : keep)
    sub.push_back(elems[i]);
  return PermGroup::from_elements(emb.base_group().degree(), std::move(sub));
}

std::vector<Permutation> inverting_base_elements(const LabeledEmbedding &emb) {
  std::vector<Permutation> out;
  for (const auto &p : emb.base_group().elements())
    for (const auto &[e, lab] : emb.labels())
      if (!lab.invertible() && p(e.u) == e.v && p(e.v) == e.u) {
        out.push_back(p);
        break;
      }
  return out;
}

bool inverted_by(const PermGroup &h, const Edge &e) {
  return std::any_of(h.elements().begin(), h.elements().end(),
                     [&](const Permutation &p) { return p(e.u) == e.v && p(e.v) == e.u; });
}

LabeledEmbedding add_knots(const LabeledEmbedding &emb, const PermGroup &h,
                           const std::vector<KnotPick> &picks) {
  if (h.degree() != emb.graph().vertex_count())
    throw DomainError("degree_mismatch", "h acts on the wrong number of vertices");
  if (!h.is_subgroup_of(refine(emb)))
    throw DomainError("h_not_admissible", "h is not contained in the refined group");

  std::set<std::set<Edge>> orbits;
  std::set<std::string> symbols;
  for (const auto &pick : picks) {
    if (!emb.graph().has_edge(pick.edge))
      throw DomainError("invalid_edge", "pick edge is not in the graph", to_string(pick.edge));
    if (!orbits.insert(orbit(h, pick.edge)).second)
      throw DomainError("duplicate_orbit", "two picks lie in the same h-orbit",
                        to_string(pick.edge));
    if (!symbols.insert(pick.knot.symbol).second || emb.uses_symbol(pick.knot.symbol))
      throw DomainError("knot_reuse", "knot already used", pick.knot.symbol);
    if (inverted_by(h, pick.edge) != pick.knot.invertible)
      throw DomainError("invertibility_mismatch",
                        pick.knot.invertible
                            ? "invertible knot on an edge no element of h inverts"
                            : "non-invertible knot on an edge inverted by h",
                        to_string(pick.edge));
  }

  auto labels = emb.labels();
  auto orientations = emb.orientations();
  for (const auto &pick : picks) {
    std::set<Edge> done;
    const Edge e = pick.edge;
    for (const auto &x : h.elements()) {
      const Edge f = x(e);
      if (!done.insert(f).second)
        continue;
      const Orientation pushed{x(e.u), x(e.v)};
      int sign = 1;
      if (!pick.knot.invertible) {
        auto it = orientations.find(f);
        if (it == orientations.end())
          orientations.emplace(f, pushed);
        else if (it->second != pushed)
          sign = -1;
      }
      labels[f] = labels[f].plus({pick.knot, sign});
    }
  }
  return LabeledEmbedding(emb.graph(), emb.base_group(), std::move(labels),
                          std::move(orientations), emb.policy());
}

std::vector<PrimeKnot> default_alphabet(int non_invertible, int invertible) {
  static const char *const named_non_inv[] = {"8_17", "9_32", "9_33"};
  static const char *const named_inv[] = {"3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3",
                                          "7_1", "7_2", "7_3", "7_4", "7_5", "7_6", "7_7"};
  std::vector<PrimeKnot> out;
  for (int i = 0; i < non_invertible; ++i)
    out.push_back({i < 3 ? named_non_inv[i] : "N" + std::to_string(i + 1), false});
  for (int i = 0; i < invertible; ++i)
    out.push_back({i < 14 ? named_inv[i] : "I" + std::to_string(i + 1), true});
  return out;
}

} // namespace tsg
