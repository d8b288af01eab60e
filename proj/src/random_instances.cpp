#include "tsg/random_instances.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tsg/error.hpp"

namespace tsg {

namespace {

int uniform(std::mt19937_64 &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Permutation random_permutation(std::mt19937_64 &rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

Permutation random_involution(std::mt19937_64 &rng, int n) {
  std::vector<int> pts(static_cast<std::size_t>(n));
  std::iota(pts.begin(), pts.end(), 0);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  const int pairs = uniform(rng, 1, n / 2);
  for (int k = 0; k < pairs; ++k) {
    int a = pts[static_cast<std::size_t>(2 * k)], b = pts[static_cast<std::size_t>(2 * k + 1)];
    img[static_cast<std::size_t>(a)] = b;
    img[static_cast<std::size_t>(b)] = a;
  }
  return Permutation(std::move(img));
}

Edge random_edge(std::mt19937_64 &rng, int n) {
  int a = uniform(rng, 0, n - 1);
  int b = uniform(rng, 0, n - 2);
  if (b >= a)
    ++b;
  return Edge(a, b);
}

} // namespace

PermGroup random_ambient_group(std::mt19937_64 &rng, int n, std::size_t max_order) {
  for (;;) {
    std::vector<Permutation> gens;
    switch (uniform(rng, 0, 2)) {
    case 0:
      gens = {random_permutation(rng, n)};
      break;
    case 1:
      gens = {random_involution(rng, n), random_involution(rng, n)};
      break;
    default:
      gens = {random_permutation(rng, n), random_involution(rng, n)};
      break;
    }
    try {
      return PermGroup::generate(n, std::move(gens), max_order);
    } catch (const DomainError &) {
      // too large; draw again
    }
  }
}

KnotAdditionInstance random_knot_instance(std::mt19937_64 &rng, const RandomInstanceOptions &opts) {
  const int n = uniform(rng, opts.min_n, opts.max_n);
  auto graph = complete_graph(n);
  auto ambient = random_ambient_group(rng, n, opts.max_order);

  std::map<Edge, KnotLabel> labels;
  std::map<Edge, Orientation> orientations;
  if (opts.preexisting_labels && uniform(rng, 0, 1) == 1) {
    const int count = uniform(rng, 1, 2);
    for (int k = 0; k < count; ++k) {
      Edge e = random_edge(rng, n);
      PrimeKnot knot{"P" + std::to_string(k + 1), uniform(rng, 0, 1) == 1};
      labels[e] = labels[e].plus({knot, 1});
      if (!knot.invertible && !orientations.contains(e))
        orientations[e] = uniform(rng, 0, 1) ? Orientation{e.u, e.v} : Orientation{e.v, e.u};
    }
  }
  LabeledEmbedding emb(graph, ambient, labels, orientations);

  auto subs = enumerate_subgroups(refine(emb));
  PermGroup h = subs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(subs.size()) - 1))];

  const int want = uniform(rng, 1, opts.max_picks);
  const auto alphabet = default_alphabet(want, want);
  std::vector<KnotPick> picks;
  std::set<std::set<Edge>> used;
  std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
  std::shuffle(edges.begin(), edges.end(), rng);
  int next_non_inv = 0, next_inv = 0;
  for (const auto &e : edges) {
    if (static_cast<int>(picks.size()) == want)
      break;
    if (!used.insert(orbit(h, e)).second)
      continue;
    const bool inv = inverted_by(h, e);
    const auto &knot = inv ? alphabet[static_cast<std::size_t>(want + next_inv++)]
                           : alphabet[static_cast<std::size_t>(next_non_inv++)];
    picks.push_back({e, knot});
  }
  return {std::move(emb), std::move(h), std::move(picks)};
}

} // namespace tsg
