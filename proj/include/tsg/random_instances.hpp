#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tsg/knot_labels.hpp"

namespace tsg {

struct RandomInstanceOptions {
  int min_n = 7;
  int max_n = 9;
  std::size_t max_order = 50;
  /// Sprinkle a few pre-existing knots on the base embedding.
  bool preexisting_labels = true;
  int max_picks = 3;
};

/// A valid input to add_knots: h <= refine(embedding), picks in distinct
/// h-orbits, fresh knots whose invertibility matches inversion by h.
struct KnotAdditionInstance {
  LabeledEmbedding embedding;
  PermGroup h;
  std::vector<KnotPick> picks;
};

/// Random permutation group on n points of order at most max_order: cyclic,
/// generated by two involutions, or by a permutation and an involution.
PermGroup random_ambient_group(std::mt19937_64 &rng, int n, std::size_t max_order);

KnotAdditionInstance random_knot_instance(std::mt19937_64 &rng,
                                          const RandomInstanceOptions &opts = {});

} // namespace tsg
