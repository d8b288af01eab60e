// Serial vs OpenMP kernels. Argument 0 is Exec::serial, 1 is Exec::parallel.

#include <benchmark/benchmark.h>

#include "tsg/dihedral_products.hpp"
#include "tsg/knot_labels.hpp"
#include "tsg/standard_groups.hpp"

using namespace tsg;

namespace {

Exec exec_of(const benchmark::State &state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

// S_7 on K_7 with a non-invertible knot on {1,2} and an invertible one on
// {3,4}: refine has to test all 5040 elements.
const LabeledEmbedding &s7_embedding() {
  static const LabeledEmbedding emb = [] {
    const KnotLabel non_inv({{{"8_17", false}, 1}});
    const KnotLabel inv({{{"3_1", true}, 1}});
    return LabeledEmbedding(complete_graph(7), symmetric_group(7),
                            {{Edge(0, 1), non_inv}, {Edge(2, 3), inv}}, {{Edge(0, 1), {0, 1}}});
  }();
  return emb;
}

void BM_Refine(benchmark::State &state) {
  const auto &emb = s7_embedding();
  for (auto _ : state)
    benchmark::DoNotOptimize(refine(emb, exec_of(state)).order());
}
BENCHMARK(BM_Refine)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EdgeStabilizer(benchmark::State &state) {
  static const auto s7 = symmetric_group(7);
  for (auto _ : state)
    benchmark::DoNotOptimize(edge_pointwise_stabilizer(s7, Edge(0, 1), exec_of(state)).order());
}
BENCHMARK(BM_EdgeStabilizer)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateSubgroups(benchmark::State &state) {
  static const auto dp = build_dihedral_product(5);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_subgroups(dp.group, exec_of(state)).size());
}
BENCHMARK(BM_EnumerateSubgroups)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClassificationSweep(benchmark::State &state) {
  static const auto dp = build_dihedral_product(5);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_classification(dp, exec_of(state)).subgroup_count);
}
BENCHMARK(BM_ClassificationSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
