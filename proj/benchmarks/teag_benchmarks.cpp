// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "teag/constructions.hpp"
#include "teag/mpnn.hpp"
#include "teag/random_graphs.hpp"
#include "teag/refinement.hpp"
#include "teag/separation.hpp"

namespace {

using namespace teag;

void BM_ForwardK2r(benchmark::State& state) {
  const auto pair = separation::gen_k2r_pair(static_cast<std::size_t>(state.range(0)));
  EngineConfig config;
  config.depth = 6;
  config.adaptations = {true, true, true, false};
  const ModelWeights w = init_weights(config, FeatureSpace::covering({&pair.g1, &pair.g2}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(forward(pair.g1, &*pair.ports1, config, w));
  }
}
BENCHMARK(BM_ForwardK2r)->Arg(2)->Arg(4)->Arg(8);

void BM_RefineCycles(benchmark::State& state) {
  const auto pair = separation::gen_cycle_pair(static_cast<std::size_t>(state.range(0)));
  const AdaptationSet config{true, true, true, false};
  for (auto _ : state) {
    benchmark::DoNotOptimize(indistinguishable(pair.g1, pair.target1, pair.g2, pair.target2,
                                               &*pair.ports1, &*pair.ports2, config, 16));
  }
}
BENCHMARK(BM_RefineCycles)->Arg(3)->Arg(7)->Arg(15);

void BM_DuprEgoAllEgos(benchmark::State& state) {
  random::Engine rng = random::case_engine(1, 0);
  random::TeagBounds bounds;
  bounds.max_entities = static_cast<std::size_t>(state.range(0));
  bounds.max_attributes = 2 * bounds.max_entities;
  const TypedMultigraph g = random::random_teag(rng, bounds);
  const EntityAttributeView view(g);
  for (auto _ : state) {
    for (NodeId u : view.entities()) benchmark::DoNotOptimize(construct::dupr_ego(view, u, 2));
  }
}
BENCHMARK(BM_DuprEgoAllEgos)->Arg(8)->Arg(32)->Arg(128);

void BM_CycEgo(benchmark::State& state) {
  const TypedMultigraph g = separation::directed_cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct::cyc_ego(g, 0, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_CycEgo)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
