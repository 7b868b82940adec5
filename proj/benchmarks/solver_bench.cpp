// Copyright 2026 The Guesswork Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "guesswork/guesswork.hpp"

namespace {

using namespace guesswork;

void BM_SolveHsic(benchmark::State &state) {
    const auto family = kAllHsicFamilies[static_cast<std::size_t>(state.range(0))];
    const auto channel = generate_hsic(family);
    const auto cost = CostFunction::identity(channel.size());
    const auto info = detect_symmetries(channel);
    SolveOptions options;
    options.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(channel, cost, info, options).value);
    }
    state.SetLabel(std::string(family_name(family)));
}
BENCHMARK(BM_SolveHsic)
    ->ArgsProduct({{0, 1, 2, 3, 4, 5}, {1, 2}})
    ->Unit(benchmark::kMillisecond);

void BM_SolveRandomGeneral(benchmark::State &state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    const auto channel = random_channel(size, 1, false);
    const auto cost = CostFunction::identity(size);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(channel, cost).value);
    }
}
BENCHMARK(BM_SolveRandomGeneral)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_Greedy(benchmark::State &state) {
    const auto channel = generate_hsic(HsicFamily::Icosidodecahedron);
    const auto cost = CostFunction::identity(channel.size());
    const SearchTree tree(channel, cost, Regime::TransitiveCs, find_antipodes(channel));
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_init(tree).score);
    }
}
BENCHMARK(BM_Greedy);

void BM_ENorm(benchmark::State &state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    const auto channel = random_channel(size, 3, false);
    const auto cost = CostFunction::identity(size);
    const auto n = Numbering::identity(size);
    for (auto _ : state) {
        benchmark::DoNotOptimize(e_norm(channel, cost.centered(), n));
    }
}
BENCHMARK(BM_ENorm)->RangeMultiplier(2)->Range(4, 64);

void BM_DetectSymmetries(benchmark::State &state) {
    const auto channel = generate_hsic(kAllHsicFamilies[static_cast<std::size_t>(state.range(0))]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(detect_symmetries(channel).order());
    }
}
BENCHMARK(BM_DetectSymmetries)->DenseRange(0, 6)->Unit(benchmark::kMicrosecond);

void BM_SimulateGame(benchmark::State &state) {
    const auto channel = generate_hsic(HsicFamily::Icosahedron);
    const auto cost = CostFunction::identity(12);
    const auto r = solve(channel, cost);
    const auto m = build_optimal_measurement(channel, cost, r.best_numbering);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            simulate_game(channel, Prior::uniform(12), cost, m, 4000, 1).empirical_guesswork);
    }
}
BENCHMARK(BM_SimulateGame)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
