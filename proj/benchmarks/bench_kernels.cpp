// Copyright (c) 2026 the vortex2l developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "vortex2l/equilibria.hpp"
#include "vortex2l/integrator.hpp"
#include "vortex2l/model.hpp"
#include "vortex2l/phase_portraits.hpp"
#include "vortex2l/special_functions.hpp"

namespace {

using namespace vortex2l;

void bm_k0_series_branch(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(k0(x));
        x = x < 1.9 ? x + 1e-6 : 0.1;
    }
}
BENCHMARK(bm_k0_series_branch);

void bm_k0_cf_branch(benchmark::State& state) {
    double x = 2.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(k0(x));
        x = x < 40.0 ? x + 1e-5 : 2.5;
    }
}
BENCHMARK(bm_k0_cf_branch);

void bm_h_cross_small(benchmark::State& state) {
    double r = 1e-4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(h_cross(r));
        r = r < 0.09 ? r + 1e-7 : 1e-4;
    }
}
BENCHMARK(bm_h_cross_small);

SystemState make_state(int n) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ux(-2.0, 2.0), uy(0.5, 3.0);
    SystemState s;
    for (int i = 0; i < n; ++i)
        s.vortices.push_back({i % 2 ? Layer::two : Layer::one, 1.0, ux(rng), uy(rng)});
    return s;
}

void bm_velocity(benchmark::State& state) {
    const SystemState s = make_state(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (std::size_t i = 0; i < s.vortices.size(); ++i)
            benchmark::DoNotOptimize(velocity(s, i));
    }
}
BENCHMARK(bm_velocity)->Arg(2)->Arg(3)->Arg(8);

void bm_hamiltonian(benchmark::State& state) {
    const SystemState s = make_state(3);
    for (auto _ : state) benchmark::DoNotOptimize(hamiltonian(s));
}
BENCHMARK(bm_hamiltonian);

void bm_rk4_steps(benchmark::State& state) {
    const SystemState s = make_state(2);
    const IntegratorConfig cfg{1e-3, 100, 100};
    for (auto _ : state) benchmark::DoNotOptimize(integrate(s, cfg));
}
BENCHMARK(bm_rk4_steps);

void bm_phase_grid(benchmark::State& state) {
    const PhaseCase c = make_phase_case(PhaseKind::two_layer_same, 1.0);
    const GridSpec spec{-1.5, 1.5, 0.02, 0.98, 101, 101};
    for (auto _ : state) benchmark::DoNotOptimize(grid_evaluate(c, spec));
}
BENCHMARK(bm_phase_grid);

void bm_level_extraction(benchmark::State& state) {
    const PhaseCase c = make_phase_case(PhaseKind::two_layer_same, 1.0);
    const FieldGrid f = grid_evaluate(c, {-1.5, 1.5, 0.02, 0.98, 201, 201});
    const double level = phase_hamiltonian(c, 0.3, 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(extract_level_curves(f, {level}));
}
BENCHMARK(bm_level_extraction);

void bm_newton_refine(benchmark::State& state) {
    const EquilibriumFamily fam{FamilyKind::horizontal, 1.9, 0.5};
    for (auto _ : state) benchmark::DoNotOptimize(refine_root(fam, 0.9, 4.8));
}
BENCHMARK(bm_newton_refine);

}  // namespace

BENCHMARK_MAIN();
