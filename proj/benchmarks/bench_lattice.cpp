// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "chronop/lattice.hpp"

using namespace chronop::lattice;

namespace {

void BM_EvolveDiracPacket(benchmark::State& state) {
    const MomentumGrid g(static_cast<int>(state.range(0)), 8.0);
    const SpinorGrid s =
        gaussian_packet(g, Model::dirac(1.0), 0.0, 2.0, 0.5, Projection::positive_energy);
    double t = 0;
    for (auto _ : state) {
        t += 0.1;
        benchmark::DoNotOptimize(evolve(s, t));
    }
}
BENCHMARK(BM_EvolveDiracPacket)->Arg(256)->Arg(1024)->Arg(4096);

void BM_PositionTransform(benchmark::State& state) {
    const MomentumGrid g(static_cast<int>(state.range(0)), 8.0);
    const SpinorGrid s = gaussian_packet(g, Model::schrodinger(1.0), 0.0, 2.0, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(to_position(s));
}
BENCHMARK(BM_PositionTransform)->Arg(256)->Arg(1024);

void BM_DetectorSample(benchmark::State& state) {
    const MomentumGrid g(1024, 8.0);
    const SpinorGrid s = gaussian_packet(g, Model::schrodinger(1.0), -20.0, 2.0, 0.25);
    double t = 0;
    for (auto _ : state) {
        t += 0.05;
        const SpinorGrid st = evolve(s, t);
        benchmark::DoNotOptimize(density_at(st, 5.0));
        benchmark::DoNotOptimize(current_at(st, 5.0));
    }
}
BENCHMARK(BM_DetectorSample);

void BM_BuildPositionOperator(benchmark::State& state) {
    const MomentumGrid g(static_cast<int>(state.range(0)), 8.0);
    for (auto _ : state) benchmark::DoNotOptimize(position_operator(g));
}
BENCHMARK(BM_BuildPositionOperator)->Arg(128)->Arg(512);

}  // namespace
