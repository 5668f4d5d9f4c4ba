// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "chronop/opcalc.hpp"
#include "chronop/opcalc_parser.hpp"

using namespace chronop;
using namespace chronop::opcalc;

namespace {

void BM_NormalizeCanonicalPair(benchmark::State& state) {
    const auto rules = RuleSet::canonical();
    const auto e = parse_expression("[alpha1*x1, alpha1*p1] - i*unit");
    for (auto _ : state) benchmark::DoNotOptimize(normalize(e, rules));
}
BENCHMARK(BM_NormalizeCanonicalPair);

void BM_ConservationProof(benchmark::State& state) {
    const auto rules = RuleSet::concrete_dirac(Rational(3, 2));
    const auto h = OperatorExpression::generator(Gen::H);
    const auto j01 = parse_expression("t*p1 - x1*H + i/2*alpha1");
    for (auto _ : state)
        benchmark::DoNotOptimize(heisenberg_derivative(j01, h, rules));
}
BENCHMARK(BM_ConservationProof);

void BM_SquareIdentityLedger(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(square_identity_check(Rational(3, 2)));
}
BENCHMARK(BM_SquareIdentityLedger);

void BM_ParseExpression(benchmark::State& state) {
    const std::string text = "t*p1 - x1*H + i/2*alpha1 + {alpha1,beta} - [x1,p1]/2";
    for (auto _ : state) benchmark::DoNotOptimize(parse_expression(text));
}
BENCHMARK(BM_ParseExpression);

}  // namespace
