#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "grb/validate.hpp"

using namespace grb;

static void BM_PolyMultiply(benchmark::State& state) {
    Presentation f3 = fixtures::degree3F();
    const Poly& w = f3.transitions.front().lawOf(fixtures::coordOf(f3, "w", {}, 1));
    const Poly& z = f3.transitions.front().lawOf(fixtures::coordOf(f3, "z", {}, 1));
    for (auto _ : state) {
        Poly p = w * z;
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_PolyMultiply);

static void BM_SubstituteTransition(benchmark::State& state) {
    Presentation f3 = fixtures::degree3F();
    const Transition& t = f3.transitions.front();
    const Poly& w = t.lawOf(fixtures::coordOf(f3, "w", {}, 1));
    for (auto _ : state) {
        Poly p = substitute(w, t.laws);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_SubstituteTransition);

static void BM_FullLinearise(benchmark::State& state) {
    Presentation f = state.range(0) == 3 ? fixtures::degree3F() : fixtures::degree4F();
    for (auto _ : state) {
        Presentation lin = fullLinearise(f);
        benchmark::DoNotOptimize(lin);
    }
}
BENCHMARK(BM_FullLinearise)->Arg(3)->Arg(4);

static void BM_FullLineariseDirect(benchmark::State& state) {
    Presentation f = state.range(0) == 3 ? fixtures::degree3F() : fixtures::degree4F();
    for (auto _ : state) {
        Presentation lin = fullLineariseDirect(f);
        benchmark::DoNotOptimize(lin);
    }
}
BENCHMARK(BM_FullLineariseDirect)->Arg(3)->Arg(4);

static void BM_ValidateSymmetric(benchmark::State& state) {
    Presentation lin = fullLineariseDirect(fixtures::degree3F());
    SymmetricKVB S = canonicalSymmetricKVB(lin);
    for (auto _ : state) {
        ValidationReport rep = validateSymmetric(S);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_ValidateSymmetric);

static void BM_Diagonalise(benchmark::State& state) {
    Presentation lin = fullLineariseDirect(fixtures::degree3F());
    SymmetricKVB S = canonicalSymmetricKVB(lin);
    for (auto _ : state) {
        Presentation diag = diagonalise(S);
        benchmark::DoNotOptimize(diag);
    }
}
BENCHMARK(BM_Diagonalise);

BENCHMARK_MAIN();
