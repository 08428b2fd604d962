// Microbenchmarks for the hot paths: cyclotomic arithmetic, algebra
// construction, and the structure/hom solvers the verification suites lean on.

#include <benchmark/benchmark.h>

#include <hmn/context.hpp>
#include <hmn/homalg.hpp>
#include <hmn/module.hpp>
#include <hmn/structure.hpp>

using namespace hmn;

namespace {

const Context& ctx22() {
    static Context C(2, 2);
    return C;
}

void BM_cyc_mul(benchmark::State& state) {
    Field F(2, 3); // phi(6) = 2, but reduction still exercises the modulus
    Cyc a = F.root(1) + F.rational(Rat(3, 7));
    Cyc b = F.root(5) - F.integer(2);
    for (auto _ : state) {
        Cyc c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_cyc_mul);

void BM_cyc_inverse(benchmark::State& state) {
    Field F(3, 2); // phi(6) = 2
    Cyc a = F.root(1) + F.rational(Rat(3, 7));
    for (auto _ : state) {
        Cyc c = a.inverse();
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_cyc_inverse);

void BM_algebra_build(benchmark::State& state) {
    for (auto _ : state) {
        Field F(2, 2);
        Algebra A(F);
        benchmark::DoNotOptimize(A.dim());
    }
}
BENCHMARK(BM_algebra_build)->Unit(benchmark::kMillisecond);

void BM_regular_radical(benchmark::State& state) {
    for (auto _ : state) {
        Field F(2, 2);
        Algebra A(F);
        benchmark::DoNotOptimize(A.radical().dim());
    }
}
BENCHMARK(BM_regular_radical)->Unit(benchmark::kMillisecond);

void BM_socle_projective(benchmark::State& state) {
    const Context& C = ctx22();
    Module P = projective_P(C.field(), 1, 0);
    for (auto _ : state) {
        Subspace s = socle_subspace(C, P);
        benchmark::DoNotOptimize(s.dim());
    }
}
BENCHMARK(BM_socle_projective)->Unit(benchmark::kMillisecond);

void BM_hom_space(benchmark::State& state) {
    const Context& C = ctx22();
    Module P = projective_P(C.field(), 1, 0);
    Module X = m1_module(C.field(), 1, 0, C.field().root(1));
    for (auto _ : state) {
        HomBasis h = hom_space(P, X);
        benchmark::DoNotOptimize(h.dim());
    }
}
BENCHMARK(BM_hom_space)->Unit(benchmark::kMillisecond);

void BM_ext_class_space(benchmark::State& state) {
    const Context& C = ctx22();
    Module a = simple_M(C.field(), 1, 0);
    Module b = simple_M(C.field(), 1, 1);
    for (auto _ : state) {
        Ext1 e = ext1(a, b);
        benchmark::DoNotOptimize(e.dim);
    }
}
BENCHMARK(BM_ext_class_space)->Unit(benchmark::kMillisecond);

void BM_syzygy(benchmark::State& state) {
    const Context& C = ctx22();
    Module Mi = simple_M(C.field(), 1, 0);
    for (auto _ : state) {
        Module W = syzygy(C, Mi);
        benchmark::DoNotOptimize(W.dim);
    }
}
BENCHMARK(BM_syzygy)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
