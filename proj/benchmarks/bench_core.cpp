#include <benchmark/benchmark.h>

#include "duf/diffop.hpp"
#include "duf/field.hpp"
#include "duf/harness.hpp"
#include "duf/morse.hpp"
#include "duf/mset.hpp"
#include "duf/uniformity.hpp"

using namespace duf;

namespace {

FqPoly sample_poly(const FieldCtx& ctx, int degree, uint64_t seed) {
    CounterRng rng = CounterRng::keyed(seed, 1);
    return random_poly(ctx, degree, rng);
}

void BM_fq_mul_tables(benchmark::State& state) {
    FieldCtx f = mk_field(16);
    FqElem a{0x1234}, b{0x4321};
    for (auto _ : state) {
        a = fq_mul(f, a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_fq_mul_tables);

void BM_fq_mul_shift(benchmark::State& state) {
    FieldCtx f = mk_field(48);
    FqElem a{0x123456789abcull}, b{0xcba987654321ull};
    for (auto _ : state) {
        a = fq_mul(f, a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_fq_mul_shift);

void BM_ddt_row(benchmark::State& state) {
    FieldCtx f = mk_field(static_cast<unsigned>(state.range(0)));
    FqPoly poly = sample_poly(f, 7, 42);
    for (auto _ : state) benchmark::DoNotOptimize(ddt_row(poly, fq_one));
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << state.range(0)));
}
BENCHMARK(BM_ddt_row)->Arg(8)->Arg(12)->Arg(16);

void BM_delta_fast(benchmark::State& state) {
    FieldCtx f = mk_field(static_cast<unsigned>(state.range(0)));
    FqPoly poly = sample_poly(f, 7, 42);
    for (auto _ : state) benchmark::DoNotOptimize(delta(poly, false, false, 1));
}
BENCHMARK(BM_delta_fast)->Arg(8)->Arg(10)->Arg(12);

void BM_delta_exact(benchmark::State& state) {
    FieldCtx f = mk_field(static_cast<unsigned>(state.range(0)));
    FqPoly poly = sample_poly(f, 7, 42);
    for (auto _ : state) benchmark::DoNotOptimize(delta(poly, true, false, 1));
}
BENCHMARK(BM_delta_exact)->Arg(8)->Arg(10);

void BM_l_alpha(benchmark::State& state) {
    FieldCtx f = mk_field(16);
    FqPoly poly = sample_poly(f, static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(l_alpha(poly, fq_one));
}
BENCHMARK(BM_l_alpha)->Arg(7)->Arg(19)->Arg(31);

void BM_is_morse(benchmark::State& state) {
    FieldCtx f = mk_field(8);
    FqPoly poly = sample_poly(f, 11, 3);
    FqPoly g = l_alpha(poly, fq_one).g;
    for (auto _ : state) benchmark::DoNotOptimize(is_morse(g));
}
BENCHMARK(BM_is_morse);

void BM_condition_xm(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(condition_xm(static_cast<uint64_t>(state.range(0)), 1));
}
BENCHMARK(BM_condition_xm)->Arg(39)->Arg(199);

} // namespace

BENCHMARK_MAIN();
