#include <benchmark/benchmark.h>

#include "qclrs/counting.hpp"
#include "qclrs/field.hpp"
#include "qclrs/monomial.hpp"
#include "qclrs/recovery.hpp"
#include "qclrs/rng.hpp"

namespace {

using namespace qclrs;

void BM_FieldMul(benchmark::State& state) {
    const FieldContext ctx(static_cast<unsigned>(state.range(0)));
    SplitMix64 rng(1);
    std::vector<felem> xs(1024), ys(1024);
    for (std::size_t k = 0; k < xs.size(); ++k) {
        xs[k] = static_cast<felem>(rng.next_below(ctx.q()));
        ys[k] = static_cast<felem>(rng.next_below(ctx.q()));
    }
    for (auto _ : state) {
        felem acc = 0;
        for (std::size_t k = 0; k < xs.size(); ++k)
            acc = static_cast<felem>(acc ^ ctx.mul(xs[k], ys[k]));
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(12)->Arg(16);

void BM_GoodMonomialScan(benchmark::State& state) {
    const std::uint32_t q = 1u << state.range(0);
    const std::uint32_t d = q - q / 8;
    for (auto _ : state) {
        std::uint32_t k = 0;
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) k += is_qc_good({a, b}, q, d);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_GoodMonomialScan)->Arg(4)->Arg(6)->Arg(8);

void BM_EnumerateBadSet(benchmark::State& state) {
    const unsigned ell = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_S_star(ell, 2));
}
BENCHMARK(BM_EnumerateBadSet)->Arg(6)->Arg(7)->Arg(8);

void BM_Simulate(benchmark::State& state) {
    SimConfig cfg;
    cfg.spec = {Family::QcLrs, 3, 5};
    cfg.tau = 0.6;
    cfg.trials = static_cast<std::uint64_t>(state.range(0));
    cfg.seed = 3;
    cfg.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(simulate_failure(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
