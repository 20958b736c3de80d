#include <benchmark/benchmark.h>

#include "ssz/constants.hpp"
#include "ssz/extremal.hpp"
#include "ssz/gtable.hpp"
#include "ssz/sieve.hpp"
#include "ssz/ssf.hpp"

using namespace ssz;

namespace {

const SievePtr& shared_sieve() {
    static const SievePtr s = build_sieve(std::uint64_t{1} << 23);
    return s;
}

} // namespace

static void BM_BuildSieve(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_sieve(static_cast<std::uint64_t>(state.range(0))));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildSieve)->Arg(1 << 20)->Arg(1 << 22)->Unit(benchmark::kMillisecond);

static void BM_SchinzelSzekeres(benchmark::State& state) {
    const auto& s = *shared_sieve();
    const std::uint64_t top = std::uint64_t{1} << 20;
    std::uint64_t n = 1, acc = 0;
    for (auto _ : state) {
        acc += schinzel_szekeres(s, n);
        n = n == top ? 1 : n + 1;
    }
    benchmark::DoNotOptimize(acc);
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SchinzelSzekeres);

static void BM_MemberStream(benchmark::State& state) {
    const auto& s = *shared_sieve();
    const auto bound = static_cast<std::uint64_t>(state.range(0));
    std::size_t produced = 0;
    for (auto _ : state) {
        MemberStream ms(s, Rational(2), PrimeCutoff::real(Rational(1)), bound);
        Member m;
        while (ms.next(m)) ++produced;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(produced));
}
BENCHMARK(BM_MemberStream)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

static void BM_CountA(benchmark::State& state) {
    const auto& s = *shared_sieve();
    const Rational x(static_cast<std::int64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_A(s, x, Rational(1), PrimeCutoff::real(Rational(1))));
}
BENCHMARK(BM_CountA)->Arg(1 << 20)->Arg(1 << 23)->Unit(benchmark::kMillisecond);

static void BM_EnumerateB(benchmark::State& state) {
    const auto& s = *shared_sieve();
    const Rational x(static_cast<std::int64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_B(s, x, static_cast<unsigned>(state.range(1))));
}
BENCHMARK(BM_EnumerateB)->Args({1000000, 1})->Args({1000000, 4})->Unit(benchmark::kMillisecond);

static void BM_BuildGTable(benchmark::State& state) {
    const auto& s = shared_sieve();
    for (auto _ : state) benchmark::DoNotOptimize(GTable::build(s, static_cast<std::uint64_t>(state.range(0))));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildGTable)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

static void BM_ConstantC(benchmark::State& state) {
    const auto& s = *shared_sieve();
    TruncationParams p;
    p.N_main = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(compute_c(s, Rational(2), PrimeCutoff::real(Rational(1)), p));
}
BENCHMARK(BM_ConstantC)->Arg(1 << 18)->Arg(1 << 21)->Unit(benchmark::kMillisecond);

static void BM_ConstantA(benchmark::State& state) {
    const auto& s = *shared_sieve();
    TruncationParams p;
    p.N_main = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(compute_a(s, Rational(1), PrimeCutoff::real(Rational(1)), p));
}
BENCHMARK(BM_ConstantA)->Arg(1 << 18)->Arg(1 << 22)->Unit(benchmark::kMillisecond);

static void BM_ConstantBeta(benchmark::State& state) {
    const auto& s = shared_sieve();
    const auto g = GTable::build(s, std::uint64_t{1} << 16);
    TruncationParams p;
    p.N_main = std::uint64_t{1} << 18;
    p.N_secondary = std::uint64_t{1} << 16;
    p.jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(compute_beta(*s, *g, p));
}
BENCHMARK(BM_ConstantBeta)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_RExact(benchmark::State& state) {
    const Rational x(static_cast<std::int64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(r_exact(x));
}
BENCHMARK(BM_RExact)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_HExact(benchmark::State& state) {
    const Rational x(static_cast<std::int64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(h_exact(x));
}
BENCHMARK(BM_HExact)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
