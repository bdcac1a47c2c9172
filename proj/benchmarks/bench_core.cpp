#include <benchmark/benchmark.h>

#include "tcover/connected.hpp"
#include "tcover/duality.hpp"
#include "tcover/lpdual.hpp"
#include "tcover/packing.hpp"

using namespace tcover;

namespace {

MonomialIdeal J(const Graph& g, int t) { return cover_ideal(TConnInstance(g, t)); }

void BM_CoverIdealCycle(benchmark::State& state) {
    const Graph g = cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(J(g, 3));
}
BENCHMARK(BM_CoverIdealCycle)->Arg(9)->Arg(12)->Arg(16)->Arg(20);

void BM_Transversals(benchmark::State& state) {
    const auto edges = J(cycle(static_cast<int>(state.range(0))), 3).supports();
    for (auto _ : state) benchmark::DoNotOptimize(minimal_transversals(edges));
}
BENCHMARK(BM_Transversals)->Arg(9)->Arg(12)->Arg(16);

void BM_SymbolicPower(benchmark::State& state) {
    const MonomialIdeal j = J(cycle(9), 3);
    const int s = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(symbolic_power(j, s));
}
BENCHMARK(BM_SymbolicPower)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_MemberPower(benchmark::State& state) {
    const MonomialIdeal j = J(path(9), 3);
    const int s = static_cast<int>(state.range(0));
    const MonomialIdeal sym = symbolic_power(j, s);
    for (auto _ : state)
        for (const auto& g : sym.gens()) benchmark::DoNotOptimize(member_power(g, j, s));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sym.size()));
}
BENCHMARK(BM_MemberPower)->DenseRange(2, 3);

void BM_SimisCheck(benchmark::State& state) {
    const MonomialIdeal j = J(cycle(6), 3);
    for (auto _ : state) benchmark::DoNotOptimize(simis_check(j, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SimisCheck)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_PackingScan(benchmark::State& state) {
    const MonomialIdeal j = J(cycle(static_cast<int>(state.range(0))), 3);
    for (auto _ : state) benchmark::DoNotOptimize(is_packed(j));
}
BENCHMARK(BM_PackingScan)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_TauNu(benchmark::State& state) {
    const BinaryMatrix b = minimal_solutions(incidence_matrix(TConnInstance(cycle(12), 3)));
    const WeightVector ones(12, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tau(b, ones));
        benchmark::DoNotOptimize(nu(b, ones));
    }
}
BENCHMARK(BM_TauNu);

}  // namespace

BENCHMARK_MAIN();
