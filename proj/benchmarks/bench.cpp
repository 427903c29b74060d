#include <benchmark/benchmark.h>

#include "wfp/chains.hpp"
#include "wfp/code.hpp"
#include "wfp/family.hpp"
#include "wfp/oracles.hpp"
#include "wfp/search.hpp"

namespace {

wfp::Code bench_code(int n, int q, int m) { return wfp::oracles::random_code(n, q, m, 1); }

void BM_DirectVerifier(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    wfp::Code c = bench_code(12, 4, m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wfp::is_twfp_direct(c, 2));
    }
    state.SetItemsProcessed(state.iterations() * m * (m - 1) / 2);
}
BENCHMARK(BM_DirectVerifier)->Arg(8)->Arg(32)->Arg(128);

void BM_StructuralVerifier(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    wfp::Code c = bench_code(12, 4, m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wfp::is_2wfp_structural(c));
    }
    state.SetItemsProcessed(state.iterations() * m);
}
BENCHMARK(BM_StructuralVerifier)->Arg(8)->Arg(32)->Arg(128);

void BM_SpernerCheck(benchmark::State& state) {
    const int count = static_cast<int>(state.range(0));
    wfp::Family f = wfp::oracles::random_family(14, std::vector<int>(count, 7),
                                                wfp::oracles::FamilyConstraint::None, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wfp::is_sperner(f));
    }
}
BENCHMARK(BM_SpernerCheck)->Arg(16)->Arg(64);

void BM_NonTwoCoveringCheck(benchmark::State& state) {
    const int count = static_cast<int>(state.range(0));
    wfp::Family f = wfp::oracles::random_family(14, std::vector<int>(count, 5),
                                                wfp::oracles::FamilyConstraint::None, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wfp::is_non_2_covering(f));
    }
}
BENCHMARK(BM_NonTwoCoveringCheck)->Arg(16)->Arg(64);

void BM_ChainDecomposition(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wfp::symmetric_chain_decomposition(n));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ChainDecomposition)->Arg(10)->Arg(14)->Arg(18);

void BM_ExhaustiveOracle(benchmark::State& state) {
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        auto cert = wfp::oracles::exhaustive_max_code(4, 2, 2);
        nodes += cert.nodes;
        benchmark::DoNotOptimize(cert);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(nodes));
}
BENCHMARK(BM_ExhaustiveOracle);

void BM_CanonicalSearch(benchmark::State& state) {
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        auto r = wfp::search::search_max_code(4, 3, 2);
        nodes += r.nodes_explored;
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(nodes));
}
BENCHMARK(BM_CanonicalSearch);

}  // namespace

BENCHMARK_MAIN();
