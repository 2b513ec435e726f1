#include <benchmark/benchmark.h>

#include "doflab/exact_linalg.hpp"
#include "doflab/genie_chain.hpp"
#include "doflab/multilook.hpp"
#include "doflab/rng.hpp"
#include "doflab/subspace.hpp"

using namespace doflab;

namespace {

Matrix integer_matrix(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<long>> rows(n, std::vector<long>(n));
    for (auto& row : rows)
        for (auto& x : row)
            x = static_cast<long>(rng.next() % 2001) - 1000;
    return Matrix::from_ints(rows);
}

void BM_RankRational(benchmark::State& state) {
    const Matrix m = integer_matrix(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRational)->Arg(10)->Arg(30)->Arg(60);

void BM_RankFloat(benchmark::State& state) {
    const Matrix m = integer_matrix(static_cast<std::size_t>(state.range(0)), 1).to_float();
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankFloat)->Arg(10)->Arg(30)->Arg(60)->Arg(200);

void BM_IntersectFloat(benchmark::State& state) {
    const auto M = static_cast<std::size_t>(state.range(0));
    const Subspace a = random_generic(M, M / 2 + 1, 1), b = random_generic(M, M / 2 + 1, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(intersect(a, b));
}
BENCHMARK(BM_IntersectFloat)->Arg(8)->Arg(32);

void BM_IntersectRational(benchmark::State& state) {
    const auto M = static_cast<std::size_t>(state.range(0));
    const Subspace a = random_generic(M, M / 2 + 1, 1, Backend::rational);
    const Subspace b = random_generic(M, M / 2 + 1, 2, Backend::rational);
    for (auto _ : state)
        benchmark::DoNotOptimize(intersect(a, b));
}
BENCHMARK(BM_IntersectRational)->Arg(8)->Arg(16);

void BM_BuildFullSets(benchmark::State& state) {
    std::vector<Subspace> spaces;
    for (std::uint64_t i = 0; i < 12; ++i)
        spaces.push_back(random_generic(6, 1 + i % 6, derive_seed(3, "bench", {i})));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_full_sets(spaces, 6));
}
BENCHMARK(BM_BuildFullSets);

void BM_ChainScript(benchmark::State& state) {
    const ChainScript s = builtin_script("chain_8_21");
    const Network net = network_for_script(s, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(ledger_bound(run_script(net, s)));
}
BENCHMARK(BM_ChainScript);

void BM_Algorithm2(benchmark::State& state) {
    const Network net = generate_generic(Topology::full_ic, 4, 5, 13, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_algorithm2(net).inequalities.size());
}
BENCHMARK(BM_Algorithm2);

void BM_CertifyStructured(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(certify_structured(7, 16, CertRegime::half).pass);
}
BENCHMARK(BM_CertifyStructured)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
