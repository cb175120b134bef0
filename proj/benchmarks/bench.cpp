#include <benchmark/benchmark.h>

#include <random>

#include "tourney/cycles.hpp"
#include "tourney/enumeration.hpp"
#include "tourney/linalg.hpp"
#include "tourney/structure.hpp"
#include "tourney/tournament.hpp"

namespace {

using namespace tourney;

Tournament random_tournament(int n, std::mt19937_64& rng) {
    Tournament t;
    t.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (rng() & 1)
                t.rows[i] |= uint32_t{1} << j;
            else
                t.rows[j] |= uint32_t{1} << i;
        }
    return t;
}

void BM_C3Direct(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const Tournament t = random_tournament(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(c3_direct(t));
}
BENCHMARK(BM_C3Direct)->Arg(8)->Arg(16)->Arg(32);

void BM_C3FromScores(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const Tournament t = random_tournament(static_cast<int>(state.range(0)), rng);
    const ScoreVector s = score_vector(t);
    for (auto _ : state) benchmark::DoNotOptimize(c3_from_scores(s));
}
BENCHMARK(BM_C3FromScores)->Arg(8)->Arg(16)->Arg(32);

void BM_Determinant(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const Tournament t = random_tournament(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(determinant(t));
}
BENCHMARK(BM_Determinant)->Arg(8)->Arg(16)->Arg(32);

void BM_Scc(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const Tournament t = random_tournament(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(scc(t));
}
BENCHMARK(BM_Scc)->Arg(8)->Arg(32);

void BM_CanonicalBits(benchmark::State& state) {
    std::mt19937_64 rng(4);
    std::vector<Tournament> pool;
    for (int i = 0; i < 64; ++i)
        pool.push_back(random_tournament(static_cast<int>(state.range(0)), rng));
    size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(canonical_bits(pool[i++ % pool.size()]));
}
BENCHMARK(BM_CanonicalBits)->Arg(6)->Arg(8)->Arg(9);

void BM_CanonicalBitsRegular(benchmark::State& state) {
    const Tournament t = construct_regular(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_bits(t));
}
BENCHMARK(BM_CanonicalBitsRegular)->Arg(7)->Arg(9);

void BM_Enumerate(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_iso_classes(static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
