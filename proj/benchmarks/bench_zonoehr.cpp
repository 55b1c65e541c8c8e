#include <benchmark/benchmark.h>

#include "zonoehr/census.hpp"
#include "zonoehr/classify.hpp"

using namespace zonoehr;

namespace {

Zonotope exceptional() { return exceptional_parallelepiped(); }

Zonotope random_3d(int m, int entry_bound, unsigned long long seed) {
    auto mats = random_generator_matrices(3, entry_bound, m, 1, seed);
    return Zonotope{mats[0], RatVec(3, Rat(0))};
}

void BM_ehrhart_stanley(benchmark::State& state) {
    Zonotope Z = random_3d(static_cast<int>(state.range(0)), 3, 7);
    for (auto _ : state) benchmark::DoNotOptimize(ehrhart_stanley(Z));
}
BENCHMARK(BM_ehrhart_stanley)->Arg(3)->Arg(4)->Arg(6)->Arg(8);

void BM_ehrhart_oracle(benchmark::State& state) {
    Zonotope Z = random_3d(4, static_cast<int>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(ehrhart_oracle(Z));
}
BENCHMARK(BM_ehrhart_oracle)->Arg(1)->Arg(2)->Arg(3);

void BM_count_lattice_points(benchmark::State& state) {
    Zonotope Z = exceptional();
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_lattice_points(Z, n));
}
BENCHMARK(BM_count_lattice_points)->Arg(1)->Arg(4)->Arg(16)->Arg(64);

void BM_lattice_width(benchmark::State& state) {
    Zonotope Z = random_3d(4, static_cast<int>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(lattice_width(Z));
}
BENCHMARK(BM_lattice_width)->Arg(1)->Arg(2)->Arg(3);

void BM_classify_3d(benchmark::State& state) {
    Zonotope Z = exceptional();
    for (auto _ : state) benchmark::DoNotOptimize(classify_3d_deg2(Z));
}
BENCHMARK(BM_classify_3d);

void BM_eulerian_table(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eulerian_table(d));
}
BENCHMARK(BM_eulerian_table)->Arg(4)->Arg(6)->Arg(8);

void BM_verify_instance(benchmark::State& state) {
    Zonotope Z = random_3d(4, 2, 23);
    for (auto _ : state) benchmark::DoNotOptimize(verify_instance(Z));
}
BENCHMARK(BM_verify_instance);

}  // namespace

BENCHMARK_MAIN();
