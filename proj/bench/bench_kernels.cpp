// Parallel kernels against their serial references. The `threads` argument is
// the team cap for the parallel version (0 = OpenMP default).

#include "lctkit/kernels.hpp"
#include "lctkit/newton.hpp"
#include "lctkit/thresholds.hpp"

#include <benchmark/benchmark.h>

using namespace lctkit;

namespace {

// x_1^s, ..., x_n^s plus mixed generators that carve a staircase.
MonomialIdeal staircase(std::size_t n, std::int64_t s)
{
    std::vector<Exponents> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Exponents g(n, 0);
        g[i] = s + static_cast<std::int64_t>(i);
        gens.push_back(g);
        Exponents mixed(n, 0);
        mixed[i] = s / 2;
        mixed[(i + 1) % n] = s / 3 + 1;
        gens.push_back(mixed);
    }
    return MonomialIdeal(n, gens);
}

void ColengthParallel(benchmark::State& state)
{
    auto ideal = staircase(static_cast<std::size_t>(state.range(0)), state.range(1));
    kernels::set_thread_cap(static_cast<int>(state.range(2)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::colength_count(ideal));
    kernels::set_thread_cap(0);
}

void ColengthReference(benchmark::State& state)
{
    auto ideal = staircase(static_cast<std::size_t>(state.range(0)), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::colength_count_reference(ideal));
}

void MultiplierParallel(benchmark::State& state)
{
    auto poly = build_polyhedron(staircase(static_cast<std::size_t>(state.range(0)), state.range(1)));
    Rat c = lct(poly) * Rat(state.range(2));
    kernels::set_thread_cap(static_cast<int>(state.range(3)));
    for (auto _ : state) benchmark::DoNotOptimize(multiplier_ideal(poly, c));
    kernels::set_thread_cap(0);
}

void MultiplierReference(benchmark::State& state)
{
    auto poly = build_polyhedron(staircase(static_cast<std::size_t>(state.range(0)), state.range(1)));
    Rat c = lct(poly) * Rat(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(multiplier_ideal_reference(poly, c));
}

}  // namespace

BENCHMARK(ColengthParallel)
    ->ArgNames({"n", "s", "threads"})
    ->Args({2, 200, 1})
    ->Args({2, 200, 0})
    ->Args({3, 40, 1})
    ->Args({3, 40, 0})
    ->Args({4, 14, 1})
    ->Args({4, 14, 0})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(ColengthReference)
    ->ArgNames({"n", "s"})
    ->Args({2, 200})
    ->Args({3, 40})
    ->Args({4, 14})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(MultiplierParallel)
    ->ArgNames({"n", "s", "c", "threads"})
    ->Args({2, 30, 3, 1})
    ->Args({2, 30, 3, 0})
    ->Args({3, 10, 3, 1})
    ->Args({3, 10, 3, 0})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(MultiplierReference)
    ->ArgNames({"n", "s", "c"})
    ->Args({2, 30, 3})
    ->Args({3, 10, 3})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
