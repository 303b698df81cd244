// Microbenchmarks for the hot paths: family enumeration, per-map
// classification (direct and table-based), and the size-3 separation matrix.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "nanotop/verify.hpp"

using namespace nanotop;

namespace {

NanoSpace reference_space() {
    const UniversePtr u = make_universe({"r1", "r2", "r3", "r4"});
    return build_nano_topology(
        partition_from_labels(u, {{"r1"}, {"r3"}, {"r2", "r4"}}),
        set_from_labels(u, {"r1", "r2"}));
}

std::vector<NanoSpace> random_spaces(int n, int count) {
    std::mt19937_64 rng(7);
    std::vector<NanoSpace> out;
    const auto parts = partitions_of(n);
    const UniversePtr u = canonical_universe(n);
    for (int i = 0; i < count; ++i) {
        const auto& blocks = parts[rng() % parts.size()];
        const Mask subset = static_cast<Mask>(rng()) & u->full_mask();
        out.push_back(build_nano_topology(make_partition(u, blocks),
                                          set_of(u, subset)));
    }
    return out;
}

}  // namespace

static void BM_FamilyEnumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto spaces = random_spaces(n, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        const NanoSpace& s = spaces[i++ % spaces.size()];
        benchmark::DoNotOptimize(
            enumerate_family(s, FamilyKind::nsalpha_open));
    }
}
BENCHMARK(BM_FamilyEnumeration)->Arg(4)->Arg(8)->Arg(12);

static void BM_ClassifyDirect(benchmark::State& state) {
    const NanoSpace s = reference_space();
    const FiniteMap h = identity_map(s.universe());
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(h, s, s));
    }
}
BENCHMARK(BM_ClassifyDirect);

static void BM_ClassifyTables(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto spaces = random_spaces(n, 16);
    std::vector<SpaceTables> tables;
    tables.reserve(spaces.size());
    for (const NanoSpace& s : spaces) tables.emplace_back(s);
    std::mt19937_64 rng(11);
    std::vector<std::vector<Point>> assignments;
    for (int i = 0; i < 256; ++i) {
        std::vector<Point> a(n);
        for (auto& p : a) p = static_cast<Point>(rng() % n);
        assignments.push_back(std::move(a));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& dom = tables[i % tables.size()];
        const auto& cod = tables[(i + 1) % tables.size()];
        benchmark::DoNotOptimize(
            classify(dom, cod, assignments[i % assignments.size()]));
        ++i;
    }
}
BENCHMARK(BM_ClassifyTables)->Arg(4)->Arg(6);

static void BM_TableConstruction(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto spaces = random_spaces(n, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(SpaceTables(spaces[i++ % spaces.size()]));
    }
}
BENCHMARK(BM_TableConstruction)->Arg(4)->Arg(8);

static void BM_SeparationMatrixSize3(benchmark::State& state) {
    InstanceBounds b;
    b.max_size = 3;
    b.mode = SpaceMode::nano;
    for (auto _ : state) {
        benchmark::DoNotOptimize(implication_matrix(b));
    }
}
BENCHMARK(BM_SeparationMatrixSize3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
