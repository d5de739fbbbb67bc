#include <homocat/cellres.hpp>
#include <homocat/excseq.hpp>

#include <benchmark/benchmark.h>

using namespace homocat;

static void BM_ext_scan_14x14(benchmark::State& state) {
    const Geometry g{Geometry::Kind::IGrassC, 2, 3};
    std::vector<GLWeight> labels;
    for (long long a = 0; a <= 3; ++a)
        for (long long b = 0; b <= 4 - a; ++b) labels.push_back({a + b, b});
    for (auto _ : state) {
        Int total = 0;
        for (const auto& a : labels)
            for (const auto& b : labels)
                for (const auto& [deg, dim] : ext_table(g, a, b).total_dim)
                    total += dim;
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_ext_scan_14x14);

static void BM_heart_scan(benchmark::State& state) {
    for (auto _ : state) {
        auto scan = igrass37_scan();
        benchmark::DoNotOptimize(scan);
    }
}
BENCHMARK(BM_heart_scan);

static void BM_cellular_resolution(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        bool ok = is_resolution(yn_build(n), xy_ideal(n));
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_cellular_resolution)->DenseRange(1, 4);

static void BM_lr_decompose(benchmark::State& state) {
    const GLWeight lam = {4, 2, 1, 0}, mu = {3, 3, 1, 0};
    for (auto _ : state) {
        auto dec = lr_decompose(lam, mu, 4);
        benchmark::DoNotOptimize(dec);
    }
}
BENCHMARK(BM_lr_decompose);

BENCHMARK_MAIN();
