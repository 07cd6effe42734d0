#include <benchmark/benchmark.h>

#include "intcol/doubling.hpp"
#include "intcol/solver.hpp"

namespace {

using namespace intcol;

Graph complete(int n) {
    std::vector<Edge> e;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) e.push_back({i, j});
    return Graph(n, e);
}

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, e);
}

Graph petersen() { return parse_graph6("IheA@GUAo"); }

void BM_ComputeW_Complete(benchmark::State& state) {
    const auto g = complete(static_cast<int>(state.range(0)));
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        auto s = compute_W(g);
        nodes = s.nodes_expanded;
        benchmark::DoNotOptimize(s);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ComputeW_Complete)->DenseRange(4, 6)->Unit(benchmark::kMicrosecond);

void BM_ComputeW_Cycle(benchmark::State& state) {
    const auto g = cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(compute_W(g));
}
BENCHMARK(BM_ComputeW_Cycle)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMicrosecond);

// Not interval colorable: every palette from the cutoff down to 3 is refuted.
void BM_ComputeW_Petersen(benchmark::State& state) {
    const auto g = petersen();
    for (auto _ : state) benchmark::DoNotOptimize(compute_W(g));
}
BENCHMARK(BM_ComputeW_Petersen)->Unit(benchmark::kMillisecond);

void BM_ComputeW_DoubledComplete(benchmark::State& state) {
    const auto h = double_graph(complete(static_cast<int>(state.range(0)))).h;
    for (auto _ : state) benchmark::DoNotOptimize(compute_W(h));
}
BENCHMARK(BM_ComputeW_DoubledComplete)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
    const auto g = complete(4);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_W(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BruteForce)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_DoubleWithCertificate(benchmark::State& state) {
    const auto g = cycle(static_cast<int>(state.range(0)));
    const auto alpha = *compute_W(g).witness;
    for (auto _ : state) benchmark::DoNotOptimize(double_with_certificate(g, alpha));
}
BENCHMARK(BM_DoubleWithCertificate)->Arg(8)->Arg(30)->Unit(benchmark::kMicrosecond);

}  // namespace
