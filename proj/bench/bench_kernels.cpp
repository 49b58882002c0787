// Serial reference kernels against the OpenMP kernels on cyclic Cayley tables.

#include <benchmark/benchmark.h>

#include "regrep/cayley.hpp"
#include "regrep/kernels.hpp"

using namespace regrep;

namespace {

cayley::CayleyMatrix table(std::int64_t n) {
    return cayley::build(FiniteAbelianGroup({n}), cayley::TableVariant::plain);
}

template <auto Kernel>
void run(benchmark::State& state) {
    const auto t = table(state.range(0));
    for (auto _ : state) {
        auto p = Kernel(t.grid());
        benchmark::DoNotOptimize(p);
    }
    state.counters["threads"] = kernels::max_threads();
}

}  // namespace

BENCHMARK(run<kernels::serial::permanent_ryser>)->Name("ryser/serial")->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(run<kernels::permanent_ryser>)->Name("ryser/omp")->DenseRange(5, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(run<kernels::serial::permanent_leibniz>)->Name("leibniz/serial")->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(run<kernels::permanent_leibniz>)->Name("leibniz/omp")->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(run<kernels::serial::determinant_leibniz>)->Name("det/serial")->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(run<kernels::determinant_leibniz>)->Name("det/omp")->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
