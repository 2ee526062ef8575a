// Microbenchmarks for the hot paths: the two iterate-count engines (the
// crossover at large n is tuned from these numbers), the exact linear
// algebra, the spectral split, and the root-refinement measure.

#include <benchmark/benchmark.h>

#include "torfix/classify.hpp"
#include "torfix/fixpoints.hpp"
#include "torfix/gauss.hpp"
#include "torfix/mahler.hpp"
#include "torfix/matrix.hpp"
#include "torfix/scan.hpp"
#include "torfix/spectral.hpp"

using namespace torfix;

namespace {

const IntPoly kGolden{1, 4, 4, 0, 4, 4, 1};
const IntPoly kLehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

void bm_delta_resultant(benchmark::State& state) {
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(delta_n_resultant(kLehmer, n));
}
BENCHMARK(bm_delta_resultant)->Arg(32)->Arg(256)->Arg(2048)->Arg(16384);

void bm_delta_companion(benchmark::State& state) {
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(delta_n_companion(kLehmer, n));
}
BENCHMARK(bm_delta_companion)->Arg(32)->Arg(256)->Arg(2048)->Arg(16384);

void bm_charpoly(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    GaussianMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            m.at(i, j) = GaussInt(static_cast<long>((i * 7 + j * 3) % 5) - 2,
                                  static_cast<long>((i * 5 + j * 11) % 5) - 2);
    for (auto _ : state) benchmark::DoNotOptimize(charpoly(m));
}
BENCHMARK(bm_charpoly)->Arg(4)->Arg(8)->Arg(12);

void bm_split(benchmark::State& state) {
    const IntPoly p = family_poly(static_cast<unsigned long>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cyclotomic_split(p));
}
BENCHMARK(bm_split)->Arg(5)->Arg(20)->Arg(50);

void bm_mahler(benchmark::State& state) {
    const auto bits = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mahler_measure(kLehmer, bits));
}
BENCHMARK(bm_mahler)->Arg(64)->Arg(128)->Arg(512);

void bm_classify(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(classify(kGolden));
}
BENCHMARK(bm_classify);

} // namespace

BENCHMARK_MAIN();
