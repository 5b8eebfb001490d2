#include <benchmark/benchmark.h>

#include "qslice/classify.hpp"
#include "qslice/numdiff.hpp"
#include "qslice/sampling.hpp"
#include "qslice/slice_function.hpp"
#include "qslice/stem.hpp"

using namespace qslice;

namespace {

StemFunction golden_cubic() {
    return from_ordered_monomials({{{1, 3}, RQuat::one()}, {{2, 3, 3}, RQuat::unit_k()}},
                                  3);
}

StemFunction dense_stem(std::uint32_t arity, std::uint32_t degree) {
    Rng rng(1234);
    return random_stem(rng, arity, 6, degree);
}

}  // namespace

static void BM_FromOrderedMonomials(benchmark::State& state) {
    Rng rng(7);
    auto terms = random_ordered_monomials(rng, 4, 6, static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(from_ordered_monomials(terms, 4));
    }
}
BENCHMARK(BM_FromOrderedMonomials)->Arg(4)->Arg(6)->Arg(8);

static void BM_StemTensor(benchmark::State& state) {
    StemFunction f = dense_stem(4, static_cast<std::uint32_t>(state.range(0)));
    StemFunction g = dense_stem(4, static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(stem_tensor(f, g));
    }
}
BENCHMARK(BM_StemTensor)->Arg(2)->Arg(4);

static void BM_SphericalDerivative(benchmark::State& state) {
    StemFunction f = dense_stem(4, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spherical_derivative_stem(f, 1));
    }
}
BENCHMARK(BM_SphericalDerivative);

static void BM_Evaluate(benchmark::State& state) {
    StemFunction f = dense_stem(4, 4);
    Rng rng(99);
    PointHn x = random_point(rng, 4, 2.0, 0.25);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(f, x));
    }
}
BENCHMARK(BM_Evaluate);

static void BM_Classify(benchmark::State& state) {
    StemFunction f = dense_stem(4, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(f));
    }
}
BENCHMARK(BM_Classify);

static void BM_CrfDbar(benchmark::State& state) {
    StemFunction f = golden_cubic();
    BlackBoxField field = field_of(f);
    Rng rng(5);
    PointHn x = random_point(rng, 3, 2.0, 0.25);
    StencilConfig cfg{1e-4, 2, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(crf_dbar(field, 2, x, cfg));
    }
}
BENCHMARK(BM_CrfDbar);

static void BM_VerifyHarmonicity(benchmark::State& state) {
    StemFunction f = golden_cubic();
    SamplePlan plan{42, static_cast<int>(state.range(0)), 2.0, 0.25};
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_harmonicity(f, 2, plan));
    }
}
BENCHMARK(BM_VerifyHarmonicity)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
