#include <benchmark/benchmark.h>

#include <string>

#include "qstretch/cli/algebra_file.hpp"
#include "qstretch/groebner.hpp"
#include "qstretch/stretch.hpp"
#include "qstretch/structured_algebra.hpp"
#include "qstretch/transport.hpp"

using namespace qstretch;

namespace {

const char* const kFixtures[] = {"example_1_5", "fg2", "truncated_x3", "ungraded_f7"};

cli::Presentation load(std::size_t i) {
    return cli::read_algebra_file(std::string(QSTRETCH_FIXTURE_DIR) + "/" + kFixtures[i] + ".alg");
}

QuotientAlgebra build(const cli::Presentation& p) { return QuotientAlgebra::build(p.quiver, p.relations, p.field); }

void BM_Buchberger(benchmark::State& state) {
    auto p = load(static_cast<std::size_t>(state.range(0)));
    auto cap = default_degree_cap(p.relations);
    for (auto _ : state) benchmark::DoNotOptimize(buchberger(p.quiver, p.relations, cap, p.field));
    state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_Buchberger)->DenseRange(0, 3);

void BM_Stretch(benchmark::State& state) {
    auto lambda = build(load(1));
    auto A = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(stretch_algebra(lambda, A));
}
BENCHMARK(BM_Stretch)->DenseRange(1, 4);

void BM_ResolveTop(benchmark::State& state) {
    auto lambda = build(load(1));
    auto sp = stretch_algebra(lambda, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(resolve_top(sp.algebra, 6));
}
BENCHMARK(BM_ResolveTop)->DenseRange(1, 4);

void BM_Transport(benchmark::State& state) {
    auto lambda = build(load(0));
    auto sp = stretch_algebra(lambda, static_cast<std::size_t>(state.range(0)));
    auto res = resolve_top(lambda, 6);
    for (auto _ : state) {
        auto stretched_res = resolve_top(sp.algebra, 6);
        benchmark::DoNotOptimize(verify_transport(res, lambda, stretched_res, sp));
    }
}
BENCHMARK(BM_Transport)->DenseRange(1, 3);

void BM_Envelope(benchmark::State& state) {
    auto lambda = build(load(static_cast<std::size_t>(state.range(0))));
    auto sp = stretch_algebra(lambda, 2);
    auto a = StructuredAlgebra::from_quotient(sp.algebra);
    for (auto _ : state) benchmark::DoNotOptimize(StructuredAlgebra::enveloping(a));
    state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_Envelope)->DenseRange(0, 1);

void BM_BimoduleLedger(benchmark::State& state) {
    auto lambda = build(load(1));
    auto sp = stretch_algebra(lambda, 2);
    for (auto _ : state) benchmark::DoNotOptimize(verify_bimodule_formulas(sp));
}
BENCHMARK(BM_BimoduleLedger);

}  // namespace

BENCHMARK_MAIN();
