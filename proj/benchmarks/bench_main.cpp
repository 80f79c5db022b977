#include <benchmark/benchmark.h>

#include "parayam/battery.hpp"
#include "parayam/builtin.hpp"
#include "parayam/fuzz.hpp"
#include "parayam/geometry.hpp"
#include "parayam/parser.hpp"
#include "parayam/soliton.hpp"

using namespace parayam;

namespace {

void BM_NormalizeRandomExpressions(benchmark::State& state) {
    for (auto _ : state) {
        state.PauseTiming();
        ExprFuzzer fuzzer(0xBEEF + static_cast<std::uint64_t>(state.iterations()));
        std::vector<ScalarExpr> exprs;
        exprs.reserve(64);
        for (int i = 0; i < 64; ++i) exprs.push_back(fuzzer.next());
        state.ResumeTiming();
        for (const ScalarExpr& e : exprs) benchmark::DoNotOptimize(e.renormalized());
    }
}
BENCHMARK(BM_NormalizeRandomExpressions);

void BM_ParseAndDifferentiate(benchmark::State& state) {
    ExprFuzzer fuzzer(0xF00D);
    const SymbolTable& table = fuzzer.table();
    const ScalarExpr e =
        parse_expr("(x^3 - 2*x*y + exp(2*x + y))/(x - y + 3) + exp(-x)*z^2", table);
    for (auto _ : state) {
        benchmark::DoNotOptimize(differentiate(e, 0, table));
        benchmark::DoNotOptimize(differentiate(e, 1, table));
        benchmark::DoNotOptimize(differentiate(e, 2, table));
    }
}
BENCHMARK(BM_ParseAndDifferentiate);

void BM_CurvatureFrameExample(benchmark::State& state) {
    const ModelBundle bundle = make_builtin("builtin:example_5_1");
    for (auto _ : state) benchmark::DoNotOptimize(curvature(bundle.model));
}
BENCHMARK(BM_CurvatureFrameExample);

void BM_CurvatureChartExample(benchmark::State& state) {
    const ModelBundle bundle = make_builtin("builtin:example_5_2");
    for (auto _ : state) benchmark::DoNotOptimize(curvature(bundle.model));
}
BENCHMARK(BM_CurvatureChartExample);

void BM_StructureClassification(benchmark::State& state) {
    const ModelBundle bundle = make_builtin("builtin:example_5_1");
    const CurvatureData curv = curvature(bundle.model);
    for (auto _ : state) benchmark::DoNotOptimize(classify(*bundle.structure, curv));
}
BENCHMARK(BM_StructureClassification);

void BM_IdentitySuite(benchmark::State& state) {
    const ModelBundle bundle = make_builtin("builtin:example_5_1?u=0");
    SolitonData data{bundle.structure->xi(), std::nullopt, ScalarExpr::integer(-2),
                     ScalarExpr::integer(3)};
    const SolitonContext ctx = make_context(bundle.model, bundle.structure, std::move(data));
    for (auto _ : state)
        for (IdentityId id : all_identities())
            benchmark::DoNotOptimize(identity_check(ctx, id));
}
BENCHMARK(BM_IdentitySuite);

void BM_ReproducePaperBattery(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(reproduce_paper_battery());
}
BENCHMARK(BM_ReproducePaperBattery);

} // namespace

BENCHMARK_MAIN();
