#include <benchmark/benchmark.h>

#include "ltlfmt/bench/families.hpp"
#include "ltlfmt/encoder/encoder.hpp"
#include "ltlfmt/nnf.hpp"
#include "ltlfmt/parser.hpp"
#include "ltlfmt/printer.hpp"
#include "ltlfmt/solver.hpp"

using namespace ltlfmt;

namespace {

void BM_Parse(benchmark::State& state)
{
    auto text = bench::generate_source(bench::Family::LiaSumUnsat, static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(parse(text));
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_Parse)->Arg(8)->Arg(64)->Arg(256);

void BM_Nnf(benchmark::State& state)
{
    auto p = bench::gen_benchmark(bench::Family::LiaSumUnsat, static_cast<unsigned>(state.range(0)));
    auto negated = SurfaceFormula::negation(to_surface(p.formula));
    for (auto _ : state)
        benchmark::DoNotOptimize(to_nnf(negated));
}
BENCHMARK(BM_Nnf)->Arg(8)->Arg(64);

void BM_Unravel(benchmark::State& state)
{
    auto p = bench::gen_benchmark(bench::Family::EufLiaRecursion, 10);
    auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        Encoder enc(p.formula);
        auto f = enc.unravel_base();
        for (std::size_t i = 0; i < k; ++i)
            f = GroundFormula::conj({f, enc.unravel_delta(i)});
        benchmark::DoNotOptimize(to_smtlib(f));
    }
}
BENCHMARK(BM_Unravel)->Arg(10)->Arg(100);

void BM_Solve(benchmark::State& state, bench::Family fam)
{
    auto p = bench::gen_benchmark(fam, static_cast<unsigned>(state.range(0)));
    SolveOptions o;
    o.backend.executable = LTLFMT_BENCH_SOLVER;
    for (auto _ : state) {
        auto r = solve(p.formula, p.signature, o);
        state.counters["k"] = static_cast<double>(r.k);
    }
}
BENCHMARK_CAPTURE(BM_Solve, lia_counter, bench::Family::LiaCounter)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, lia_sum_unsat, bench::Family::LiaSumUnsat)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, lra_decade, bench::Family::LraDecade)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, euf_lia_recursion, bench::Family::EufLiaRecursion)->Arg(10)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
