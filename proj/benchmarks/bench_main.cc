#include <tba/classify.hh>
#include <tba/construct.hh>
#include <tba/finder.hh>
#include <tba/laws.hh>

#include <benchmark/benchmark.h>

using namespace tba;

static void enumerate_size(benchmark::State & state)
{
    EnumerateOptions o;
    o.size = static_cast<std::size_t>(state.range(0));
    o.up_to_iso = true;
    o.jobs = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) {
        auto r = enumerate(o);
        benchmark::DoNotOptimize(r.raw_count);
        state.counters["nodes"] = static_cast<double>(r.statistics.nodes);
    }
}
BENCHMARK(enumerate_size)->Args({4, 1})->Args({5, 1})->Args({5, 2})->Unit(benchmark::kMillisecond);

static void canonical(benchmark::State & state, const char * name)
{
    auto m = catalog_model(name);
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(m));
}
BENCHMARK_CAPTURE(canonical, gf4, "gf4");
BENCHMARK_CAPTURE(canonical, ut2gf2, "ut2gf2");

static void axioms(benchmark::State & state, const char * name)
{
    auto m = catalog_model(name);
    for (auto _ : state)
        benchmark::DoNotOptimize(axiom_suite(m));
}
BENCHMARK_CAPTURE(axioms, n4paper, "n4paper");
BENCHMARK_CAPTURE(axioms, gf2_4, "gf2^4")->Unit(benchmark::kMillisecond);

static void classify_model(benchmark::State & state, const char * name)
{
    auto m = catalog_model(name);
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(m));
}
BENCHMARK_CAPTURE(classify_model, ut2gf2, "ut2gf2")->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
