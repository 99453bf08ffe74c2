#include <hypercover/constructions.hh>
#include <hypercover/oracle.hh>
#include <hypercover/steiner.hh>
#include <hypercover/subgraph_cover.hh>

#include <benchmark/benchmark.h>

using namespace hypercover;

namespace
{
    void bm_triangle_degrees(benchmark::State & state)
    {
        auto g = k4_lower_linkgraph(static_cast<std::uint64_t>(state.range(0))).graph;
        for (auto _ : state)
            benchmark::DoNotOptimize(clique_degrees(g));
        state.SetComplexityN(state.range(0));
    }
    BENCHMARK(bm_triangle_degrees)->Arg(54)->Arg(108)->Arg(216)->Complexity();

    void bm_cover_search(benchmark::State & state)
    {
        auto h = k4minus_lower(static_cast<std::uint64_t>(state.range(0)), 3).graph;
        auto motif = Motif::k4_minus();
        Vertex star = h.vertex_count() - 1;
        for (auto _ : state)
            benchmark::DoNotOptimize(covers(h, motif, star));
    }
    BENCHMARK(bm_cover_search)->Arg(9)->Arg(15)->Arg(21);

    void bm_lift_min_degree(benchmark::State & state)
    {
        auto link = k4_lower_linkgraph(54).graph;
        for (auto _ : state) {
            auto lift = lift_link(link);
            benchmark::DoNotOptimize(min_i_degree(lift.graph, 1));
        }
    }
    BENCHMARK(bm_lift_min_degree);

    void bm_independence(benchmark::State & state)
    {
        auto s = sts(static_cast<unsigned>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(independence_number(s.triples));
    }
    BENCHMARK(bm_independence)->Arg(9)->Arg(15)->Arg(19);

    void bm_oracle_min_tmax(benchmark::State & state)
    {
        auto n = static_cast<unsigned>(state.range(0));
        for (auto _ : state)
            benchmark::DoNotOptimize(min_tmax(n, n * n / 4 + 1));
    }
    BENCHMARK(bm_oracle_min_tmax)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
}

BENCHMARK_MAIN();
