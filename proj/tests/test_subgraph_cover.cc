#include "support.hh"

#include <hypercover/adjacency.hh>
#include <hypercover/constructions.hh>
#include <hypercover/errors.hh>
#include <hypercover/motif.hh>
#include <hypercover/steiner.hh>
#include <hypercover/subgraph_cover.hh>

#include <doctest.h>

using namespace hypercover;

namespace
{
    auto cycle(unsigned n) -> RGraph
    {
        RGraphBuilder b(2, n);
        for (Vertex i = 0; i < n; ++i)
            b.add({i, (i + 1) % n});
        return std::move(b).build();
    }

    auto complete_bipartite(unsigned a, unsigned b) -> RGraph
    {
        RGraphBuilder builder(2, a + b);
        for (Vertex x = 0; x < a; ++x)
            for (Vertex y = a; y < a + b; ++y)
                builder.add({x, y});
        return std::move(builder).build();
    }

    auto naive_triangle_degree(const RGraph & g, Vertex x) -> std::uint64_t
    {
        std::uint64_t count = 0;
        for (Vertex y = 0; y < g.vertex_count(); ++y)
            for (Vertex z = y + 1; z < g.vertex_count(); ++z)
                if (y != x && z != x && g.has_edge({x, y}) && g.has_edge({x, z}) && g.has_edge({y, z}))
                    ++count;
        return count;
    }
}

TEST_SUITE("subgraph_cover")
{
    TEST_CASE("motif patterns")
    {
        CHECK(Motif::k4_minus().pattern().edge_count() == 3);
        CHECK(Motif::k4().pattern().edge_count() == 4);
        CHECK(Motif::c5().pattern().edge_count() == 5);
        CHECK(Motif::complete3(6).pattern().edge_count() == 20);
        CHECK(Motif::clique(4).uniformity() == 3);
        CHECK(Motif::parse("k4-") == Motif::k4_minus());
        CHECK(Motif::parse("k7") == Motif::complete3(7));
        CHECK(Motif::parse("clique5").pattern().uniformity() == 4);
        CHECK_THROWS_AS(Motif::parse("k3"), InvalidArgument);
        CHECK_THROWS_AS(Motif::parse("petersen"), InvalidArgument);
    }

    TEST_CASE("covers finds copies through the vertex")
    {
        auto k4 = complete_graph(3, 4);
        auto w = covers(k4, Motif::k4_minus(), 0);
        REQUIRE(w);
        CHECK(is_embedding(k4, Motif::k4_minus().pattern(), *w));
        CHECK(std::find(w->image.begin(), w->image.end(), Vertex{0}) != w->image.end());

        auto single = RGraph::from_edge_list(3, 5, {{0, 1, 2}});
        for (Vertex v = 0; v < 5; ++v)
            CHECK_FALSE(covers(single, Motif::k4_minus(), v));
    }

    TEST_CASE("uniformity mismatch is rejected")
    {
        CHECK_THROWS_AS(covers(complete_graph(2, 5), Motif::k4(), 0), InvalidArgument);
        CHECK_THROWS_AS(uncovered_vertices(complete_graph(4, 5), Motif::c5()), InvalidArgument);
    }

    TEST_CASE("uncovered vertices of constructions")
    {
        CHECK(uncovered_vertices(complete_graph(3, 4), Motif::k4()).uncovered.empty());

        auto c = k4minus_lower(9, 3);
        auto report = uncovered_vertices(c.graph, Motif::k4_minus());
        CHECK(report.uncovered == std::vector<Vertex>{8});
        CHECK(report.witness_per_vertex.size() == 8);
        for (auto & [v, w] : report.witness_per_vertex) {
            CHECK(is_embedding(c.graph, Motif::k4_minus().pattern(), w));
            CHECK(std::find(w.image.begin(), w.image.end(), v) != w.image.end());
        }

        auto blown = blowup_sts(sts(9).triples, 1);
        auto k6 = uncovered_vertices(blown.graph, Motif::complete3(6));
        CHECK(std::find(k6.uncovered.begin(), k6.uncovered.end(), Vertex{9}) != k6.uncovered.end());
    }

    TEST_CASE("reports do not depend on the worker count")
    {
        auto g = testing::random_graph(3, 10, 1, 2, 5);
        auto one = uncovered_vertices(g, Motif::k4_minus(), 1);
        auto many = uncovered_vertices(g, Motif::k4_minus(), 4);
        CHECK(one.uncovered == many.uncovered);
        CHECK(one.witness_per_vertex == many.witness_per_vertex);
    }

    TEST_CASE("covering is monotone under edge addition")
    {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto g = testing::random_graph(3, 8, 1, 4, seed);
            RGraphBuilder b(3, 8);
            for (auto e : g.edges())
                b.add(e);
            b.add({static_cast<Vertex>(seed % 6), 6, 7});
            auto bigger = std::move(b).build();
            for (Vertex v = 0; v < 8; ++v)
                if (covers(g, Motif::k4_minus(), v))
                    CHECK(covers(bigger, Motif::k4_minus(), v));
        }
    }

    TEST_CASE("clique degrees")
    {
        auto k4 = complete_graph(2, 4);
        for (Vertex x = 0; x < 4; ++x)
            CHECK(clique_degree(k4, x, 3) == 3);
        auto link = k4_lower_linkgraph(54);
        CHECK(clique_degree(link.graph, 0, 3) == 432);
        CHECK(clique_degree(complete_graph(3, 6), 0, 4) == 10);
        CHECK_THROWS_AS(clique_degree(k4, 0, 4), InvalidArgument);
    }

    TEST_CASE("triangle degrees agree with a naive scan")
    {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            unsigned n = 4 + seed % 17;
            auto g = testing::random_graph(2, n, 1 + seed % 3, 4, seed);
            auto degrees = clique_degrees(g);
            std::uint64_t sum = 0;
            for (Vertex x = 0; x < n; ++x) {
                CHECK(degrees[x] == naive_triangle_degree(g, x));
                sum += degrees[x];
            }
            CHECK(sum == 3 * triangle_count(g));

            std::uint64_t books = 0;
            for (auto e : g.edges())
                books += book_size(g, e[0], e[1]);
            CHECK(books == 3 * triangle_count(g));
        }
    }

    TEST_CASE("t_max")
    {
        CHECK(t_max(complete_bipartite(3, 4)).value == 0);
        CHECK(t_max(RGraph(2, 5)).value == 0);
        CHECK(t_max(complete_graph(2, 4)).value == 3);
        for (auto phi : {std::vector<unsigned>{1, 2, 0}, std::vector<unsigned>{2, 0, 1}}) {
            auto c = tau_upper_interval(36, Rational(2, 3), 2, phi);
            CHECK(t_max(c.graph).value == 144);
        }
        auto path = RGraph::from_edge_list(2, 4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
        auto m = t_max(path);
        CHECK(m.value == 1);
        CHECK(m.argmax == 0);
    }

    TEST_CASE("books")
    {
        auto k4 = complete_graph(2, 4);
        CHECK(book_size(k4, 0, 1) == 2);
        CHECK(book_number(k4).value == 2);
        CHECK(book_number(complete_bipartite(3, 3)).value == 0);
        CHECK_FALSE(book_number(RGraph(2, 4)).edge);
        auto efg = efg_graph({3, 5}, 1);
        for (auto e : efg.graph.edges())
            CHECK(book_size(efg.graph, e[0], e[1]) == 3);
        CHECK_THROWS_AS(book_size(complete_bipartite(2, 2), 0, 1), InvalidArgument);
    }

    TEST_CASE("bipartite edit distance")
    {
        CHECK(bipartite_edit_distance(complete_graph(2, 3)).inside_edges == 1);
        CHECK(bipartite_edit_distance(cycle(5)).inside_edges == 1);
        CHECK(bipartite_edit_distance(complete_graph(2, 4)).inside_edges == 2);
        CHECK(bipartite_edit_distance(complete_bipartite(4, 5)).inside_edges == 0);
        CHECK(bipartite_edit_distance(cycle(6)).inside_edges == 0);
        CHECK_THROWS_AS(bipartite_edit_distance(RGraph(2, 25)), LimitExceeded);

        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto g = testing::random_graph(2, 12, 1, 2, seed);
            auto exact = bipartite_edit_distance(g);
            auto heuristic = bipartite_edit_distance_upper_bound(g);
            CHECK(exact.exact);
            CHECK_FALSE(heuristic.exact);
            CHECK(heuristic.inside_edges >= exact.inside_edges);
            std::uint64_t inside = 0;
            for (auto e : g.edges())
                if (exact.side.contains(e[0]) == exact.side.contains(e[1]))
                    ++inside;
            CHECK(inside == exact.inside_edges);
        }
    }

    TEST_CASE("independence number")
    {
        CHECK(independence_number(sts(7).triples).value == 4);
        CHECK(independence_number(sts(9).triples).value == 4);
        CHECK(independence_number(RGraph(3, 5)).value == 5);
        CHECK(independence_number(complete_graph(2, 6)).value == 1);
        auto a = independence_number(sts(7).triples);
        for_each_subset(7, 3, [&] (std::span<const Vertex> s) {
            if (a.witness.contains(s[0]) && a.witness.contains(s[1]) && a.witness.contains(s[2]))
                CHECK_FALSE(sts(7).triples.has_edge(s));
        });
        CHECK_THROWS_AS(independence_number(RGraph(3, 25)), LimitExceeded);
    }
}
