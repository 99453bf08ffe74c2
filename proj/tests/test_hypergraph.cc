#include "support.hh"

#include <hypercover/errors.hh>
#include <hypercover/hypergraph.hh>

#include <doctest.h>

#include <set>

using namespace hypercover;

TEST_SUITE("hypergraph")
{
    TEST_CASE("from_edge_list sorts and deduplicates")
    {
        auto g = RGraph::from_edge_list(3, 4, {{2, 1, 0}, {0, 1, 3}, {0, 2, 3}, {1, 0, 2}});
        CHECK(g.edge_count() == 3);
        CHECK(g.has_edge({0, 1, 2}));
        CHECK(g.has_edge({3, 0, 1}));
        CHECK_FALSE(g.has_edge({1, 2, 3}));
        std::vector<std::vector<Vertex>> seen;
        for (auto e : g.edges())
            seen.emplace_back(e.begin(), e.end());
        CHECK(seen == std::vector<std::vector<Vertex>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    }

    TEST_CASE("empty and 2-uniform inputs")
    {
        CHECK(RGraph::from_edge_list(3, 4, {}).edge_count() == 0);
        auto triangle = RGraph::from_edge_list(2, 3, {{0, 1}, {1, 2}, {2, 0}});
        CHECK(triangle.edge_count() == 3);
        CHECK(triangle.has_edge({0, 2}));
    }

    TEST_CASE("malformed edge lists are rejected")
    {
        CHECK_THROWS_AS(RGraph::from_edge_list(3, 4, {{0, 1}}), InvalidArgument);
        CHECK_THROWS_AS(RGraph::from_edge_list(3, 4, {{0, 1, 4}}), InvalidArgument);
        CHECK_THROWS_AS(RGraph::from_edge_list(3, 4, {{0, 1, 1}}), InvalidArgument);
        CHECK_THROWS_AS(RGraph::from_edge_list(1, 4, {{0}}), InvalidArgument);
        CHECK_THROWS_AS(RGraph::from_edge_list(5, 4, {}), InvalidArgument);
    }

    TEST_CASE("degree of sets")
    {
        auto k4 = complete_graph(3, 4);
        auto k4m = RGraph::from_edge_list(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
        CHECK(degree(k4, VertexSet{0}) == 3);
        CHECK(degree(k4m, VertexSet{1, 2}) == 1);
        CHECK(degree(RGraph(3, 4), VertexSet{2}) == 0);
        CHECK(degree(k4, VertexSet{0, 1, 2}) == 1);
        CHECK(degree(k4, VertexSet{}) == 4);
        CHECK_THROWS_AS(degree(k4, VertexSet{0, 1, 2, 3}), InvalidArgument);
        CHECK_THROWS_AS(degree(k4, VertexSet{7}), InvalidArgument);
    }

    TEST_CASE("minimum i-degree with witness")
    {
        auto k4 = complete_graph(3, 4);
        CHECK(min_i_degree(k4, 2).value == 2);
        CHECK(min_i_degree(k4, 1).value == 3);
        auto k4m = RGraph::from_edge_list(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
        auto m = min_i_degree(k4m, 2);
        CHECK(m.value == 1);
        CHECK(m.witness == VertexSet{1, 2});
        CHECK(min_i_degree(k4m, 1).witness == VertexSet{1});
        CHECK_THROWS_AS(min_i_degree(k4, 0), InvalidArgument);
        CHECK_THROWS_AS(min_i_degree(k4, 3), InvalidArgument);
    }

    TEST_CASE("links relabel order-preservingly")
    {
        auto k4 = complete_graph(3, 4);
        auto l = link(k4, VertexSet{3});
        CHECK(l.graph == complete_graph(2, 3));
        CHECK(l.original == std::vector<Vertex>{0, 1, 2});

        auto k4m = RGraph::from_edge_list(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
        CHECK(link(k4m, VertexSet{0}).graph == complete_graph(2, 3));

        auto l1 = link(k4m, VertexSet{0, 2});
        CHECK(l1.graph.uniformity() == 1);
        CHECK(l1.graph.edge_count() == 2);
        CHECK(l1.original == std::vector<Vertex>{1, 3});

        CHECK_THROWS_AS(link(k4, VertexSet{}), InvalidArgument);
        CHECK_THROWS_AS(link(k4, VertexSet{0, 1, 2}), InvalidArgument);
    }

    TEST_CASE("edge density is exact")
    {
        CHECK(edge_density(complete_graph(3, 4)) == 1);
        CHECK(edge_density(RGraph(3, 6)) == 0);
        CHECK(edge_density(RGraph::from_edge_list(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}})) == Rational(3, 4));
    }

    TEST_CASE("colex rank is a bijection onto [0, C(n, r))")
    {
        auto g = RGraph(3, 9);
        std::set<std::uint64_t> ranks;
        for_each_subset(9, 3, [&] (std::span<const Vertex> s) { ranks.insert(g.rank(s)); });
        CHECK(ranks.size() == 84);
        CHECK(*ranks.rbegin() == 83);
    }

    TEST_CASE("handshake and link consistency on random graphs")
    {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            unsigned r = 2 + seed % 3, n = 6 + seed % 5;
            auto g = testing::random_graph(r, n, 1, 2, seed);
            auto profile = degree_profile(g);
            std::uint64_t sum = 0;
            for (auto d : profile.per_vertex) {
                CHECK(d >= profile.min_degree);
                CHECK(d <= profile.max_degree);
                sum += d;
            }
            CHECK(sum == r * g.edge_count());
            for_each_subset(n, r - 1, [&] (std::span<const Vertex> s) {
                VertexSet set(std::vector<Vertex>(s.begin(), s.end()));
                CHECK(link(g, set).graph.edge_count() == degree(g, set));
            });
        }
    }

    TEST_CASE("adding an edge never lowers a degree")
    {
        auto g = testing::random_graph(3, 8, 1, 3, 11);
        auto before = degree_profile(g).per_vertex;
        RGraphBuilder b(3, 8);
        for (auto e : g.edges())
            b.add(e);
        b.add({0, 5, 7});
        auto after = degree_profile(std::move(b).build()).per_vertex;
        for (std::size_t v = 0; v < 8; ++v)
            CHECK(after[v] >= before[v]);
    }
}
