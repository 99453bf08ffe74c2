#include "support.hh"

#include <hypercover/constructions.hh>
#include <hypercover/errors.hh>
#include <hypercover/formulas.hh>
#include <hypercover/hypergraph_io.hh>
#include <hypercover/steiner.hh>
#include <hypercover/subgraph_cover.hh>

#include <doctest.h>

using namespace hypercover;

namespace
{
    auto all_claims_pass(const Construction & c, unsigned cover_limit = 64) -> bool
    {
        ManifestCheckOptions options;
        options.cover_vertex_limit = cover_limit;
        bool ok = true;
        for (auto & check : check_manifest(c.graph, c.manifest, options)) {
            INFO(check.name << ": observed " << check.observed << ", expected " << check.expected);
            CHECK(check.passed);
            ok = ok && check.passed;
        }
        return ok;
    }

    auto vertex_degree(const RGraph & g, Vertex v) -> std::uint64_t
    {
        return degree(g, VertexSet{v});
    }
}

TEST_SUITE("constructions")
{
    TEST_CASE("k4minus_lower")
    {
        auto c = k4minus_lower(9, 3);
        CHECK(c.graph.vertex_count() == 9);
        CHECK(min_i_degree(c.graph, 1).value == 12);
        CHECK(vertex_degree(c.graph, 8) == 12);
        for (Vertex v = 0; v < 8; ++v)
            CHECK(vertex_degree(c.graph, v) == 15);
        CHECK(all_claims_pass(c));

        auto small = k4minus_lower(5, 1);
        CHECK(min_i_degree(small.graph, 1).value == 2);
        CHECK(vertex_degree(small.graph, 0) == 4);
        CHECK(all_claims_pass(small));

        CHECK_THROWS_AS(k4minus_lower(8, 3), PreconditionViolation);
        CHECK_THROWS_AS(k4minus_lower(9, 0), PreconditionViolation);
        CHECK_THROWS_AS(k4minus_lower(9, 5), PreconditionViolation);
    }

    TEST_CASE("k4minus_lower link is bipartite and regular")
    {
        for (std::uint64_t n : {9u, 13u, 21u}) {
            auto c = k4minus_lower(n, d_star(n).floor, 7);
            auto x = extract_link(c.graph, static_cast<Vertex>(n - 1));
            CHECK(x.link.graph.edge_count() == (n - 1) / 2 * d_star(n).floor);
            CHECK(bipartite_edit_distance(x.link.graph).inside_edges == 0);
            auto profile = degree_profile(x.link.graph);
            CHECK(profile.min_degree == d_star(n).floor);
            CHECK(profile.max_degree == d_star(n).floor);
            CHECK(all_claims_pass(c));
        }
    }

    TEST_CASE("k4minus_lower seeds")
    {
        auto a = k4minus_lower(13, 4, 1);
        auto b = k4minus_lower(13, 4, 1);
        auto plain = k4minus_lower(13, 4);
        CHECK(format_hypergraph(a.graph) == format_hypergraph(b.graph));
        CHECK(format_hypergraph(plain.graph) == format_hypergraph(k4minus_lower(13, 4).graph));
        CHECK(to_json(a.manifest).dump() == to_json(b.manifest).dump());
        CHECK(min_i_degree(a.graph, 1).value == min_i_degree(plain.graph, 1).value);
    }

    TEST_CASE("k4_lower_linkgraph")
    {
        auto c = k4_lower_linkgraph(54);
        auto profile = degree_profile(c.graph);
        CHECK(profile.min_degree == 38);
        CHECK(profile.max_degree == 38);
        for (auto t : clique_degrees(c.graph))
            CHECK(t == 432);
        CHECK(all_claims_pass(c));
        CHECK_THROWS_AS(k4_lower_linkgraph(27), PreconditionViolation);
    }

    TEST_CASE("k4_lower_linkgraph at 108")
    {
        auto c = k4_lower_linkgraph(108);
        CHECK(degree_profile(c.graph).min_degree == 76);
        CHECK(t_max(c.graph).value == 1728);
        CHECK(all_claims_pass(c));
    }

    TEST_CASE("lift_link of the K4 link graph")
    {
        auto h = lift_link(k4_lower_linkgraph(54).graph);
        CHECK(h.graph.vertex_count() == 55);
        CHECK(vertex_degree(h.graph, 54) == 1026);
        CHECK(vertex_degree(h.graph, 0) == 984);
        CHECK(min_i_degree(h.graph, 1).value == 984);
        CHECK(all_claims_pass(h, 0));
        CHECK_FALSE(covers(h.graph, Motif::k4(), 54));
    }

    TEST_CASE("lift_link small cases")
    {
        auto star = lift_link(complete_graph(2, 3));
        CHECK(star.graph == RGraph::from_edge_list(3, 4, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
        auto single = lift_link(RGraph(2, 3));
        CHECK(single.graph == RGraph::from_edge_list(3, 4, {{0, 1, 2}}));
        auto back = extract_link(lift_link(complete_graph(2, 4)).graph, 4);
        CHECK(back.link.graph == complete_graph(2, 4));
        CHECK(back.is_lift);
        CHECK(back.uncovered_condition);
    }

    TEST_CASE("lift and extract round trip on random graphs")
    {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            unsigned n = 3 + seed % 13;
            auto g = testing::random_graph(2, n, 1 + seed % 3, 4, seed);
            auto h = lift_link(g);
            auto x = extract_link(h.graph, n);
            REQUIRE(x.link.graph == g);
            CHECK(x.is_lift);
            CHECK(x.uncovered_condition);
            CHECK(vertex_degree(h.graph, n) == g.edge_count());
            std::uint64_t best = g.edge_count();
            for (Vertex v = 0; v < n; ++v) {
                auto expected = binomial(n - 1, 2) - clique_degree(g, v, 3) + vertex_degree(g, v);
                CHECK(vertex_degree(h.graph, v) == expected);
                best = std::min<std::uint64_t>(best, expected);
            }
            CHECK(min_i_degree(h.graph, 1).value == best);
        }
    }

    TEST_CASE("extract_link detects graphs that are not lifts")
    {
        auto k4minus = k4minus_lower(9, 3);
        auto x = extract_link(k4minus.graph, 8);
        CHECK(x.link.graph.edge_count() == 12);
        auto full = extract_link(complete_graph(3, 5), 4);
        CHECK_FALSE(full.is_lift);
        CHECK_FALSE(full.uncovered_condition);
    }

    TEST_CASE("c5_lower")
    {
        std::uint64_t expected[] = {0, 0, 0, 18, 34, 55};
        for (std::uint64_t n = 3; n <= 5; ++n) {
            auto c = c5_lower(n);
            CHECK(c.graph.vertex_count() == 3 * n + 1);
            CHECK(min_i_degree(c.graph, 1).value == expected[n]);
            CHECK(vertex_degree(c.graph, static_cast<Vertex>(3 * n)) == expected[n]);
            CHECK(all_claims_pass(c, n <= 4 ? 64 : 0));
        }
        auto three = c5_lower(3);
        CHECK(vertex_degree(three.graph, 0) == 29);
        CHECK(vertex_degree(three.graph, 3) == 23);
        CHECK_FALSE(covers(three.graph, Motif::c5(), 9));
        CHECK_THROWS_AS(c5_lower(1), PreconditionViolation);
    }

    TEST_CASE("k5_lower")
    {
        auto c = k5_lower(3);
        CHECK(c.graph.vertex_count() == 6);
        CHECK(c.graph.edge_count() == 18);
        CHECK(min_i_degree(c.graph, 1).value == 9);
        CHECK(uncovered_vertices(c.graph, Motif::complete3(5)).uncovered.size() == 6);
        CHECK(all_claims_pass(c));
        CHECK(k5_lower(2).graph == complete_graph(3, 4));
        CHECK_THROWS_AS(k5_lower(1), PreconditionViolation);
    }

    TEST_CASE("blowup_sts")
    {
        auto nine = blowup_sts(sts(9).triples, 1, 5);
        CHECK(nine.graph.vertex_count() == 10);
        CHECK(vertex_degree(nine.graph, 9) == 36);
        CHECK(min_i_degree(nine.graph, 1).value == 32);
        CHECK_FALSE(covers(nine.graph, Motif::complete3(6), 9));
        CHECK(all_claims_pass(nine));

        auto fano = blowup_sts(sts(7).triples, 1, 5);
        CHECK(vertex_degree(fano.graph, 7) == 21);
        CHECK(min_i_degree(fano.graph, 1).value == 18);
        CHECK(all_claims_pass(fano));

        auto doubled = blowup_sts(sts(9).triples, 2);
        CHECK(doubled.graph.vertex_count() == 19);
        CHECK(vertex_degree(doubled.graph, 18) == 144);
        CHECK(all_claims_pass(doubled));

        CHECK_THROWS_AS(blowup_sts(sts(9).triples, 1, 4), PreconditionViolation);
        CHECK_THROWS_AS(blowup_sts(complete_graph(2, 4), 1), PreconditionViolation);
    }

    TEST_CASE("tau_lower_interval")
    {
        auto c = tau_lower_interval(40, Rational(11, 20), 2);
        CHECK(degree_profile(c.graph).min_degree == 22);
        CHECK(degree_profile(c.graph).max_degree == 22);
        CHECK(t_max(c.graph).value == 60);
        CHECK(all_claims_pass(c));

        CHECK(t_max(tau_lower_interval(12, Rational(1, 2), 2).graph).value == 0);
        CHECK(t_max(tau_lower_interval(36, Rational(2, 3), 3).graph).value == 144);

        CHECK_THROWS_AS(tau_lower_interval(42, Rational(11, 20), 2), PreconditionViolation);
        CHECK_THROWS_AS(tau_lower_interval(40, Rational(2, 3), 2), PreconditionViolation);
    }

    TEST_CASE("tau_upper_interval")
    {
        auto top = tau_upper_interval(36, Rational(2, 3), 2, {1, 2, 0});
        CHECK(t_max(top.graph).value == 144);

        auto mid = tau_upper_interval(36, Rational(11, 18), 2, {1, 2, 0});
        CHECK(degree_profile(mid.graph).min_degree == 22);
        CHECK(degree_profile(mid.graph).max_degree == 22);
        auto t = t_max(mid.graph).value;
        CHECK(t <= 108 + 3 * 36);
        CHECK(t + 3 * 36 >= 108);
        CHECK(all_claims_pass(mid));

        auto small = tau_upper_interval(12, Rational(2, 3), 2);
        CHECK(degree_profile(small.graph).min_degree == 8);
        CHECK(t_max(small.graph).value == 16);
    }

    TEST_CASE("tau_upper_interval permutations")
    {
        auto a = tau_upper_interval(36, Rational(5, 8), 2, {1, 2, 0});
        auto b = tau_upper_interval(36, Rational(5, 8), 2, {2, 0, 1});
        CHECK(all_claims_pass(a));
        CHECK(all_claims_pass(b));
        CHECK(t_max(a.graph).value == t_max(b.graph).value);
        auto four = tau_upper_interval(48, Rational(37, 50), 3, {1, 0, 3, 2});
        CHECK(all_claims_pass(four));
        CHECK_THROWS_AS(tau_upper_interval(36, Rational(5, 8), 2, {0, 2, 1}), PreconditionViolation);
        CHECK_THROWS_AS(tau_upper_interval(36, Rational(5, 8), 2, {1, 1, 0}), PreconditionViolation);
        CHECK_THROWS_AS(tau_upper_interval(36, Rational(1, 2), 2), PreconditionViolation);
        CHECK_THROWS_AS(tau_upper_interval(35, Rational(5, 8), 2), PreconditionViolation);
    }

    TEST_CASE("efg_graph")
    {
        auto a = efg_graph({3}, 2);
        CHECK(a.graph.vertex_count() == 6);
        CHECK(degree_profile(a.graph).min_degree == 4);
        CHECK(book_number(a.graph).value == 2);
        auto b = efg_graph({3, 5}, 1);
        CHECK(degree_profile(b.graph).max_degree == 8);
        CHECK(book_number(b.graph).value == 3);
        CHECK(efg_graph({4}, 1).graph == complete_graph(2, 4));
        CHECK(book_number(efg_graph({4}, 1).graph).value == 2);
        for (std::uint64_t t = 1; t <= 4; ++t)
            CHECK(book_number(efg_graph({3}, t).graph).value == t);
        for (auto * c : {&a, &b})
            CHECK(all_claims_pass(*c));
        CHECK_THROWS_AS(efg_graph({3, 4}, 1), PreconditionViolation);
        CHECK_THROWS_AS(efg_graph({2}, 1), PreconditionViolation);
        CHECK_THROWS_AS(efg_graph({3}, 0), PreconditionViolation);
    }

    TEST_CASE("manifests serialise deterministically")
    {
        auto a = to_json(tau_upper_interval(36, Rational(11, 18), 2, {2, 0, 1}).manifest);
        auto b = to_json(tau_upper_interval(36, Rational(11, 18), 2, {2, 0, 1}).manifest);
        CHECK(a.dump() == b.dump());
        CHECK(a["params"]["construction"] == "tau-upper");
        CHECK(a["params"]["phi"] == nlohmann::json::array({3, 1, 2}));
        CHECK(a["params"]["rho"] == "11/18");
    }

    TEST_CASE("check_manifest reports a tampered graph")
    {
        auto c = k4minus_lower(9, 3);
        RGraphBuilder b(3, 9);
        bool skipped = false;
        for (auto e : c.graph.edges()) {
            if (! skipped && e[2] == 8) {
                skipped = true;
                continue;
            }
            b.add(e);
        }
        auto broken = std::move(b).build();
        bool any_failed = false;
        for (auto & check : check_manifest(broken, c.manifest))
            any_failed = any_failed || ! check.passed;
        CHECK(any_failed);
    }
}
