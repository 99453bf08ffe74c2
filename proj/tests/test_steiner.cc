#include <hypercover/errors.hh>
#include <hypercover/hypergraph_io.hh>
#include <hypercover/steiner.hh>
#include <hypercover/subgraph_cover.hh>

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace hypercover;

namespace
{
    auto temp_file(const std::string & name, const std::string & contents) -> std::filesystem::path
    {
        auto path = std::filesystem::temp_directory_path() / ("hypercover_test_" + name);
        std::ofstream(path) << contents;
        return path;
    }
}

TEST_SUITE("steiner")
{
    TEST_CASE("generated systems are valid")
    {
        for (unsigned t : {3u, 7u, 9u, 13u, 15u, 19u, 21u, 25u, 27u, 31u, 33u, 99u, 103u}) {
            auto s = sts(t);
            INFO("order " << t);
            CHECK(s.order == t);
            CHECK(s.triples.vertex_count() == t);
            CHECK(s.triples.edge_count() == std::size_t(t) * (t - 1) / 6);
            CHECK(verify_sts(s.triples).valid);
        }
        CHECK(sts(7).triples == RGraph::from_edge_list(3, 7, {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {0, 4, 5}, {1, 5, 6}, {0, 2, 6}}));
        CHECK(sts(15).provenance == StsProvenance::bose);
        CHECK(sts(13).provenance == StsProvenance::skolem);
        CHECK_THROWS_AS(sts(5), InvalidArgument);
        CHECK_THROWS_AS(sts(11), InvalidArgument);
        CHECK_THROWS_AS(sts(1), InvalidArgument);
    }

    TEST_CASE("independence numbers reach the known minima")
    {
        for (unsigned t : {3u, 7u, 9u, 13u, 15u, 19u}) {
            INFO("order " << t);
            CHECK(independence_number(sts(t).triples).value == *known_minimum_independence(t));
        }
        CHECK(*known_minimum_independence(7) == 4);
        CHECK(*known_minimum_independence(9) == 4);
        CHECK(*known_minimum_independence(13) == 6);
        CHECK(*known_minimum_independence(15) == 6);
        CHECK(*known_minimum_independence(19) == 7);
        CHECK_FALSE(known_minimum_independence(21));
    }

    TEST_CASE("random systems")
    {
        for (unsigned t : {7u, 9u, 13u, 15u, 19u, 31u}) {
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                auto s = random_sts(t, seed);
                CHECK(verify_sts(s.triples).valid);
                CHECK(s.provenance == StsProvenance::hill_climb);
            }
        }
        CHECK(random_sts(19, 3).triples == random_sts(19, 3).triples);
        CHECK_THROWS_AS(random_sts(8, 0), InvalidArgument);
    }

    TEST_CASE("verify_sts names the first bad pair")
    {
        auto missing = RGraph::from_edge_list(3, 7, {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {0, 4, 5}, {1, 5, 6}});
        auto check = verify_sts(missing);
        CHECK_FALSE(check.valid);
        REQUIRE(check.violating_pair);
        CHECK(*check.violating_pair == std::pair<Vertex, Vertex>{0, 2});
        CHECK(check.pair_multiplicity == 0);

        auto doubled = RGraph::from_edge_list(3, 4, {{0, 1, 2}, {0, 1, 3}});
        auto d = verify_sts(doubled);
        CHECK(*d.violating_pair == std::pair<Vertex, Vertex>{0, 1});
        CHECK(d.pair_multiplicity == 2);
    }

    TEST_CASE("bundled data files")
    {
        auto dir = sts_data_directory();
        for (auto [name, order] : {std::pair{"fano.hg", 7u}, {"ag23.hg", 9u}, {"sts13.hg", 13u}, {"sts15.hg", 15u}, {"sts19.hg", 19u}}) {
            INFO(name);
            auto loaded = load_sts(dir / name);
            CHECK(loaded.system.order == order);
            CHECK(loaded.meets_minimum);
            CHECK_FALSE(loaded.warning);
            CHECK(loaded.system.provenance == StsProvenance::external);
        }
    }

    TEST_CASE("load_sts round trip and warnings")
    {
        auto path = temp_file("skolem19.hg", format_hypergraph(random_sts(19, 0).triples));
        auto loaded = load_sts(path);
        CHECK(loaded.alpha > 7);
        CHECK_FALSE(loaded.meets_minimum);
        CHECK(loaded.warning);
        CHECK(loaded.known_minimum == 7u);
        std::filesystem::remove(path);
    }

    TEST_CASE("load_sts rejects corrupted files")
    {
        auto text = format_hypergraph(sts(7).triples);
        auto cut = text.substr(0, text.rfind('\n', text.size() - 2) + 1);
        auto path = temp_file("broken.hg", cut);
        try {
            load_sts(path);
            FAIL("expected rejection");
        } catch (const InvalidArgument & e) {
            CHECK(std::string(e.what()).find("pair") != std::string::npos);
        }
        std::filesystem::remove(path);

        auto garbage = temp_file("garbage.hg", "3 7\n0 1\n");
        CHECK_THROWS_AS(load_sts(garbage), ParseError);
        std::filesystem::remove(garbage);
    }
}
