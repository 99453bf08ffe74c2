#include "support.hh"

#include <hypercover/errors.hh>
#include <hypercover/hypergraph_io.hh>

#include <doctest.h>

using namespace hypercover;

namespace
{
    auto parse_error_line(const std::string & text) -> std::size_t
    {
        try {
            parse_hypergraph(text);
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return 0;
    }
}

TEST_SUITE("hypergraph_io")
{
    TEST_CASE("reads comments, header and edges")
    {
        auto g = parse_hypergraph("# a comment\n3 5\n0 1 2\n# between edges\n1 3 4\n");
        CHECK(g.uniformity() == 3);
        CHECK(g.vertex_count() == 5);
        CHECK(g.edge_count() == 2);
        CHECK(g.has_edge({1, 3, 4}));
    }

    TEST_CASE("writes sorted edges and round-trips")
    {
        auto g = RGraph::from_edge_list(3, 5, {{2, 3, 4}, {0, 1, 2}});
        CHECK(format_hypergraph(g) == "3 5\n0 1 2\n2 3 4\n");
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto h = testing::random_graph(2 + seed % 3, 9, 1, 3, seed);
            CHECK(parse_hypergraph(format_hypergraph(h)) == h);
        }
    }

    TEST_CASE("errors carry line numbers")
    {
        CHECK(parse_error_line("3 5\n0 1 2") == 2);
        CHECK(parse_error_line("3 5\n0 2 1\n") == 2);
        CHECK(parse_error_line("3 5\n0 1 2\n0 1 5\n") == 3);
        CHECK(parse_error_line("3 5\n0 1\n") == 2);
        CHECK(parse_error_line("3 5\n0  1 2\n") == 2);
        CHECK(parse_error_line("# only\n3\n") == 2);
        CHECK(parse_error_line("1 5\n0\n") == 1);
        CHECK(parse_error_line("3 5\n0 1 2 \n") == 2);
        CHECK(parse_error_line("3 5\n0 1 x\n") == 2);
        CHECK(parse_error_line("") == 1);
    }

    TEST_CASE("carriage returns are tolerated")
    {
        CHECK(parse_hypergraph("2 3\r\n0 1\r\n").edge_count() == 1);
    }
}
