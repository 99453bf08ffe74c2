#include <hypercover/errors.hh>
#include <hypercover/verifier.hh>

#include <doctest.h>

#include <set>
#include <sstream>

using namespace hypercover;

TEST_SUITE("verifier")
{
    TEST_CASE("suite names")
    {
        for (auto s : {Suite::k4minus, Suite::k4, Suite::c5, Suite::kt, Suite::tau, Suite::tripartite, Suite::book, Suite::curves, Suite::all})
            CHECK(parse_suite(to_string(s)) == s);
        CHECK(parse_suite("K4Minus") == Suite::k4minus);
        CHECK_THROWS_AS(parse_suite("k5"), InvalidArgument);
    }

    TEST_CASE("claim ids are unique and all is the union")
    {
        auto all = suite_claim_ids(Suite::all);
        std::set<std::string> unique(all.begin(), all.end());
        CHECK(unique.size() == all.size());

        std::size_t total = 0;
        for (auto s : {Suite::k4minus, Suite::k4, Suite::c5, Suite::kt, Suite::tau, Suite::tripartite, Suite::book, Suite::curves})
            total += suite_claim_ids(s).size();
        CHECK(total == all.size());
    }

    TEST_CASE("random tripartite graphs respect the parts")
    {
        auto g = random_tripartite(12, {3, 4, 5}, Rational(1), Rational(0), Rational(1, 2), 7);
        CHECK(g.uniformity() == 2);
        CHECK(g.vertex_count() == 12);
        std::size_t ab = 0;
        for (auto e : g.edges()) {
            auto part = [] (Vertex v) { return v < 3 ? 0 : v < 7 ? 1 : 2; };
            int p = part(e[0]), q = part(e[1]);
            CHECK(p != q);
            // no A-C edges at beta = 0
            CHECK_FALSE(((p == 0 && q == 2) || (p == 2 && q == 0)));
            if (p + q == 1)
                ++ab;
        }
        // every B-C pair is present at alpha = 1
        CHECK(g.edge_count() == 20 + ab);

        CHECK(random_tripartite(12, {3, 4, 5}, Rational(1, 3), Rational(1, 3), Rational(1, 3), 9)
              == random_tripartite(12, {3, 4, 5}, Rational(1, 3), Rational(1, 3), Rational(1, 3), 9));
        CHECK_THROWS_AS(random_tripartite(10, {3, 4, 5}, Rational(0), Rational(0), Rational(0), 1), InvalidArgument);
        CHECK_THROWS_AS(random_tripartite(12, {3, 4, 5}, Rational(2), Rational(0), Rational(0), 1), InvalidArgument);
    }

    TEST_CASE("only and filter select claims")
    {
        SuiteOptions options;
        options.only = "k4minus-lower-n9";
        auto one = run_suite(Suite::k4minus, options);
        REQUIRE(one.size() == 1);
        CHECK(one[0].status == ClaimStatus::pass);
        CHECK(one[0].suite == "k4minus");

        options.only = "no-such-claim";
        CHECK_THROWS_AS(run_suite(Suite::k4minus, options), InvalidArgument);

        SuiteOptions filtered;
        filtered.filter = [] (const std::string & id) { return id.starts_with("c5-"); };
        auto c5 = run_suite(Suite::all, filtered);
        CHECK(c5.size() == suite_claim_ids(Suite::c5).size());
        CHECK(all_passed(c5));
    }

    TEST_CASE("budget skips are decided from estimates")
    {
        SuiteOptions options;
        options.budget = std::chrono::duration<double>(0);
        auto outcomes = run_suite(Suite::c5, options);
        for (const auto & o : outcomes) {
            CHECK(o.status == ClaimStatus::skipped);
            CHECK_FALSE(o.note.empty());
        }
        // skipped claims are not failures
        CHECK(all_passed(outcomes));
        auto j = to_json(outcomes);
        CHECK(j["summary"]["skipped"] == outcomes.size());
    }

    TEST_CASE("json and table output")
    {
        ClaimOutcome ok{"a", "kt", ClaimStatus::pass, "1", "1", "exact", "hypercover verify --suite kt --claim a", ""};
        ClaimOutcome bad{"b", "kt", ClaimStatus::fail, "2", "1", "exact", "hypercover verify --suite kt --claim b", ""};
        auto j = to_json({ok, bad});
        CHECK(j["claims"].size() == 2);
        CHECK_FALSE(j["claims"][0].contains("repro"));
        CHECK(j["claims"][1]["repro"] == "hypercover verify --suite kt --claim b");
        CHECK(j["summary"]["pass"] == 1);
        CHECK(j["summary"]["fail"] == 1);
        CHECK_FALSE(all_passed({ok, bad}));

        std::ostringstream table;
        write_table(table, {ok, bad});
        CHECK(table.str().find("1 passed, 1 failed, 0 skipped") != std::string::npos);
        CHECK(table.str().find("reproduce b: hypercover verify --suite kt --claim b") != std::string::npos);
    }

    TEST_CASE("repro line carries a non-default seed")
    {
        SuiteOptions options;
        options.only = "lift-roundtrip-random";
        options.seed = 12345;
        auto outcomes = run_suite(Suite::k4, options);
        REQUIRE(outcomes.size() == 1);
        CHECK(outcomes[0].repro == "hypercover verify --suite k4 --claim lift-roundtrip-random --seed 12345");
    }

    TEST_CASE("output does not depend on the worker count")
    {
        SuiteOptions one, two;
        two.threads = 2;
        CHECK(to_json(run_suite(Suite::book, one)).dump() == to_json(run_suite(Suite::book, two)).dump());
        CHECK(to_json(run_suite(Suite::c5, one)).dump() == to_json(run_suite(Suite::c5, two)).dump());
    }
}
