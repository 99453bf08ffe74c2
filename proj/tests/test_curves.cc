#include <hypercover/curves.hh>
#include <hypercover/errors.hh>
#include <hypercover/formulas.hh>

#include <doctest.h>

#include <sstream>

using namespace hypercover;

TEST_SUITE("curves")
{
    TEST_CASE("endpoints")
    {
        auto top = reference_curves(Rational(2, 3));
        Real two_ninths = Real(2) / 9;
        for (auto v : {top.kappa, top.lambda, top.tau_prime, top.rho_beta, top.f_upper}) {
            REQUIRE(v);
            CHECK(abs(*v - two_ninths) < Real("1e-40"));
        }

        auto bottom = reference_curves(Rational(1, 2));
        CHECK(abs(*bottom.kappa) < Real("1e-40"));
        CHECK(*bottom.lambda == 0);
        CHECK(*bottom.tau_prime == 0);
        CHECK_FALSE(bottom.rho_beta);

        auto near = reference_curves(Rational(1, 2) + Rational(1, 1000000));
        for (auto v : {near.kappa, near.lambda, near.tau_prime})
            CHECK(abs(*v) < Real("1e-4"));
    }

    TEST_CASE("upper part of the range")
    {
        auto p = reference_curves(Rational(7, 10));
        CHECK_FALSE(p.kappa);
        CHECK_FALSE(p.lambda);
        CHECK_FALSE(p.tau_prime);
        CHECK(*p.f_upper == to_real(tau_upper(Rational(7, 10))));
        CHECK_THROWS_AS(reference_curves(Rational(4, 5)), InvalidArgument);
        CHECK_THROWS_AS(reference_curves(Rational(1, 3)), InvalidArgument);
    }

    TEST_CASE("ordering on a fine grid")
    {
        auto rows = reference_curve_table(Rational(1, 2) + Rational(1, 6000), Rational(2, 3), 999);
        REQUIRE(rows.size() == 1000);
        for (auto & p : rows) {
            INFO("rho = " << to_string(p.rho));
            REQUIRE(p.rho_beta);
            CHECK(*p.kappa <= *p.lambda);
            CHECK(*p.lambda <= *p.tau_prime);
            CHECK(*p.tau_prime <= *p.rho_beta);
        }
    }

    TEST_CASE("grid is exact")
    {
        auto grid = curve_grid(Rational(1, 2), Rational(2, 3), 6);
        REQUIRE(grid.size() == 7);
        CHECK(grid[1] == Rational(19, 36));
        CHECK(grid.back() == Rational(2, 3));
        CHECK_THROWS_AS(curve_grid(Rational(1, 2), Rational(1, 2), 3), InvalidArgument);
        CHECK_THROWS_AS(curve_grid(Rational(1, 2), Rational(2, 3), 0), InvalidArgument);
    }

    TEST_CASE("csv output")
    {
        std::ostringstream out;
        write_curves_csv(out, reference_curve_table(Rational(1, 2), Rational(3, 4), 4));
        std::istringstream in(out.str());
        std::string line;
        std::getline(in, line);
        CHECK(line == "rho,kappa,lambda,tau_prime,f_upper,rho_beta");
        std::getline(in, line);
        CHECK(line == "0.500000000000,0.000000000000,0.000000000000,0.000000000000,0.000000000000,");
        std::getline(in, line);
        std::getline(in, line);
        CHECK(line.starts_with("0.625000000000,"));
        std::getline(in, line);
        std::getline(in, line);
        CHECK(line == "0.750000000000,,,,0.375000000000,0.375000000000");
        CHECK_FALSE(std::getline(in, line));
    }

    TEST_CASE("output does not depend on threads")
    {
        auto render = [] (unsigned threads) {
            std::ostringstream out;
            write_curves_csv(out, reference_curve_table(Rational(1, 2), Rational(3, 4), 300, threads));
            return out.str();
        };
        auto one = render(1);
        CHECK(one == render(2));
        CHECK(one == render(0));
    }

    TEST_CASE("metadata")
    {
        auto meta = curves_metadata(Rational(1, 2), Rational(2, 3), 10);
        CHECK(meta["kappa"]["prefactor"] == "1/18");
        CHECK(meta["to"] == "2/3");
        CHECK(meta["reference_constants_not_recomputed"]["tau_lower_defects"].size() == 10);
    }
}
