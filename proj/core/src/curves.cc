#include <hypercover/curves.hh>
#include <hypercover/errors.hh>
#include <hypercover/formulas.hh>
#include <hypercover/parallel.hh>

namespace hypercover
{
    auto reference_curves(const Rational & rho) -> CurvePoint
    {
        if (rho < Rational(1, 2) || rho > Rational(3, 4))
            throw InvalidArgument("reference curves are tabulated on [1/2, 3/4], got " + to_string(rho));

        CurvePoint p{rho, {}, {}, {}, {}, {}};
        if (rho <= Rational(2, 3)) {
            p.kappa = kappa(rho);
            p.lambda = to_real(lambda(rho));
            p.tau_prime = to_real(tau_prime(rho));
        }
        p.f_upper = to_real(tau_upper(rho));
        if (auto b = beta_prime(rho))
            p.rho_beta = to_real(rho * *b);
        return p;
    }

    auto curve_grid(const Rational & from, const Rational & to, std::size_t steps) -> std::vector<Rational>
    {
        if (steps == 0)
            throw InvalidArgument("curve grid needs at least one step");
        if (from >= to)
            throw InvalidArgument("curve grid needs from < to");
        std::vector<Rational> grid;
        grid.reserve(steps + 1);
        for (std::size_t k = 0; k <= steps; ++k)
            grid.push_back(from + (to - from) * k / steps);
        return grid;
    }

    auto reference_curve_table(const Rational & from, const Rational & to, std::size_t steps, unsigned threads) -> std::vector<CurvePoint>
    {
        auto grid = curve_grid(from, to, steps);
        if (grid.front() < Rational(1, 2) || grid.back() > Rational(3, 4))
            throw InvalidArgument("curve range must lie in [1/2, 3/4]");
        std::vector<CurvePoint> rows(grid.size());
        parallel_for(grid.size(), threads, [&] (std::size_t i) { rows[i] = reference_curves(grid[i]); });
        return rows;
    }

    auto write_curves_csv(std::ostream & out, const std::vector<CurvePoint> & points, int decimals) -> void
    {
        out << "rho,kappa,lambda,tau_prime,f_upper,rho_beta\n";
        auto cell = [&] (const std::optional<Real> & v) { return v ? format_fixed(*v, decimals) : std::string(); };
        for (const auto & p : points)
            out << format_fixed(p.rho, decimals) << ',' << cell(p.kappa) << ',' << cell(p.lambda) << ','
                << cell(p.tau_prime) << ',' << cell(p.f_upper) << ',' << cell(p.rho_beta) << '\n';
    }

    auto curves_metadata(const Rational & from, const Rational & to, std::size_t steps) -> nlohmann::json
    {
        return {
            {"from", to_string(from)},
            {"to", to_string(to)},
            {"steps", steps},
            {"decimals", curve_decimals},
            {"columns", {"rho", "kappa", "lambda", "tau_prime", "f_upper", "rho_beta"}},
            {"kappa", {
                {"formula", "(1/18)(1 - s)(2 + s)^2, s = sqrt(2(2 - 3 rho))"},
                {"prefactor", "1/18"},
                {"printed_prefactor", "1/6"},
                {"reason", "1/18 gives kappa(1/2) = 0 and kappa(2/3) = 2/9 = lambda(2/3); 1/6 gives 2/3 at rho = 2/3"}
            }},
            {"domains", {
                {"kappa", "[1/2, 2/3]"},
                {"lambda", "[1/2, 2/3]"},
                {"tau_prime", "[1/2, 2/3]"},
                {"f_upper", "[1/2, 3/4]"},
                {"rho_beta", "rho in (1/2, 1) with a greedy representation satisfying (r_{i-1} - 1)^2 < r_i; empty otherwise"}
            }},
            {"reference_constants_not_recomputed", {
                {"tau_lower_defects", {
                    {{"interval", {"1/2", "29/54"}}, {"defect", "0.0010705"}},
                    {{"interval", {"29/54", "31/54"}}, {"defect", "0.0044863"}},
                    {{"interval", {"31/54", "11/18"}}, {"defect", "0.0106917"}},
                    {{"interval", {"11/18", "17/27"}}, {"defect", "0.0106917"}},
                    {{"interval", {"17/27", "35/54"}}, {"defect", "0.0058198"}},
                    {{"interval", {"35/54", "2/3"}}, {"defect", "0.0002057"}},
                    {{"interval", {"2/3", "25/36"}}, {"defect", "0.00123143"}},
                    {{"interval", {"25/36", "13/18"}}, {"defect", "0.00534603"}},
                    {{"interval", {"13/18", "53/72"}}, {"defect", "0.00534583"}},
                    {{"interval", {"53/72", "3/4"}}, {"defect", "0.00189005"}}
                }},
                {"rho_star_upper", "19/27 + 7.4e-9"}
            }}
        };
    }
}
