#include <hypercover/formulas.hh>

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <string>

namespace hypercover
{
    namespace
    {
        auto in_unit_interval(const Rational & x) -> bool
        {
            return x >= 0 && x <= 1;
        }

        auto require_curve_domain(const Rational & rho, const char * name) -> void
        {
            if (rho < Rational(1, 2) || rho > Rational(2, 3))
                throw InvalidArgument(std::string(name) + " is defined on [1/2, 2/3], got " + to_string(rho));
        }

        auto kappa_core(const Rational & rho) -> Real
        {
            Real s = boost::multiprecision::sqrt(to_real(2 * (2 - 3 * rho)));
            return (1 - s) * (2 + s) * (2 + s);
        }

        auto lower_branch(const Rational & rho, const Rational & r) -> Rational
        {
            return (r - 1) * (r - 2) / (r * r) + 3 * (r - 1) / r * (rho - (r - 1) / r);
        }

        auto upper_branch(const Rational & rho, const Rational & r) -> Rational
        {
            return r * (r - 1) / ((r + 1) * (r + 1)) - 3 * (r - 1) / (r + 1) * (r / (r + 1) - rho);
        }

        auto greedy_factors(const Rational & x, std::size_t max_factors) -> std::vector<BigInt>
        {
            std::vector<BigInt> factors;
            Rational residual = x;
            while (residual != 1) {
                if (factors.size() == max_factors)
                    throw LimitExceeded("no finite greedy representation found within " + std::to_string(max_factors) + " factors");
                BigInt r = std::max(BigInt(3), ceil(1 / (1 - residual)));
                residual = residual * r / (r - 1);
                factors.push_back(r);
            }
            return factors;
        }
    }

    auto f_n_d(std::uint64_t n, std::uint64_t d) -> Rational
    {
        if (d < 1 || n < 3 || d > n - 2)
            throw InvalidArgument("f_n(d) needs 1 <= d <= n - 2, got n = " + std::to_string(n) + ", d = " + std::to_string(d));
        BigInt bn = n, bd = d;
        return Rational(bn * bn - 5 * bn + 6 - 3 * bd * bd + 5 * bd, 2);
    }

    auto f_n_d_defining(std::uint64_t n, std::uint64_t d) -> Rational
    {
        if (d < 1 || n < 3 || d > n - 2)
            throw InvalidArgument("f_n(d) needs 1 <= d <= n - 2, got n = " + std::to_string(n) + ", d = " + std::to_string(d));
        BigInt bd = d;
        return Rational(big_binomial(n - 2, 2) + bd - bd * (bd - 1) - big_binomial(d, 2));
    }

    auto d_star(std::uint64_t n) -> DStar
    {
        if (n < 3)
            throw InvalidArgument("d* needs n >= 3");
        BigInt bn = n;
        BigInt disc = 13 * bn * bn - 72 * bn + 108;
        BigInt s = boost::multiprecision::sqrt(disc);

        // sqrt(disc) lies in [s, s+1), and no multiple of 6 sits strictly inside
        // (s - n + 6, s - n + 7), so the floor only needs the integer square root.
        BigInt k = s - bn + 6;
        BigInt fl = k / 6;
        if (k < 0 && k % 6 != 0)
            fl -= 1;

        DStar result;
        result.value = (boost::multiprecision::sqrt(Real(disc)) - Real(bn) + 6) / 6;
        result.floor = static_cast<std::uint64_t>(fl);
        Real nr(bn);
        auto d = result.value;
        result.residual = (nr - 1) * d / 2 - (nr * nr - 5 * nr + 6 - 3 * d * d + 5 * d) / 2;
        return result;
    }

    auto tau_upper_part_count(const Rational & rho) -> std::uint64_t
    {
        if (! in_unit_interval(rho))
            throw InvalidArgument("edge density " + to_string(rho) + " is outside [0, 1]");
        if (rho <= Rational(1, 2))
            return 0;
        if (rho == 1)
            return 0;
        return static_cast<std::uint64_t>(ceil(1 / (1 - rho)) - 1);
    }

    auto tau_upper_breakpoint(std::uint64_t r) -> Rational
    {
        if (r < 2)
            throw InvalidArgument("part count must be at least 2");
        Rational rr(r);
        return rr / (rr + 1) - 1 / (3 * rr * (rr + 1));
    }

    auto tau_upper(const Rational & rho) -> Rational
    {
        auto r = tau_upper_part_count(rho);
        if (rho == 1)
            return 1;
        if (r == 0)
            return 0;
        Rational rr(r);
        if (rho <= tau_upper_breakpoint(r))
            return lower_branch(rho, rr);
        return upper_branch(rho, rr);
    }

    auto tau_upper_inverse(const Rational & y) -> Rational
    {
        if (! in_unit_interval(y))
            throw InvalidArgument("triangle-degree density " + to_string(y) + " is outside [0, 1]");
        if (y == 0)
            return Rational(1, 2);
        if (y == 1)
            return 1;
        for (BigInt r = 2;; ++r) {
            Rational rr(r);
            auto bp = tau_upper_breakpoint(static_cast<std::uint64_t>(r));
            auto at_bp = lower_branch(bp, rr);
            auto top = rr * (rr - 1) / ((rr + 1) * (rr + 1));
            if (y > top)
                continue;
            if (y <= at_bp)
                return (rr - 1) / rr + (y - (rr - 1) * (rr - 2) / (rr * rr)) * rr / (3 * (rr - 1));
            return rr / (rr + 1) - (top - y) * (rr + 1) / (3 * (rr - 1));
        }
    }

    auto tau_prime(const Rational & rho) -> Rational
    {
        require_curve_domain(rho, "tau'");
        if (rho <= Rational(11, 18))
            return Rational(3, 2) * (rho - Rational(1, 2));
        return rho - Rational(4, 9);
    }

    auto lambda(const Rational & rho) -> Rational
    {
        require_curve_domain(rho, "lambda");
        return 3 * rho * (1 - rho) * (2 * rho - 1);
    }

    auto kappa(const Rational & rho) -> Real
    {
        require_curve_domain(rho, "kappa");
        return kappa_core(rho) / 18;
    }

    auto kappa_printed_normalisation(const Rational & rho) -> Real
    {
        require_curve_domain(rho, "kappa");
        return kappa_core(rho) / 6;
    }

    GreedyConstraintViolation::GreedyConstraintViolation(std::size_t index, BigInt previous, BigInt next) :
        Error("greedy factor " + std::to_string(index) + " breaks (r_prev - 1)^2 < r: ("
                + previous.str() + " - 1)^2 >= " + next.str()),
        _index(index),
        _previous(std::move(previous)),
        _next(std::move(next))
    {
    }

    auto greedy_book(const Rational & x, std::size_t max_factors) -> GreedyBook
    {
        if (x <= Rational(1, 2) || x >= 1)
            throw InvalidArgument("greedy representation needs 1/2 < x < 1, got " + to_string(x));

        GreedyBook result{greedy_factors(x, max_factors), 1};
        for (std::size_t i = 0; i < result.factors.size(); ++i) {
            const auto & r = result.factors[i];
            if (i > 0) {
                const auto & prev = result.factors[i - 1];
                if ((prev - 1) * (prev - 1) >= r)
                    throw GreedyConstraintViolation(i, prev, r);
            }
            result.b *= Rational(r - 2, r);
        }
        return result;
    }

    auto beta_prime(const Rational & rho) -> std::optional<Rational>
    {
        if (rho == 1)
            return std::nullopt;
        try {
            return greedy_book(rho).b;
        }
        catch (const GreedyConstraintViolation &) {
            return std::nullopt;
        }
        catch (const InvalidArgument &) {
            return std::nullopt;
        }
        catch (const LimitExceeded &) {
            return std::nullopt;
        }
    }

    auto beta_prime_from_below(const Real & rho, std::uint64_t max_denominator) -> std::optional<Rational>
    {
        std::vector<Rational> candidates;
        for (std::uint64_t q = 2; q <= max_denominator; ++q) {
            BigInt p = static_cast<BigInt>(boost::multiprecision::floor(rho * q));
            Rational c(p, q);
            if (c > Rational(1, 2) && c < 1)
                candidates.push_back(c);
        }
        std::sort(candidates.begin(), candidates.end(), std::greater<>());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto & c : candidates)
            if (auto b = beta_prime(c))
                return b;
        return std::nullopt;
    }

    auto recursive_cover_bound(const Real & c) -> Real
    {
        if (c <= 0 || c >= 1)
            throw InvalidArgument("recursive bound needs 0 < c < 1");
        return (boost::multiprecision::sqrt(3 - 2 * c) - 1) / (1 - c);
    }

    auto iterate_cover_bounds(const Real & c0, std::size_t k) -> std::vector<Real>
    {
        std::vector<Real> result;
        Real c = c0;
        for (std::size_t i = 0; i < k; ++i) {
            c = recursive_cover_bound(c);
            result.push_back(c);
        }
        return result;
    }

    auto tripartite_bounds(const Rational & x, const Rational & s) -> TripartiteBounds
    {
        if (! in_unit_interval(x) || ! in_unit_interval(s))
            throw InvalidArgument("tripartite bounds need x and s in [0, 1]");
        return {x - x * x + s / 4 * (1 - x) * (1 - x), s * x * (1 - x) / 2};
    }

    auto tripartite_tmax_lower_bound(std::uint64_t n, std::uint64_t e) -> Rational
    {
        Rational n2 = Rational(n) * n;
        Rational edges(e);
        if (10 * edges < 3 * n2)
            return Rational(3, 2) * (edges - n2 / 4);
        return edges - 2 * n2 / 9;
    }

    auto extended_jensen_check(const std::vector<Real> & a, const Real & eta, const std::function<Real (const Real &)> & f) -> JensenCheck
    {
        if (a.empty())
            throw InvalidArgument("Jensen check needs a nonempty sequence");
        JensenCheck result;
        Real mean = 0;
        for (const auto & x : a)
            mean += x;
        mean /= a.size();

        Real threshold = (1 - eta) * mean;
        result.lhs = 0;
        for (const auto & x : a) {
            result.lhs += f(x);
            if (x <= threshold)
                ++result.b_size;
        }

        auto n = a.size();
        if (result.b_size == n) {
            result.vacuous = true;
            result.rhs = result.lhs;
            return result;
        }
        Real b(result.b_size);
        Real rest(n - result.b_size);
        result.rhs = b * f(threshold) + rest * f((1 + eta * b / rest) * mean);
        Real scale = std::max(Real(1), boost::multiprecision::abs(result.rhs));
        result.holds = result.lhs >= result.rhs - scale * Real("1e-40");
        return result;
    }
}
