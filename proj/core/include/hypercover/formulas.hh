#pragma once

#include <hypercover/errors.hh>
#include <hypercover/rational.hh>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace hypercover
{
    /// (n^2 - 5n + 6 - 3d^2 + 5d) / 2, for 1 <= d <= n - 2.
    auto f_n_d(std::uint64_t n, std::uint64_t d) -> Rational;

    /// C(n-2, 2) + d - d(d-1) - C(d, 2): the same value, counted the long way round.
    auto f_n_d_defining(std::uint64_t n, std::uint64_t d) -> Rational;

    struct DStar
    {
        Real value;
        std::uint64_t floor = 0;
        /// (n-1) d* / 2 - f_n(d*), evaluated at working precision.
        Real residual;
    };

    /// Root of (n-1) d / 2 = f_n(d). The floor is computed with integer arithmetic only.
    auto d_star(std::uint64_t n) -> DStar;

    /// The piecewise quadratic upper bound for tau. 0 on [0, 1/2], 1 at 1.
    auto tau_upper(const Rational & rho) -> Rational;

    /// The r whose interval [(r-1)/r, r/(r+1)] contains rho, taking the lower r at shared
    /// endpoints. 0 for rho <= 1/2.
    auto tau_upper_part_count(const Rational & rho) -> std::uint64_t;

    /// Left end of the second branch for part count r: r/(r+1) - 1/(3r(r+1)).
    auto tau_upper_breakpoint(std::uint64_t r) -> Rational;

    /// Inverse of tau_upper on its increasing part: the rho in [1/2, 1] with
    /// tau_upper(rho) = y, for y in [0, 1].
    auto tau_upper_inverse(const Rational & y) -> Rational;

    /// Piecewise linear in rho on [1/2, 2/3]. Throws outside that interval.
    auto tau_prime(const Rational & rho) -> Rational;

    /// 3 rho (1 - rho)(2 rho - 1) on [1/2, 2/3].
    auto lambda(const Rational & rho) -> Rational;

    /// (1/18)(1 - s)(2 + s)^2 with s = sqrt(2(2 - 3 rho)), on [1/2, 2/3].
    auto kappa(const Rational & rho) -> Real;

    /// The same expression with the printed prefactor 1/6. Kept for comparison only.
    auto kappa_printed_normalisation(const Rational & rho) -> Real;

    class GreedyConstraintViolation : public Error
    {
    public:
        GreedyConstraintViolation(std::size_t index, BigInt previous, BigInt next);

        /// The failing factor is factors[index]; index >= 1.
        auto index() const -> std::size_t { return _index; }
        auto previous() const -> const BigInt & { return _previous; }
        auto next() const -> const BigInt & { return _next; }

    private:
        std::size_t _index;
        BigInt _previous, _next;
    };

    struct GreedyBook
    {
        std::vector<BigInt> factors;
        Rational b;
    };

    inline constexpr std::size_t default_greedy_cap = 64;

    /// Greedy factorisation x = prod (r_i - 1) / r_i and b = prod (r_i - 2) / r_i.
    /// Throws InvalidArgument unless 1/2 < x < 1, LimitExceeded past `max_factors`, and
    /// GreedyConstraintViolation when (r_{i-1} - 1)^2 < r_i fails.
    auto greedy_book(const Rational & x, std::size_t max_factors = default_greedy_cap) -> GreedyBook;

    /// b(rho) where the greedy representation exists; nullopt where it does not.
    auto beta_prime(const Rational & rho) -> std::optional<Rational>;

    /// beta_prime at a real argument: the value at the largest fraction <= rho with
    /// denominator at most `max_denominator` that has a valid greedy representation.
    auto beta_prime_from_below(const Real & rho, std::uint64_t max_denominator = 10000) -> std::optional<Rational>;

    /// (-1 + sqrt(3 - 2c)) / (1 - c) for 0 < c < 1.
    auto recursive_cover_bound(const Real & c) -> Real;

    /// [g(c0), g(g(c0)), ...], k entries.
    auto iterate_cover_bounds(const Real & c0, std::size_t k) -> std::vector<Real>;

    struct TripartiteBounds
    {
        Rational f1, f2;
    };

    /// f1 = x - x^2 + (s/4)(1 - x)^2 and f2 = s x (1 - x) / 2 for x, s in [0, 1].
    auto tripartite_bounds(const Rational & x, const Rational & s) -> TripartiteBounds;

    /// Guaranteed t_max of an n-vertex tripartite graph with e edges:
    /// (3/2)(e - n^2/4) when e/n^2 < 3/10, else e - 2n^2/9. Negative values mean no bound.
    auto tripartite_tmax_lower_bound(std::uint64_t n, std::uint64_t e) -> Rational;

    struct JensenCheck
    {
        bool holds = true;
        /// Every a_i lies in B, which only happens when the mean is not positive.
        bool vacuous = false;
        std::size_t b_size = 0;
        Real lhs, rhs;
    };

    /// Compares sum f(a_i) with |B| f((1-eta) a) + (n-|B|) f((1 + eta |B| / (n-|B|)) a), where
    /// a is the mean and B = {i : a_i <= (1-eta) a}. f is assumed convex. Holds means
    /// lhs >= rhs up to a relative 1e-40.
    auto extended_jensen_check(const std::vector<Real> & a, const Real & eta, const std::function<Real (const Real &)> & f) -> JensenCheck;
}
