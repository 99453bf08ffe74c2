#pragma once

#include <hypercover/rational.hh>

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

namespace hypercover
{
    /// One row of the reference curve table. Empty cells are outside a curve's domain.
    struct CurvePoint
    {
        Rational rho;
        std::optional<Real> kappa, lambda, tau_prime, f_upper, rho_beta;
    };

    /// Evaluates every curve at rho in [1/2, 3/4]. kappa, lambda and tau' exist up to 2/3;
    /// rho_beta exists where the greedy representation of rho does.
    auto reference_curves(const Rational & rho) -> CurvePoint;

    /// from + k (to - from) / steps for k = 0..steps, exactly.
    auto curve_grid(const Rational & from, const Rational & to, std::size_t steps) -> std::vector<Rational>;

    /// Rows for the whole grid; `threads` changes nothing but speed.
    auto reference_curve_table(const Rational & from, const Rational & to, std::size_t steps, unsigned threads = 1) -> std::vector<CurvePoint>;

    inline constexpr int curve_decimals = 12;

    /// Header rho,kappa,lambda,tau_prime,f_upper,rho_beta, then one row per point.
    auto write_curves_csv(std::ostream & out, const std::vector<CurvePoint> & points, int decimals = curve_decimals) -> void;

    /// Describes the columns, the kappa normalisation and the reference constants that
    /// are reported but not recomputed.
    auto curves_metadata(const Rational & from, const Rational & to, std::size_t steps) -> nlohmann::json;
}
