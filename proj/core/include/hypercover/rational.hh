#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace hypercover
{
    using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

    /// Exact rational, always stored in lowest terms with a positive denominator.
    using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

    /// 50 significant decimal digits.
    using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>, boost::multiprecision::et_off>;

    inline constexpr int real_digits = 50;

    /// Accepts "p/q", an integer, or a terminating decimal such as "0.55" or "-1.25e-3".
    /// Decimals are converted exactly; no value passes through floating point.
    auto parse_rational(std::string_view text) -> Rational;

    /// "p/q", or just "p" when the denominator is 1.
    auto to_string(const Rational & value) -> std::string;

    auto to_real(const Rational & value) -> Real;

    /// Fixed-point rendering with exactly `decimals` digits after the point, rounded
    /// half away from zero. Locale independent.
    auto format_fixed(const Real & value, int decimals) -> std::string;

    auto format_fixed(const Rational & value, int decimals) -> std::string;

    auto floor(const Rational & value) -> BigInt;

    auto ceil(const Rational & value) -> BigInt;

    /// Smallest multiple of 10^-decimals that is >= value.
    auto round_up(const Real & value, int decimals) -> Real;

    auto binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t;

    auto big_binomial(std::uint64_t n, std::uint64_t k) -> BigInt;
}
