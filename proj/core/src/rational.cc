#include <hypercover/errors.hh>
#include <hypercover/rational.hh>

#include <algorithm>
#include <cctype>

namespace hypercover
{
    namespace
    {
        auto trim(std::string_view text) -> std::string_view
        {
            while (! text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
                text.remove_prefix(1);
            while (! text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
                text.remove_suffix(1);
            return text;
        }

        auto parse_integer(std::string_view text) -> BigInt
        {
            text = trim(text);
            bool negative = false;
            if (! text.empty() && (text.front() == '-' || text.front() == '+')) {
                negative = text.front() == '-';
                text.remove_prefix(1);
            }
            if (text.empty() || ! std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw InvalidArgument("not an integer: '" + std::string(text) + "'");
            // a leading zero would make the string constructor read octal
            auto first = text.find_first_not_of('0');
            BigInt result{first == std::string_view::npos ? std::string("0") : std::string(text.substr(first))};
            return negative ? BigInt(-result) : result;
        }

        auto pow10(unsigned exponent) -> BigInt
        {
            BigInt result = 1;
            for (unsigned i = 0; i < exponent; ++i)
                result *= 10;
            return result;
        }

        auto divide_round_half_away(const BigInt & numerator, const BigInt & denominator) -> BigInt
        {
            // denominator > 0
            BigInt twice = 2 * abs(numerator) + denominator;
            BigInt q = twice / (2 * denominator);
            return numerator < 0 ? BigInt(-q) : q;
        }

        auto render_scaled(const BigInt & scaled, int decimals) -> std::string
        {
            std::string digits = abs(scaled).str();
            if (decimals > 0) {
                if (digits.size() <= static_cast<std::size_t>(decimals))
                    digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
                digits.insert(digits.size() - static_cast<std::size_t>(decimals), 1, '.');
            }
            if (scaled < 0)
                digits.insert(0, 1, '-');
            return digits;
        }
    }

    auto parse_rational(std::string_view text) -> Rational
    {
        text = trim(text);
        if (text.empty())
            throw InvalidArgument("empty rational");

        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            BigInt p = parse_integer(text.substr(0, slash));
            BigInt q = parse_integer(text.substr(slash + 1));
            if (q == 0)
                throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
            return Rational(p, q);
        }

        std::string_view mantissa = text;
        long exponent = 0;
        if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
            mantissa = text.substr(0, e);
            BigInt ex = parse_integer(text.substr(e + 1));
            if (ex > 10000 || ex < -10000)
                throw InvalidArgument("exponent out of range in '" + std::string(text) + "'");
            exponent = ex.convert_to<long>();
        }

        bool negative = false;
        if (! mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
            negative = mantissa.front() == '-';
            mantissa.remove_prefix(1);
        }

        std::string digits;
        long fraction_digits = 0;
        bool seen_point = false;
        for (char c : mantissa) {
            if (c == '.') {
                if (seen_point)
                    throw InvalidArgument("malformed number '" + std::string(text) + "'");
                seen_point = true;
            }
            else if (std::isdigit(static_cast<unsigned char>(c))) {
                digits.push_back(c);
                if (seen_point)
                    ++fraction_digits;
            }
            else
                throw InvalidArgument("malformed number '" + std::string(text) + "'");
        }
        if (digits.empty())
            throw InvalidArgument("malformed number '" + std::string(text) + "'");

        BigInt numerator = parse_integer(digits);
        if (negative)
            numerator = -numerator;
        long shift = exponent - fraction_digits;
        if (shift >= 0)
            return Rational(numerator * pow10(static_cast<unsigned>(shift)));
        return Rational(numerator, pow10(static_cast<unsigned>(-shift)));
    }

    auto to_string(const Rational & value) -> std::string
    {
        BigInt p = numerator(value), q = denominator(value);
        if (q == 1)
            return p.str();
        return p.str() + "/" + q.str();
    }

    auto to_real(const Rational & value) -> Real
    {
        return Real(numerator(value)) / Real(denominator(value));
    }

    auto format_fixed(const Real & value, int decimals) -> std::string
    {
        Real scaled = value;
        for (int i = 0; i < decimals; ++i)
            scaled *= 10;
        Real rounded = scaled < 0 ? Real(-boost::multiprecision::floor(-scaled + Real(0.5))) : Real(boost::multiprecision::floor(scaled + Real(0.5)));
        return render_scaled(rounded.convert_to<BigInt>(), decimals);
    }

    auto format_fixed(const Rational & value, int decimals) -> std::string
    {
        BigInt scale = pow10(static_cast<unsigned>(std::max(decimals, 0)));
        return render_scaled(divide_round_half_away(numerator(value) * scale, denominator(value)), decimals);
    }

    auto floor(const Rational & value) -> BigInt
    {
        BigInt p = numerator(value), q = denominator(value);
        BigInt f = p / q;
        if (p < 0 && f * q != p)
            f -= 1;
        return f;
    }

    auto ceil(const Rational & value) -> BigInt
    {
        return -floor(Rational(-value));
    }

    auto round_up(const Real & value, int decimals) -> Real
    {
        Real scale = boost::multiprecision::pow(Real(10), decimals);
        return boost::multiprecision::ceil(value * scale) / scale;
    }

    auto binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t
    {
        if (k > n)
            return 0;
        k = std::min(k, n - k);
        unsigned __int128 result = 1;
        for (std::uint64_t i = 0; i < k; ++i) {
            result = result * (n - i) / (i + 1);
            if (result > UINT64_MAX)
                throw LimitExceeded("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows 64 bits");
        }
        return static_cast<std::uint64_t>(result);
    }

    auto big_binomial(std::uint64_t n, std::uint64_t k) -> BigInt
    {
        if (k > n)
            return 0;
        k = std::min(k, n - k);
        BigInt result = 1;
        for (std::uint64_t i = 0; i < k; ++i)
            result = result * (n - i) / (i + 1);
        return result;
    }
}
