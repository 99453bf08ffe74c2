#include <hypercover/errors.hh>
#include <hypercover/rng.hh>

#include <limits>

namespace hypercover
{
    auto Rng::below(std::uint64_t bound) -> std::uint64_t
    {
        if (bound == 0)
            throw InvalidArgument("empty range");
        auto limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do
            x = next();
        while (x >= limit);
        return x % bound;
    }

    auto Rng::bernoulli(const Rational & p) -> bool
    {
        if (p < 0 || p > 1)
            throw InvalidArgument("probability " + to_string(p) + " is outside [0, 1]");
        if (p == 1) {
            next();
            return true;
        }
        BigInt scaled = numerator(p) << 64;
        scaled /= denominator(p);
        auto threshold = static_cast<std::uint64_t>(scaled);
        return next() < threshold;
    }

    auto fresh_seed() -> std::uint64_t
    {
        std::random_device device;
        return (std::uint64_t{device()} << 32) ^ device();
    }
}
