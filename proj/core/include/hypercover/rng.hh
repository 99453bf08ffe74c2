#pragma once

#include <hypercover/rational.hh>

#include <cstdint>
#include <random>
#include <vector>

namespace hypercover
{
    inline constexpr std::uint64_t default_seed = 20240101;

    /// Seeded generator whose outputs are identical across standard libraries. The
    /// distributions in <random> are implementation defined, so the ones needed here are
    /// built directly on the mt19937_64 bit stream.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : _engine(seed) {}

        auto next() -> std::uint64_t { return _engine(); }

        /// Uniform on [0, bound), bound > 0, by rejection.
        auto below(std::uint64_t bound) -> std::uint64_t;

        /// True with probability p for p in [0, 1], resolved to 2^-64.
        auto bernoulli(const Rational & p) -> bool;

        template <typename T>
        auto shuffle(std::vector<T> & items) -> void
        {
            for (std::size_t i = items.size(); i > 1; --i)
                std::swap(items[i - 1], items[below(i)]);
        }

    private:
        std::mt19937_64 _engine;
    };

    /// Seed drawn from the operating system, for opting out of reproducibility.
    auto fresh_seed() -> std::uint64_t;
}
