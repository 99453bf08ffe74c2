#pragma once

#include <hypercover/hypergraph.hh>
#include <hypercover/rng.hh>

#include <span>

namespace hypercover::testing
{
    /// Each r-set is an edge independently with probability num/den.
    inline auto random_graph(unsigned r, unsigned n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) -> RGraph
    {
        Rng rng(seed);
        RGraphBuilder b(r, n);
        for_each_subset(n, r, [&] (std::span<const Vertex> e) {
            if (rng.below(den) < num)
                b.add(e);
        });
        return std::move(b).build();
    }
}
