#pragma once

#include <hypercover/hypergraph.hh>

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace hypercover
{
    /// Bitset adjacency rows for a 2-graph. Graphs with n <= 64 use one machine word per
    /// row, which is what keeps triangle counting cheap in the exhaustive searches.
    class Adjacency
    {
    public:
        explicit Adjacency(const RGraph & g);

        auto vertex_count() const -> unsigned { return _n; }
        auto row(Vertex v) const -> std::span<const std::uint64_t> { return {_bits.data() + std::size_t(v) * _words, _words}; }

        auto adjacent(Vertex u, Vertex v) const -> bool
        {
            return (_bits[std::size_t(u) * _words + v / 64] >> (v % 64)) & 1;
        }

        auto degree(Vertex v) const -> std::uint64_t;

        /// |N(u) n N(v)|.
        auto common_neighbours(Vertex u, Vertex v) const -> std::uint64_t
        {
            std::uint64_t count = 0;
            auto a = row(u), b = row(v);
            for (unsigned w = 0; w < _words; ++w)
                count += static_cast<std::uint64_t>(std::popcount(a[w] & b[w]));
            return count;
        }

        /// Number of triangles through v.
        auto triangle_degree(Vertex v) const -> std::uint64_t;

    private:
        unsigned _n, _words;
        std::vector<std::uint64_t> _bits;
    };
}
