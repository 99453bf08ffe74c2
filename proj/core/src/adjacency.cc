#include <hypercover/adjacency.hh>
#include <hypercover/errors.hh>

namespace hypercover
{
    Adjacency::Adjacency(const RGraph & g) :
        _n(g.vertex_count()),
        _words((g.vertex_count() + 63) / 64),
        _bits(std::size_t(_n) * _words, 0)
    {
        if (g.uniformity() != 2)
            throw InvalidArgument("adjacency rows need a 2-graph");
        for (auto e : g.edges()) {
            _bits[std::size_t(e[0]) * _words + e[1] / 64] |= std::uint64_t{1} << (e[1] % 64);
            _bits[std::size_t(e[1]) * _words + e[0] / 64] |= std::uint64_t{1} << (e[0] % 64);
        }
    }

    auto Adjacency::degree(Vertex v) const -> std::uint64_t
    {
        std::uint64_t count = 0;
        for (auto w : row(v))
            count += static_cast<std::uint64_t>(std::popcount(w));
        return count;
    }

    auto Adjacency::triangle_degree(Vertex v) const -> std::uint64_t
    {
        auto r = row(v);
        std::uint64_t twice = 0;
        for (unsigned w = 0; w < _words; ++w) {
            auto bits = r[w];
            while (bits) {
                Vertex u = w * 64 + static_cast<Vertex>(std::countr_zero(bits));
                bits &= bits - 1;
                twice += common_neighbours(v, u);
            }
        }
        return twice / 2;
    }
}
