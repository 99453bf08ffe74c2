#pragma once

#include <hypercover/hypergraph.hh>

#include <string>
#include <string_view>

namespace hypercover
{
    enum class MotifKind
    {
        k4,             ///< K_4^(3), the tetrahedron
        k4_minus,       ///< K_4^(3)-, the generalised triangle
        c5,             ///< C_5^(3), the tight 5-cycle
        complete3,      ///< K_t^(3) for t >= 5
        clique          ///< K_r^(r-1), the complete (r-1)-graph on r vertices
    };

    /// A small named pattern to cover.
    class Motif
    {
    public:
        static auto k4() -> Motif;
        static auto k4_minus() -> Motif;
        static auto c5() -> Motif;
        static auto complete3(unsigned t) -> Motif;
        static auto clique(unsigned r) -> Motif;

        /// CLI names: k4, k4-, c5, k{t} (t >= 5), clique{r} (r >= 3).
        static auto parse(std::string_view name) -> Motif;

        auto kind() const -> MotifKind { return _kind; }
        auto parameter() const -> unsigned { return _parameter; }
        auto pattern() const -> const RGraph & { return _pattern; }
        auto uniformity() const -> unsigned { return _pattern.uniformity(); }
        auto order() const -> unsigned { return _pattern.vertex_count(); }

        /// The canonical CLI name.
        auto name() const -> std::string;

        friend auto operator==(const Motif & a, const Motif & b) -> bool
        {
            return a._kind == b._kind && a._parameter == b._parameter;
        }

    private:
        Motif(MotifKind kind, unsigned parameter, RGraph pattern) :
            _kind(kind), _parameter(parameter), _pattern(std::move(pattern))
        {
        }

        MotifKind _kind;
        unsigned _parameter;
        RGraph _pattern;
    };
}
