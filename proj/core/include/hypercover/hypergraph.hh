#pragma once

#include <hypercover/rational.hh>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace hypercover
{
    using Vertex = std::uint32_t;

    inline constexpr unsigned max_uniformity = 16;

    /// Strictly ascending tuple of distinct vertex indices.
    class VertexSet
    {
    public:
        VertexSet() = default;
        VertexSet(std::initializer_list<Vertex> members);
        explicit VertexSet(std::vector<Vertex> members);

        auto members() const -> std::span<const Vertex> { return _members; }
        auto size() const -> std::size_t { return _members.size(); }
        auto empty() const -> bool { return _members.empty(); }
        auto contains(Vertex v) const -> bool;
        auto operator[](std::size_t i) const -> Vertex { return _members[i]; }

        auto operator<=>(const VertexSet &) const = default;

    private:
        std::vector<Vertex> _members;
    };

    /// An r-uniform hypergraph on vertices {0, ..., n-1}. Immutable once built.
    ///
    /// Edges are kept twice: as a lexicographically sorted flat list for iteration and
    /// serialisation, and as a bitmap indexed by the colexicographic rank of each r-set so
    /// that membership queries are a single bit test.
    class RGraph
    {
    public:
        class EdgeIterator
        {
        public:
            using value_type = std::span<const Vertex>;
            using difference_type = std::ptrdiff_t;

            EdgeIterator() = default;
            EdgeIterator(const Vertex * at, unsigned r) : _at(at), _r(r) {}

            auto operator*() const -> std::span<const Vertex> { return {_at, _r}; }
            auto operator++() -> EdgeIterator &
            {
                _at += _r;
                return *this;
            }
            auto operator++(int) -> EdgeIterator
            {
                auto old = *this;
                ++*this;
                return old;
            }
            auto operator==(const EdgeIterator & other) const -> bool { return _at == other._at; }

        private:
            const Vertex * _at = nullptr;
            unsigned _r = 0;
        };

        struct EdgeRange
        {
            EdgeIterator first, last;
            auto begin() const -> EdgeIterator { return first; }
            auto end() const -> EdgeIterator { return last; }
        };

        /// Edgeless r-graph on n vertices. Requires n >= r. Uniformity 1 only arises as the
        /// link of an (r-1)-set; from_edge_list and the text reader insist on r >= 2.
        RGraph(unsigned r, unsigned n);

        /// Sorts each edge and deduplicates. Throws InvalidArgument on malformed input.
        static auto from_edge_list(unsigned r, unsigned n, std::span<const std::vector<Vertex>> edges) -> RGraph;
        static auto from_edge_list(unsigned r, unsigned n, std::initializer_list<std::vector<Vertex>> edges) -> RGraph;

        auto uniformity() const -> unsigned { return _r; }
        auto vertex_count() const -> unsigned { return _n; }
        auto edge_count() const -> std::size_t { return _flat.size() / _r; }

        auto edge(std::size_t i) const -> std::span<const Vertex> { return {_flat.data() + i * _r, _r}; }
        auto edges() const -> EdgeRange { return {{_flat.data(), _r}, {_flat.data() + _flat.size(), _r}}; }

        /// `edge` must be strictly ascending with every entry < n.
        auto has_edge(std::span<const Vertex> edge) const -> bool;

        /// Any order; returns false for repeated vertices.
        auto has_edge(std::initializer_list<Vertex> edge) const -> bool;

        /// Colexicographic rank of an ascending r-set, in [0, C(n, r)).
        auto rank(std::span<const Vertex> edge) const -> std::uint64_t;

        friend auto operator==(const RGraph & a, const RGraph & b) -> bool
        {
            return a._r == b._r && a._n == b._n && a._flat == b._flat;
        }

    private:
        friend class RGraphBuilder;

        unsigned _r, _n;
        std::vector<Vertex> _flat;
        std::vector<std::uint64_t> _choose;
        std::vector<std::uint64_t> _membership;

        auto choose(Vertex v, unsigned k) const -> std::uint64_t { return _choose[v * (_r + 1) + k]; }
        auto index() -> void;
    };

    /// Collects edges in any order, then produces a sorted, deduplicated RGraph.
    class RGraphBuilder
    {
    public:
        RGraphBuilder(unsigned r, unsigned n);

        auto add(std::span<const Vertex> edge) -> RGraphBuilder &;
        auto add(std::initializer_list<Vertex> edge) -> RGraphBuilder &;

        auto uniformity() const -> unsigned { return _r; }
        auto vertex_count() const -> unsigned { return _n; }

        auto build() && -> RGraph;

    private:
        unsigned _r, _n;
        std::vector<Vertex> _flat;
    };

    struct DegreeProfile
    {
        std::vector<std::uint64_t> per_vertex;
        std::uint64_t min_degree = 0;
        std::uint64_t max_degree = 0;
    };

    struct MinDegree
    {
        std::uint64_t value = 0;
        VertexSet witness;
    };

    struct LinkGraph
    {
        RGraph graph;
        /// original[i] is the vertex of the parent graph relabelled to i.
        std::vector<Vertex> original;
    };

    /// Number of (r - |S|)-sets T with S u T an edge. Requires |S| <= r.
    auto degree(const RGraph & g, const VertexSet & s) -> std::uint64_t;

    auto degree_profile(const RGraph & g) -> DegreeProfile;

    /// Minimum i-degree over all i-sets, with the lexicographically least witness. 1 <= i <= r-1.
    auto min_i_degree(const RGraph & g, unsigned i) -> MinDegree;

    /// Link of a nonempty S with |S| < r, on V \ S relabelled order-preservingly.
    auto link(const RGraph & g, const VertexSet & s) -> LinkGraph;

    /// |E| / C(n, r), exactly.
    auto edge_density(const RGraph & g) -> Rational;

    /// Calls fn on every k-subset of {0..n-1} in lexicographic order.
    auto for_each_subset(unsigned n, unsigned k, const std::function<void (std::span<const Vertex>)> & fn) -> void;

    /// Complete r-graph on n vertices.
    auto complete_graph(unsigned r, unsigned n) -> RGraph;
}
