#pragma once

#include <hypercover/hypergraph.hh>
#include <hypercover/motif.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hypercover
{
    /// image[i] is the host vertex that pattern vertex i maps to.
    struct Embedding
    {
        std::vector<Vertex> image;

        auto operator<=>(const Embedding &) const = default;
    };

    struct CoverReport
    {
        Motif motif;
        std::vector<Vertex> uncovered;
        std::map<Vertex, Embedding> witness_per_vertex;
    };

    /// True iff the image is injective and every pattern edge maps to a host edge.
    auto is_embedding(const RGraph & host, const RGraph & pattern, const Embedding & embedding) -> bool;

    /// Searches for a copy of the motif (not necessarily induced) whose vertex set contains v.
    /// Pattern vertices are tried at v in ascending order and the rest are assigned in
    /// ascending order to ascending host vertices, so the returned witness is the first
    /// embedding in that order.
    auto covers(const RGraph & host, const Motif & motif, Vertex v) -> std::optional<Embedding>;

    /// Applies covers to every vertex. The report does not depend on `threads`.
    auto uncovered_vertices(const RGraph & host, const Motif & motif, unsigned threads = 1) -> CoverReport;

    /// Number of copies of K_target^(target-1) through x in an (target-1)-graph. For a
    /// 2-graph and target 3 this is the triangle-degree.
    auto clique_degree(const RGraph & g, Vertex x, unsigned target) -> std::uint64_t;

    /// clique_degree for every vertex, target = uniformity + 1.
    auto clique_degrees(const RGraph & g) -> std::vector<std::uint64_t>;

    auto triangle_count(const RGraph & g) -> std::uint64_t;

    struct TriangleDegreeMax
    {
        std::uint64_t value = 0;
        Vertex argmax = 0;
    };

    /// Maximum triangle-degree of a 2-graph, with the least maximising vertex.
    auto t_max(const RGraph & g) -> TriangleDegreeMax;

    /// |N(x) n N(y)| for an edge xy.
    auto book_size(const RGraph & g, Vertex x, Vertex y) -> std::uint64_t;

    struct BookNumber
    {
        std::uint64_t value = 0;
        std::optional<std::pair<Vertex, Vertex>> edge;
    };

    /// Largest book over all edges; 0 with no edge for an edgeless graph.
    auto book_number(const RGraph & g) -> BookNumber;

    struct Bipartition
    {
        std::uint64_t inside_edges = 0;
        /// One side of the partition; the other side is its complement.
        VertexSet side;
        /// False when the value is only a heuristic upper bound.
        bool exact = true;
    };

    inline constexpr unsigned default_exact_limit = 24;

    /// Fewest edges that must be deleted to make a 2-graph bipartite, by enumerating all
    /// 2^(n-1) bipartitions. Throws LimitExceeded above `exact_limit` vertices.
    auto bipartite_edit_distance(const RGraph & g, unsigned exact_limit = default_exact_limit) -> Bipartition;

    /// Local search from a greedy split. Always an upper bound; flagged exact = false.
    auto bipartite_edit_distance_upper_bound(const RGraph & g) -> Bipartition;

    struct Independence
    {
        std::uint64_t value = 0;
        VertexSet witness;
    };

    /// Largest vertex set spanning no edge. Exact branch and bound; throws LimitExceeded
    /// above `exact_limit` vertices.
    auto independence_number(const RGraph & g, unsigned exact_limit = default_exact_limit) -> Independence;
}
