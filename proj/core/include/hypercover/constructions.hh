#pragma once

#include <hypercover/hypergraph.hh>
#include <hypercover/motif.hh>
#include <hypercover/rational.hh>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hypercover
{
    enum class ConstructionTag
    {
        k4m_lower,
        k4_link,
        lift,
        c5_lower,
        k5_lower,
        sts_blowup,
        tau_lower,
        tau_upper,
        efg
    };

    auto to_string(ConstructionTag tag) -> std::string;

    struct ConstructionParams
    {
        ConstructionTag tag = ConstructionTag::k4m_lower;
        std::optional<std::uint64_t> n, d, r, t, big_n;
        std::optional<Rational> rho;
        /// 0-based permutation of {0..r}.
        std::vector<unsigned> phi;
        std::vector<std::uint64_t> factors;
        std::optional<std::uint64_t> seed;
    };

    /// a n^2 + b n + c, exact.
    struct AffineForm
    {
        Rational a, b, c;

        auto at(const Rational & n) const -> Rational { return a * n * n + b * n + c; }
    };

    /// A claimed value; the observation passes when |observed - value| <= slack.
    struct NumericClaim
    {
        Rational value;
        std::optional<AffineForm> form;
        Rational slack = 0;
    };

    enum class ClaimKind
    {
        min_degree,             ///< delta_1
        vertex_degree,          ///< deg of every vertex in [first, last)
        edge_count,
        t_max,                  ///< 2-graphs
        triangle_degree,        ///< triangle-degree of every vertex in [first, last), 2-graphs
        book_number             ///< 2-graphs
    };

    auto to_string(ClaimKind kind) -> std::string;

    struct ManifestClaim
    {
        std::string name;
        ClaimKind kind;
        NumericClaim expected;
        Vertex first = 0, last = 0;
    };

    struct UncoveredClaim
    {
        Motif motif;
        std::vector<Vertex> vertices;
        /// True: the uncovered set is exactly `vertices`. False: it contains them.
        bool exact = false;
    };

    struct PartRange
    {
        std::string name;
        Vertex first, last;
    };

    struct Manifest
    {
        ConstructionParams params;
        unsigned uniformity = 0;
        unsigned vertex_count = 0;
        std::optional<Vertex> special_vertex;
        std::vector<ManifestClaim> claims;
        std::optional<UncoveredClaim> uncovered;
        std::vector<PartRange> parts;
        std::vector<std::string> notes;
    };

    struct Construction
    {
        RGraph graph;
        Manifest manifest;
    };

    /// Vertex n-1 is v*; its link is a d-regular bipartite graph on two halves of the rest.
    auto k4minus_lower(std::uint64_t n, std::uint64_t d, std::optional<std::uint64_t> seed = std::nullopt) -> Construction;

    /// Complete 3-partite 2-graph with an n/27-regular bipartite graph inside each part.
    auto k4_lower_linkgraph(std::uint64_t n, std::optional<std::uint64_t> seed = std::nullopt) -> Construction;

    /// Adds v* = n with link G and every r-set of V(G) that does not span a K_r^(r-1).
    auto lift_link(const RGraph & g) -> Construction;

    struct LinkExtraction
    {
        LinkGraph link;
        /// Every K_r^(r-1) of the link is a non-edge, so v is not in a copy of K_{r+1}^(r).
        bool uncovered_condition = false;
        /// The graph equals the lift of the link, up to moving v to the last label.
        bool is_lift = false;
    };

    auto extract_link(const RGraph & h, Vertex v) -> LinkExtraction;

    /// Cliques on A (n vertices) and B (2n vertices) in the link of v* = 3n, plus all AAB and ABB triples.
    auto c5_lower(std::uint64_t n) -> Construction;

    /// All triples meeting both halves of a balanced bipartition of 2n vertices.
    auto k5_lower(std::uint64_t n) -> Construction;

    /// Blow-up of a 3-graph H on N vertices by parts of size n, plus v* = N n. When `t` is
    /// given, requires alpha(H) <= t - 1 and claims v* is uncovered for K_{t+1}^(3).
    auto blowup_sts(const RGraph & h, std::uint64_t n, std::optional<std::uint64_t> t = std::nullopt) -> Construction;

    /// Balanced complete r-partite graph plus a d-regular bipartite graph inside each part.
    auto tau_lower_interval(std::uint64_t n, const Rational & rho, std::uint64_t r, std::optional<std::uint64_t> seed = std::nullopt) -> Construction;

    /// Balanced complete (r+1)-partite graph with the blocks between the first half of part
    /// i and the second half of part phi(i) thinned to d-regular. `phi` is 0-based and
    /// defaults to i -> i+1 mod r+1.
    auto tau_upper_interval(std::uint64_t n, const Rational & rho, std::uint64_t r, std::vector<unsigned> phi = {},
            std::optional<std::uint64_t> seed = std::nullopt) -> Construction;

    /// Vertices are vectors in [r_1] x ... x [r_k] x [t], adjacent iff they differ in each of
    /// the first k coordinates.
    auto efg_graph(const std::vector<std::uint64_t> & factors, std::uint64_t t) -> Construction;

    struct ClaimCheck
    {
        std::string name;
        std::string observed, expected;
        bool passed = false;
    };

    struct ManifestCheckOptions
    {
        unsigned threads = 1;
        /// Skip the uncovered-vertex claim above this many vertices.
        unsigned cover_vertex_limit = 64;
    };

    /// Measures every claim of the manifest on the graph.
    auto check_manifest(const RGraph & g, const Manifest & manifest, const ManifestCheckOptions & options = {}) -> std::vector<ClaimCheck>;

    auto to_json(const Manifest & manifest) -> nlohmann::json;
}
