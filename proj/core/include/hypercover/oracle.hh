#pragma once

#include <hypercover/hypergraph.hh>
#include <hypercover/motif.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace hypercover
{
    enum class Objective
    {
        max_delta1_no_cover,
        min_tmax,
        min_book
    };

    auto to_string(Objective objective) -> std::string;

    struct SearchOptions
    {
        /// 0 means every hardware thread. Values and witnesses do not depend on it.
        unsigned threads = 1;
        std::optional<std::chrono::steady_clock::time_point> deadline;
        /// A value known to be attainable: graphs that cannot reach it are pruned at once.
        /// For max_delta1_no_cover this is a lower bound, for the min objectives an upper bound.
        std::optional<std::uint64_t> known_attainable;
        /// Let workers prune against each other's best value.
        bool share_incumbent = true;
        /// Largest number of candidate edges, i.e. C(n, r), searched without complaint.
        unsigned edge_limit = 35;
    };

    struct SearchResult
    {
        Objective objective;
        unsigned n;
        std::optional<Motif> motif;
        std::optional<std::uint64_t> m;
        std::uint64_t value;
        /// Among graphs attaining `value`, the one whose edge set, read as a bitmask over
        /// lexicographically ranked candidate edges, is smallest.
        RGraph witness;
        std::uint64_t graphs_scanned = 0;
        std::chrono::duration<double> wall_time{};
        /// False when the deadline cut the search short; value is then only a bound.
        bool completed = true;
    };

    /// Largest delta_1 over n-vertex graphs in which vertex 0 lies in no copy of the motif.
    auto max_delta1_no_cover(unsigned n, const Motif & motif, const SearchOptions & options = {}) -> SearchResult;

    /// Smallest t_max over n-vertex 2-graphs with exactly m edges.
    auto min_tmax(unsigned n, std::uint64_t m, const SearchOptions & options = {}) -> SearchResult;

    /// Smallest book number over n-vertex 2-graphs with exactly m edges.
    auto min_book(unsigned n, std::uint64_t m, const SearchOptions & options = {}) -> SearchResult;
}
