#pragma once

#include <hypercover/hypergraph.hh>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>

namespace hypercover
{
    enum class StsProvenance
    {
        bose,
        skolem,
        canned,
        hill_climb,
        external
    };

    auto to_string(StsProvenance provenance) -> std::string;

    struct STS
    {
        unsigned order;
        RGraph triples;
        StsProvenance provenance;
        /// Canned system name or source file.
        std::string source;
    };

    /// t = 3, 9 and 19 use fixed systems, t = 7 the Fano plane {i, i+1, i+3} mod 7, other
    /// t = 3 (mod 6) the Bose construction and t = 1 (mod 6) the Skolem construction.
    auto sts(unsigned t) -> STS;

    /// A random STS of order t by hill climbing from the empty partial system. The result
    /// depends only on t and the seed.
    auto random_sts(unsigned t, std::uint64_t seed) -> STS;

    struct StsCheck
    {
        bool valid = true;
        /// First pair in lexicographic order not lying in exactly one triple.
        std::optional<std::pair<Vertex, Vertex>> violating_pair;
        /// How many triples contain that pair.
        unsigned pair_multiplicity = 0;
    };

    auto verify_sts(const RGraph & h) -> StsCheck;

    /// Smallest independence number over all STS of order t, where known: 3, 7, 9, 13, 15, 19.
    auto known_minimum_independence(unsigned t) -> std::optional<std::uint64_t>;

    struct LoadedSts
    {
        STS system;
        std::uint64_t alpha;
        std::optional<std::uint64_t> known_minimum;
        bool meets_minimum = false;
        /// Set when the order has a known minimum that this system does not attain.
        std::optional<std::string> warning;
    };

    /// Reads a hypergraph file, checks it is an STS (throwing InvalidArgument naming the
    /// violating pair otherwise) and measures its independence number.
    auto load_sts(const std::filesystem::path & file) -> LoadedSts;

    /// Directory of bundled systems; HYPERCOVER_DATA_DIR overrides the build-time location.
    auto sts_data_directory() -> std::filesystem::path;
}
