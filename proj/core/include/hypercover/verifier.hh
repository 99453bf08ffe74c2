#pragma once

#include <hypercover/hypergraph.hh>
#include <hypercover/rational.hh>
#include <hypercover/rng.hh>

#include <nlohmann/json.hpp>

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hypercover
{
    enum class ClaimStatus
    {
        pass,
        fail,
        skipped
    };

    /// "PASS", "FAIL" or "SKIPPED".
    auto to_string(ClaimStatus status) -> std::string;

    struct ClaimOutcome
    {
        std::string id;
        std::string suite;
        ClaimStatus status = ClaimStatus::pass;
        std::string observed, expected;
        /// "exact", "abs <eps>", "slack <k>" or "interval".
        std::string tolerance = "exact";
        /// Command line that re-runs just this claim.
        std::string repro;
        /// Why a claim was skipped, or extra context for a failure.
        std::string note;
    };

    enum class Suite
    {
        k4minus,
        k4,
        c5,
        kt,
        tau,
        tripartite,
        book,
        curves,
        all
    };

    auto to_string(Suite suite) -> std::string;

    /// Lower-case suite names as on the command line. Throws InvalidArgument otherwise.
    auto parse_suite(std::string_view name) -> Suite;

    struct SuiteOptions
    {
        /// Claims run concurrently on this many workers; 0 means every hardware thread.
        unsigned threads = 1;
        /// Claims whose estimated cost does not fit in what is left are skipped. The
        /// accounting uses fixed estimates, so the skip decision does not depend on timing.
        std::chrono::duration<double> budget = std::chrono::seconds(600);
        std::uint64_t seed = default_seed;
        /// Run only the claim with this id.
        std::optional<std::string> only;
        /// When set, run only the claims whose id it accepts.
        std::function<bool (const std::string &)> filter;
    };

    /// Runs the claims of a suite and returns their outcomes in declaration order.
    auto run_suite(Suite suite, const SuiteOptions & options = {}) -> std::vector<ClaimOutcome>;

    /// Claim ids of a suite in declaration order.
    auto suite_claim_ids(Suite suite) -> std::vector<std::string>;

    /// Tripartite 2-graph with parts of the given sizes, in order A, B, C. Each B-C pair is
    /// an edge with probability alpha, each A-C pair with probability beta and each A-B
    /// pair with probability gamma, independently.
    auto random_tripartite(unsigned n, const std::array<unsigned, 3> & sizes, const Rational & alpha, const Rational & beta,
            const Rational & gamma, std::uint64_t seed) -> RGraph;

    auto to_json(const std::vector<ClaimOutcome> & outcomes) -> nlohmann::json;

    /// Fixed-width table, one row per claim, then a count line.
    auto write_table(std::ostream & out, const std::vector<ClaimOutcome> & outcomes) -> void;

    /// True iff no outcome failed.
    auto all_passed(const std::vector<ClaimOutcome> & outcomes) -> bool;

    // Used by the suite definitions.
    namespace detail
    {
        struct ClaimSpec
        {
            std::string id;
            /// Rough cost in seconds on one core.
            double estimate = 0.01;
            std::function<ClaimOutcome (const SuiteOptions &)> run;
        };

        auto suite_claims(Suite suite) -> std::vector<ClaimSpec>;
    }
}
