#include <hypercover/errors.hh>
#include <hypercover/parallel.hh>
#include <hypercover/verifier.hh>

#include <algorithm>
#include <iomanip>

namespace hypercover
{
    namespace
    {
        const Suite concrete_suites[] = {
            Suite::k4minus, Suite::k4, Suite::c5, Suite::kt, Suite::tau, Suite::tripartite, Suite::book, Suite::curves
        };

        struct Scheduled
        {
            Suite suite;
            detail::ClaimSpec spec;
        };

        auto schedule(Suite suite) -> std::vector<Scheduled>
        {
            std::vector<Scheduled> out;
            for (auto s : concrete_suites)
                if (suite == Suite::all || suite == s)
                    for (auto & spec : detail::suite_claims(s))
                        out.push_back({s, std::move(spec)});
            return out;
        }

        auto repro_line(Suite suite, const std::string & id, const SuiteOptions & options) -> std::string
        {
            std::string line = "hypercover verify --suite " + to_string(suite) + " --claim " + id;
            if (options.seed != default_seed)
                line += " --seed " + std::to_string(options.seed);
            return line;
        }
    }

    auto to_string(ClaimStatus status) -> std::string
    {
        switch (status) {
            case ClaimStatus::pass: return "PASS";
            case ClaimStatus::fail: return "FAIL";
            case ClaimStatus::skipped: return "SKIPPED";
        }
        return "?";
    }

    auto to_string(Suite suite) -> std::string
    {
        switch (suite) {
            case Suite::k4minus: return "k4minus";
            case Suite::k4: return "k4";
            case Suite::c5: return "c5";
            case Suite::kt: return "kt";
            case Suite::tau: return "tau";
            case Suite::tripartite: return "tripartite";
            case Suite::book: return "book";
            case Suite::curves: return "curves";
            case Suite::all: return "all";
        }
        return "?";
    }

    auto parse_suite(std::string_view name) -> Suite
    {
        std::string lower(name);
        std::transform(lower.begin(), lower.end(), lower.begin(), [] (unsigned char c) { return std::tolower(c); });
        for (auto s : concrete_suites)
            if (to_string(s) == lower)
                return s;
        if (lower == "all")
            return Suite::all;
        throw InvalidArgument("unknown suite '" + std::string(name) + "'; expected one of k4minus, k4, c5, kt, tau, tripartite, book, curves, all");
    }

    auto suite_claim_ids(Suite suite) -> std::vector<std::string>
    {
        std::vector<std::string> ids;
        for (auto & item : schedule(suite))
            ids.push_back(item.spec.id);
        return ids;
    }

    auto run_suite(Suite suite, const SuiteOptions & options) -> std::vector<ClaimOutcome>
    {
        auto items = schedule(suite);
        if (options.filter)
            std::erase_if(items, [&] (const Scheduled & s) { return ! options.filter(s.spec.id); });
        if (options.only) {
            std::erase_if(items, [&] (const Scheduled & s) { return s.spec.id != *options.only; });
            if (items.empty())
                throw InvalidArgument("suite " + to_string(suite) + " has no claim '" + *options.only + "'");
        }

        // decide skips up front from the estimates alone
        std::vector<bool> skip(items.size());
        double remaining = options.budget.count();
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (items[i].spec.estimate > remaining)
                skip[i] = true;
            else
                remaining -= items[i].spec.estimate;
        }

        std::vector<ClaimOutcome> outcomes(items.size());
        parallel_for(items.size(), options.threads, [&] (std::size_t i) {
            auto & item = items[i];
            ClaimOutcome outcome;
            if (skip[i]) {
                outcome.id = item.spec.id;
                outcome.status = ClaimStatus::skipped;
                outcome.note = "estimated cost exceeds the remaining budget";
            } else {
                try {
                    outcome = item.spec.run(options);
                } catch (const std::exception & e) {
                    outcome.status = ClaimStatus::fail;
                    outcome.observed = std::string("exception: ") + e.what();
                }
                outcome.id = item.spec.id;
            }
            outcome.suite = to_string(item.suite);
            outcome.repro = repro_line(item.suite, item.spec.id, options);
            outcomes[i] = std::move(outcome);
        });
        return outcomes;
    }

    auto random_tripartite(unsigned n, const std::array<unsigned, 3> & sizes, const Rational & alpha, const Rational & beta,
            const Rational & gamma, std::uint64_t seed) -> RGraph
    {
        if (std::size_t(sizes[0]) + sizes[1] + sizes[2] != n)
            throw InvalidArgument("part sizes must sum to n");
        for (auto * p : {&alpha, &beta, &gamma})
            if (*p < 0 || *p > 1)
                throw InvalidArgument("densities must lie in [0, 1]");

        Vertex b0 = sizes[0], c0 = sizes[0] + sizes[1];
        auto part = [&] (Vertex v) { return v < b0 ? 0 : v < c0 ? 1 : 2; };
        // density for the pair of parts {i, j}, indexed by the missing part
        const Rational * density[3] = {&alpha, &beta, &gamma};

        Rng rng(seed);
        RGraphBuilder builder(2, n);
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = x + 1; y < n; ++y) {
                auto px = part(x), py = part(y);
                if (px == py)
                    continue;
                if (rng.bernoulli(*density[3 - px - py]))
                    builder.add({x, y});
            }
        return std::move(builder).build();
    }

    auto to_json(const std::vector<ClaimOutcome> & outcomes) -> nlohmann::json
    {
        auto claims = nlohmann::json::array();
        std::size_t counts[3] = {};
        for (const auto & o : outcomes) {
            ++counts[static_cast<int>(o.status)];
            nlohmann::json j = {
                {"id", o.id},
                {"suite", o.suite},
                {"status", to_string(o.status)},
                {"observed", o.observed},
                {"expected", o.expected},
                {"tolerance", o.tolerance}
            };
            if (o.status == ClaimStatus::fail)
                j["repro"] = o.repro;
            if (! o.note.empty())
                j["note"] = o.note;
            claims.push_back(std::move(j));
        }
        return {
            {"claims", claims},
            {"summary", {{"pass", counts[0]}, {"fail", counts[1]}, {"skipped", counts[2]}}}
        };
    }

    auto write_table(std::ostream & out, const std::vector<ClaimOutcome> & outcomes) -> void
    {
        std::size_t width = 5;
        for (const auto & o : outcomes)
            width = std::max(width, o.id.size());
        auto clip = [] (const std::string & s) { return s.size() > 40 ? s.substr(0, 37) + "..." : s; };

        out << std::left << std::setw(int(width)) << "claim" << "  " << std::setw(7) << "status" << "  "
            << std::setw(40) << "observed" << "  expected\n";
        std::size_t counts[3] = {};
        for (const auto & o : outcomes) {
            ++counts[static_cast<int>(o.status)];
            out << std::setw(int(width)) << o.id << "  " << std::setw(7) << to_string(o.status) << "  "
                << std::setw(40) << clip(o.observed) << "  " << clip(o.expected) << '\n';
        }
        out << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped\n";
        for (const auto & o : outcomes)
            if (o.status == ClaimStatus::fail)
                out << "reproduce " << o.id << ": " << o.repro << '\n';
    }

    auto all_passed(const std::vector<ClaimOutcome> & outcomes) -> bool
    {
        return std::none_of(outcomes.begin(), outcomes.end(), [] (const ClaimOutcome & o) { return o.status == ClaimStatus::fail; });
    }
}
