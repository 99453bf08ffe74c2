#include <hypercover/errors.hh>
#include <hypercover/hypergraph_io.hh>
#include <hypercover/rng.hh>
#include <hypercover/steiner.hh>
#include <hypercover/subgraph_cover.hh>

#include <cstdlib>
#include <map>

#ifndef HYPERCOVER_DATA_DIR
#define HYPERCOVER_DATA_DIR "data"
#endif

namespace hypercover
{
    namespace
    {
        auto fano() -> RGraph
        {
            RGraphBuilder b(3, 7);
            for (Vertex i = 0; i < 7; ++i)
                b.add({i, (i + 1) % 7, (i + 3) % 7});
            return std::move(b).build();
        }

        /// Lines of the affine plane over Z_3, point (x, y) labelled 3x + y.
        auto affine_plane_3() -> RGraph
        {
            RGraphBuilder b(3, 9);
            const int directions[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
            for (auto [dx, dy] : directions)
                for (int x = 0; x < 3; ++x)
                    for (int y = 0; y < 3; ++y) {
                        auto point = [&] (int k) { return static_cast<Vertex>(3 * ((x + k * dx) % 3) + (y + k * dy) % 3); };
                        b.add({point(0), point(1), point(2)});
                    }
            return std::move(b).build();
        }

        /// Cyclic system of order 19 developed from base blocks {0,1,4}, {0,2,12}, {0,5,13}.
        /// Its independence number is 7, the least possible at this order.
        auto cyclic_19() -> RGraph
        {
            const Vertex base[3][3] = {{0, 1, 4}, {0, 2, 12}, {0, 5, 13}};
            RGraphBuilder b(3, 19);
            for (auto & block : base)
                for (Vertex s = 0; s < 19; ++s)
                    b.add({(block[0] + s) % 19, (block[1] + s) % 19, (block[2] + s) % 19});
            return std::move(b).build();
        }

        /// Order 6k+3 from the idempotent commutative quasigroup x o y = (x + y)(m + 1)/2 mod m,
        /// m = 2k + 1. Point (x, i) is labelled i m + x.
        auto bose(unsigned t) -> RGraph
        {
            unsigned m = t / 3;
            auto label = [&] (unsigned x, unsigned i) { return static_cast<Vertex>((i % 3) * m + x); };
            auto op = [&] (unsigned x, unsigned y) { return (x + y) * ((m + 1) / 2) % m; };
            RGraphBuilder b(3, t);
            for (unsigned x = 0; x < m; ++x)
                b.add({label(x, 0), label(x, 1), label(x, 2)});
            for (unsigned i = 0; i < 3; ++i)
                for (unsigned x = 0; x < m; ++x)
                    for (unsigned y = x + 1; y < m; ++y)
                        b.add({label(x, i), label(y, i), label(op(x, y), i + 1)});
            return std::move(b).build();
        }

        /// Order 6k+1 from the half-idempotent commutative quasigroup on Z_{2k}: the addition
        /// table with 2j relabelled j and 2j+1 relabelled k + j. Point (x, i) is i 2k + x and
        /// the extra point is 6k.
        auto skolem(unsigned t) -> RGraph
        {
            unsigned k = (t - 1) / 6, m = 2 * k;
            Vertex infinity = t - 1;
            auto label = [&] (unsigned x, unsigned i) { return static_cast<Vertex>((i % 3) * m + x); };
            auto op = [&] (unsigned x, unsigned y) {
                auto s = (x + y) % m;
                return s % 2 == 0 ? s / 2 : k + s / 2;
            };
            RGraphBuilder b(3, t);
            for (unsigned x = 0; x < k; ++x)
                b.add({label(x, 0), label(x, 1), label(x, 2)});
            for (unsigned i = 0; i < 3; ++i)
                for (unsigned x = 0; x < k; ++x)
                    b.add({infinity, label(k + x, i), label(x, i + 1)});
            for (unsigned i = 0; i < 3; ++i)
                for (unsigned x = 0; x < m; ++x)
                    for (unsigned y = x + 1; y < m; ++y)
                        b.add({label(x, i), label(y, i), label(op(x, y), i + 1)});
            return std::move(b).build();
        }
    }

    auto to_string(StsProvenance provenance) -> std::string
    {
        switch (provenance) {
            case StsProvenance::bose: return "bose";
            case StsProvenance::skolem: return "skolem";
            case StsProvenance::canned: return "canned";
            case StsProvenance::hill_climb: return "hill-climb";
            case StsProvenance::external: return "external";
        }
        return "?";
    }

    auto sts(unsigned t) -> STS
    {
        if (t < 3 || (t % 6 != 1 && t % 6 != 3))
            throw InvalidArgument("a Steiner triple system of order " + std::to_string(t) + " does not exist; need t = 1 or 3 (mod 6), t >= 3");
        if (t > 2000)
            throw LimitExceeded("STS order " + std::to_string(t) + " is too large");
        if (t == 3)
            return {3, RGraph::from_edge_list(3, 3, {{0, 1, 2}}), StsProvenance::canned, "single-triple"};
        if (t == 7)
            return {7, fano(), StsProvenance::canned, "fano"};
        if (t == 9)
            return {9, affine_plane_3(), StsProvenance::canned, "ag23"};
        if (t == 19)
            return {19, cyclic_19(), StsProvenance::canned, "cyclic19"};
        if (t % 6 == 3)
            return {t, bose(t), StsProvenance::bose, "bose"};
        return {t, skolem(t), StsProvenance::skolem, "skolem"};
    }

    auto random_sts(unsigned t, std::uint64_t seed) -> STS
    {
        if (t < 3 || (t % 6 != 1 && t % 6 != 3))
            throw InvalidArgument("a Steiner triple system of order " + std::to_string(t) + " does not exist; need t = 1 or 3 (mod 6), t >= 3");
        if (t > 200)
            throw LimitExceeded("hill climbing is capped at order 200");

        // third[x t + y] is the point completing the pair xy to a block, or t if xy is uncovered
        Rng rng(seed);
        std::vector<unsigned> third(std::size_t(t) * t, t);
        auto at = [&] (unsigned x, unsigned y) -> unsigned & { return third[std::size_t(x) * t + y]; };
        auto set_block = [&] (unsigned x, unsigned y, unsigned z, unsigned value_for_z, unsigned value_for_y, unsigned value_for_x) {
            at(x, y) = at(y, x) = value_for_z;
            at(x, z) = at(z, x) = value_for_y;
            at(y, z) = at(z, y) = value_for_x;
        };
        std::size_t blocks = 0, target = std::size_t(t) * (t - 1) / 6;
        std::vector<unsigned> live_points, live;
        while (blocks < target) {
            live_points.clear();
            for (unsigned x = 0; x < t; ++x)
                for (unsigned y = 0; y < t; ++y)
                    if (y != x && at(x, y) == t) {
                        live_points.push_back(x);
                        break;
                    }
            unsigned x = live_points[rng.below(live_points.size())];
            live.clear();
            for (unsigned y = 0; y < t; ++y)
                if (y != x && at(x, y) == t)
                    live.push_back(y);
            // a point on an uncovered pair has an even number of uncovered pairs, so at least two
            auto i = rng.below(live.size());
            auto j = rng.below(live.size() - 1);
            if (j >= i)
                ++j;
            unsigned y = live[i], z = live[j];
            if (unsigned w = at(y, z); w == t) {
                set_block(x, y, z, z, y, x);
                ++blocks;
            } else {
                set_block(w, y, z, t, t, t);
                set_block(x, y, z, z, y, x);
            }
        }

        RGraphBuilder b(3, t);
        for (unsigned x = 0; x < t; ++x)
            for (unsigned y = x + 1; y < t; ++y)
                if (auto z = at(x, y); z > y)
                    b.add({x, y, z});
        return {t, std::move(b).build(), StsProvenance::hill_climb, "seed " + std::to_string(seed)};
    }

    auto verify_sts(const RGraph & h) -> StsCheck
    {
        StsCheck result;
        if (h.uniformity() != 3) {
            result.valid = false;
            return result;
        }
        auto n = h.vertex_count();
        std::vector<unsigned> count(std::size_t(n) * n, 0);
        for (auto e : h.edges()) {
            ++count[std::size_t(e[0]) * n + e[1]];
            ++count[std::size_t(e[0]) * n + e[2]];
            ++count[std::size_t(e[1]) * n + e[2]];
        }
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = x + 1; y < n; ++y)
                if (auto c = count[std::size_t(x) * n + y]; c != 1) {
                    result.valid = false;
                    result.violating_pair = {x, y};
                    result.pair_multiplicity = c;
                    return result;
                }
        return result;
    }

    auto known_minimum_independence(unsigned t) -> std::optional<std::uint64_t>
    {
        static const std::map<unsigned, std::uint64_t> known{{3, 2}, {7, 4}, {9, 4}, {13, 6}, {15, 6}, {19, 7}};
        if (auto it = known.find(t); it != known.end())
            return it->second;
        return std::nullopt;
    }

    auto load_sts(const std::filesystem::path & file) -> LoadedSts
    {
        auto h = read_hypergraph(file);
        auto check = verify_sts(h);
        if (! check.valid) {
            if (! check.violating_pair)
                throw InvalidArgument(file.string() + " is not a 3-graph");
            auto [x, y] = *check.violating_pair;
            throw InvalidArgument(file.string() + " is not a Steiner triple system: pair {" + std::to_string(x) + "," + std::to_string(y)
                    + "} lies in " + std::to_string(check.pair_multiplicity) + " triples");
        }

        auto order = h.vertex_count();
        auto alpha = independence_number(h).value;
        LoadedSts result{{order, std::move(h), StsProvenance::external, file.string()}, alpha, known_minimum_independence(order), false, std::nullopt};
        if (result.known_minimum) {
            result.meets_minimum = alpha == *result.known_minimum;
            if (! result.meets_minimum)
                result.warning = "independence number " + std::to_string(alpha) + " exceeds the known minimum "
                    + std::to_string(*result.known_minimum) + " for order " + std::to_string(order);
        }
        return result;
    }

    auto sts_data_directory() -> std::filesystem::path
    {
        if (const char * env = std::getenv("HYPERCOVER_DATA_DIR"); env && *env)
            return std::filesystem::path(env) / "sts";
        return std::filesystem::path(HYPERCOVER_DATA_DIR) / "sts";
    }
}
