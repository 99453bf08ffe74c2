#include <hypercover/constructions.hh>
#include <hypercover/subgraph_cover.hh>

#include <algorithm>
#include <optional>

namespace hypercover
{
    auto to_string(ConstructionTag tag) -> std::string
    {
        switch (tag) {
            case ConstructionTag::k4m_lower: return "k4m-lower";
            case ConstructionTag::k4_link: return "k4-link";
            case ConstructionTag::lift: return "lift";
            case ConstructionTag::c5_lower: return "c5-lower";
            case ConstructionTag::k5_lower: return "k5-lower";
            case ConstructionTag::sts_blowup: return "sts-blowup";
            case ConstructionTag::tau_lower: return "tau-lower";
            case ConstructionTag::tau_upper: return "tau-upper";
            case ConstructionTag::efg: return "efg";
        }
        return "?";
    }

    auto to_string(ClaimKind kind) -> std::string
    {
        switch (kind) {
            case ClaimKind::min_degree: return "min_degree";
            case ClaimKind::vertex_degree: return "vertex_degree";
            case ClaimKind::edge_count: return "edge_count";
            case ClaimKind::t_max: return "t_max";
            case ClaimKind::triangle_degree: return "triangle_degree";
            case ClaimKind::book_number: return "book_number";
        }
        return "?";
    }

    namespace
    {
        auto describe(const NumericClaim & claim) -> std::string
        {
            auto s = to_string(claim.value);
            if (claim.slack != 0)
                s += " +- " + to_string(claim.slack);
            return s;
        }

        auto within(const NumericClaim & claim, std::uint64_t observed) -> bool
        {
            auto gap = Rational(observed) - claim.value;
            if (gap < 0)
                gap = -gap;
            return gap <= claim.slack;
        }

        auto range_text(std::uint64_t low, std::uint64_t high) -> std::string
        {
            if (low == high)
                return std::to_string(low);
            return "[" + std::to_string(low) + ", " + std::to_string(high) + "]";
        }

        auto vertices_text(const std::vector<Vertex> & vs) -> std::string
        {
            std::string s = "{";
            for (std::size_t i = 0; i < vs.size(); ++i)
                s += (i ? "," : "") + std::to_string(vs[i]);
            return s + "}";
        }

        auto form_json(const AffineForm & f) -> nlohmann::json
        {
            return {{"a", to_string(f.a)}, {"b", to_string(f.b)}, {"c", to_string(f.c)}};
        }
    }

    auto check_manifest(const RGraph & g, const Manifest & manifest, const ManifestCheckOptions & options) -> std::vector<ClaimCheck>
    {
        std::optional<DegreeProfile> degrees;
        std::optional<std::vector<std::uint64_t>> triangles;
        auto get_degrees = [&] () -> const DegreeProfile & {
            if (! degrees)
                degrees = degree_profile(g);
            return *degrees;
        };
        auto get_triangles = [&] () -> const std::vector<std::uint64_t> & {
            if (! triangles)
                triangles = clique_degrees(g);
            return *triangles;
        };

        std::vector<ClaimCheck> result;
        for (const auto & c : manifest.claims) {
            ClaimCheck check{c.name, "", describe(c.expected), false};
            auto over_range = [&] (const std::vector<std::uint64_t> & values) {
                if (c.first >= c.last || c.last > values.size()) {
                    check.observed = "invalid vertex range";
                    return;
                }
                auto [lo, hi] = std::minmax_element(values.begin() + c.first, values.begin() + c.last);
                check.observed = range_text(*lo, *hi);
                check.passed = within(c.expected, *lo) && within(c.expected, *hi);
            };
            auto single = [&] (std::uint64_t value) {
                check.observed = std::to_string(value);
                check.passed = within(c.expected, value);
            };

            switch (c.kind) {
                case ClaimKind::min_degree: single(get_degrees().min_degree); break;
                case ClaimKind::vertex_degree: over_range(get_degrees().per_vertex); break;
                case ClaimKind::edge_count: single(g.edge_count()); break;
                case ClaimKind::t_max: single(t_max(g).value); break;
                case ClaimKind::triangle_degree: over_range(get_triangles()); break;
                case ClaimKind::book_number: single(book_number(g).value); break;
            }
            result.push_back(std::move(check));
        }

        if (manifest.uncovered && g.vertex_count() <= options.cover_vertex_limit) {
            const auto & claim = *manifest.uncovered;
            ClaimCheck check{"uncovered(" + claim.motif.name() + ")", "", (claim.exact ? "= " : "contains ") + vertices_text(claim.vertices), false};
            if (claim.exact) {
                auto report = uncovered_vertices(g, claim.motif, options.threads);
                check.observed = vertices_text(report.uncovered);
                check.passed = report.uncovered == claim.vertices;
            }
            else {
                std::vector<Vertex> missing;
                for (auto v : claim.vertices)
                    if (covers(g, claim.motif, v))
                        missing.push_back(v);
                check.passed = missing.empty();
                check.observed = missing.empty() ? "all uncovered" : "covered: " + vertices_text(missing);
            }
            result.push_back(std::move(check));
        }
        return result;
    }

    auto to_json(const Manifest & manifest) -> nlohmann::json
    {
        const auto & p = manifest.params;
        nlohmann::json params = {{"construction", to_string(p.tag)}};
        auto put = [&] (const char * key, const std::optional<std::uint64_t> & v) {
            if (v)
                params[key] = *v;
        };
        put("n", p.n);
        put("d", p.d);
        put("r", p.r);
        put("t", p.t);
        put("N", p.big_n);
        if (p.rho)
            params["rho"] = to_string(*p.rho);
        if (! p.phi.empty()) {
            // reported 1-based, as the permutation is written on the command line
            auto phi = nlohmann::json::array();
            for (auto x : p.phi)
                phi.push_back(x + 1);
            params["phi"] = phi;
        }
        if (! p.factors.empty())
            params["factors"] = p.factors;
        put("seed", p.seed);

        nlohmann::json claims = nlohmann::json::array();
        for (const auto & c : manifest.claims) {
            nlohmann::json j = {{"name", c.name}, {"kind", to_string(c.kind)}, {"value", to_string(c.expected.value)}};
            if (c.expected.form)
                j["form"] = form_json(*c.expected.form);
            if (c.expected.slack != 0)
                j["slack"] = to_string(c.expected.slack);
            if (c.kind == ClaimKind::vertex_degree || c.kind == ClaimKind::triangle_degree)
                j["vertices"] = {c.first, c.last};
            claims.push_back(std::move(j));
        }

        nlohmann::json out = {
            {"params", params},
            {"uniformity", manifest.uniformity},
            {"vertex_count", manifest.vertex_count},
            {"claims", claims}
        };
        if (manifest.special_vertex)
            out["special_vertex"] = *manifest.special_vertex;
        if (manifest.uncovered)
            out["uncovered"] = {
                {"motif", manifest.uncovered->motif.name()},
                {"vertices", manifest.uncovered->vertices},
                {"exact", manifest.uncovered->exact}
            };
        nlohmann::json parts = nlohmann::json::array();
        for (const auto & part : manifest.parts)
            parts.push_back({{"name", part.name}, {"first", part.first}, {"last", part.last}});
        out["parts"] = parts;
        if (! manifest.notes.empty())
            out["notes"] = manifest.notes;
        return out;
    }
}
