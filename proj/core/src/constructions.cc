#include <hypercover/constructions.hh>
#include <hypercover/errors.hh>
#include <hypercover/formulas.hh>
#include <hypercover/rng.hh>
#include <hypercover/subgraph_cover.hh>

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace hypercover
{
    namespace
    {
        auto fail(const std::string & message) -> void
        {
            throw PreconditionViolation(message);
        }

        auto str(std::uint64_t v) -> std::string
        {
            return std::to_string(v);
        }

        auto require_vertex_count(std::uint64_t n) -> unsigned
        {
            if (n > 100000)
                fail("vertex count " + str(n) + " is too large for an explicit construction");
            return static_cast<unsigned>(n);
        }

        /// d-regular bipartite circulant between x0..x0+m-1 and y0..y0+m-1: x_i ~ y_{pi((i+j) mod m)}
        /// for 0 <= j < d, where pi is the identity unless a generator is supplied.
        auto add_circulant(RGraphBuilder & builder, Vertex x0, Vertex y0, unsigned m, unsigned d, Rng * rng) -> void
        {
            std::vector<Vertex> pi(m);
            std::iota(pi.begin(), pi.end(), Vertex{0});
            if (rng)
                rng->shuffle(pi);
            for (unsigned i = 0; i < m; ++i)
                for (unsigned j = 0; j < d; ++j)
                    builder.add({x0 + i, y0 + pi[(i + j) % m]});
        }

        auto exact(const Rational & value) -> NumericClaim
        {
            return {value, std::nullopt, 0};
        }

        auto exact(std::uint64_t value) -> NumericClaim
        {
            return exact(Rational(value));
        }

        auto quadratic(const AffineForm & form, std::uint64_t n) -> NumericClaim
        {
            return {form.at(Rational(n)), form, 0};
        }

        auto claim(std::string name, ClaimKind kind, NumericClaim expected, Vertex first = 0, Vertex last = 0) -> ManifestClaim
        {
            return {std::move(name), kind, std::move(expected), first, last};
        }

        auto make_manifest(ConstructionParams params, const RGraph & g) -> Manifest
        {
            Manifest m;
            m.params = std::move(params);
            m.uniformity = g.uniformity();
            m.vertex_count = g.vertex_count();
            return m;
        }

        auto make_rng(std::optional<std::uint64_t> seed) -> std::optional<Rng>
        {
            if (seed)
                return Rng(*seed);
            return std::nullopt;
        }

        auto rng_ptr(std::optional<Rng> & rng) -> Rng *
        {
            return rng ? &*rng : nullptr;
        }

        /// True when every (|s|-1)-subset of s is an edge of g.
        auto spans_clique(const RGraph & g, std::span<const Vertex> s) -> bool
        {
            std::array<Vertex, max_uniformity> probe{};
            auto k = s.size();
            for (std::size_t drop = 0; drop < k; ++drop) {
                std::size_t j = 0;
                for (std::size_t i = 0; i < k; ++i)
                    if (i != drop)
                        probe[j++] = s[i];
                if (! g.has_edge(std::span<const Vertex>(probe.data(), k - 1)))
                    return false;
            }
            return true;
        }

        auto uint(const Rational & value) -> std::uint64_t
        {
            return static_cast<std::uint64_t>(numerator(value));
        }
    }

    auto k4minus_lower(std::uint64_t n, std::uint64_t d, std::optional<std::uint64_t> seed) -> Construction
    {
        if (n < 5 || n % 2 == 0)
            fail("k4m-lower needs odd n >= 5, got n = " + str(n));
        auto m = (n - 1) / 2;
        if (d < 1 || d > m)
            fail("k4m-lower needs 1 <= d <= (n-1)/2 = " + str(m) + ", got d = " + str(d));
        auto nv = require_vertex_count(n);
        auto half = static_cast<unsigned>(m);
        Vertex star = nv - 1;

        RGraphBuilder link(2, nv - 1);
        auto rng = make_rng(seed);
        add_circulant(link, 0, half, half, static_cast<unsigned>(d), rng_ptr(rng));
        auto g = std::move(link).build();

        RGraphBuilder builder(3, nv);
        for (auto e : g.edges())
            builder.add({e[0], e[1], star});
        for_each_subset(nv - 1, 3, [&] (std::span<const Vertex> s) {
            int inside = g.has_edge({s[0], s[1]}) + g.has_edge({s[0], s[2]}) + g.has_edge({s[1], s[2]});
            if (inside <= 1)
                builder.add(s);
        });
        auto h = std::move(builder).build();

        ConstructionParams params;
        params.tag = ConstructionTag::k4m_lower;
        params.n = n;
        params.d = d;
        params.seed = seed;
        auto manifest = make_manifest(params, h);
        manifest.special_vertex = star;
        Rational star_degree(m * d);
        auto other = f_n_d(n, d);
        manifest.claims.push_back(claim("min_degree", ClaimKind::min_degree, exact(std::min(star_degree, other))));
        manifest.claims.push_back(claim("deg(v*)", ClaimKind::vertex_degree, exact(star_degree), star, star + 1));
        manifest.claims.push_back(claim("deg(other)", ClaimKind::vertex_degree,
                    {other, AffineForm{Rational(1, 2), Rational(-5, 2), Rational(3) - Rational(3 * d * d, 2) + Rational(5 * d, 2)}, 0}, 0, star));
        manifest.uncovered = UncoveredClaim{Motif::k4_minus(), {star}, false};
        manifest.parts = {{"A", 0, half}, {"B", half, 2 * half}, {"v*", star, star + 1}};
        return {std::move(h), std::move(manifest)};
    }

    auto k4_lower_linkgraph(std::uint64_t n, std::optional<std::uint64_t> seed) -> Construction
    {
        if (n == 0 || n % 54 != 0)
            fail("k4-link needs n divisible by 54, got n = " + str(n));
        auto nv = require_vertex_count(n);
        unsigned part = nv / 3, sub = nv / 6, inner = nv / 27;

        RGraphBuilder builder(2, nv);
        for (Vertex x = 0; x < nv; ++x)
            for (Vertex y = x + 1; y < nv; ++y)
                if (x / part != y / part)
                    builder.add({x, y});
        auto rng = make_rng(seed);
        for (unsigned i = 0; i < 3; ++i)
            add_circulant(builder, i * part, i * part + sub, sub, inner, rng_ptr(rng));
        auto g = std::move(builder).build();

        ConstructionParams params;
        params.tag = ConstructionTag::k4_link;
        params.n = n;
        params.seed = seed;
        auto manifest = make_manifest(params, g);
        manifest.claims.push_back(claim("regular_degree", ClaimKind::vertex_degree,
                    quadratic({0, Rational(19, 27), 0}, n), 0, nv));
        manifest.claims.push_back(claim("triangle_degree", ClaimKind::triangle_degree,
                    quadratic({Rational(4, 27), 0, 0}, n), 0, nv));
        manifest.claims.push_back(claim("t_max", ClaimKind::t_max, quadratic({Rational(4, 27), 0, 0}, n)));
        for (unsigned i = 0; i < 3; ++i) {
            auto label = "V" + std::to_string(i + 1);
            manifest.parts.push_back({label + ",1", i * part, i * part + sub});
            manifest.parts.push_back({label + ",2", i * part + sub, (i + 1) * part});
        }
        return {std::move(g), std::move(manifest)};
    }

    auto lift_link(const RGraph & g) -> Construction
    {
        auto u = g.uniformity();
        if (u < 2)
            fail("lift needs a link of uniformity at least 2");
        if (u + 1 > max_uniformity)
            fail("lifted uniformity exceeds " + str(max_uniformity));
        auto n = g.vertex_count();
        Vertex star = n;

        RGraphBuilder builder(u + 1, n + 1);
        std::vector<Vertex> with_star(u + 1);
        for (auto e : g.edges()) {
            std::copy(e.begin(), e.end(), with_star.begin());
            with_star[u] = star;
            builder.add(with_star);
        }
        for_each_subset(n, u + 1, [&] (std::span<const Vertex> s) {
            if (! spans_clique(g, s))
                builder.add(s);
        });
        auto h = std::move(builder).build();

        ConstructionParams params;
        params.tag = ConstructionTag::lift;
        params.n = n;
        params.r = u + 1;
        auto manifest = make_manifest(params, h);
        manifest.special_vertex = star;

        auto cliques = clique_degrees(g);
        auto degrees = degree_profile(g).per_vertex;
        auto base = binomial(n - 1, u);
        std::uint64_t lowest = g.edge_count();
        manifest.claims.push_back(claim("deg(v*)", ClaimKind::vertex_degree, exact(g.edge_count()), star, star + 1));
        for (Vertex x = 0; x < n;) {
            auto value = base - cliques[x] + degrees[x];
            Vertex y = x + 1;
            while (y < n && base - cliques[y] + degrees[y] == value)
                ++y;
            lowest = std::min(lowest, value);
            manifest.claims.push_back(claim("deg(x)", ClaimKind::vertex_degree, exact(value), x, y));
            x = y;
        }
        manifest.claims.insert(manifest.claims.begin(), claim("min_degree", ClaimKind::min_degree, exact(lowest)));
        manifest.uncovered = UncoveredClaim{u == 2 ? Motif::k4() : Motif::clique(u + 2), {star}, false};
        manifest.parts = {{"G", 0, n}, {"v*", star, star + 1}};
        return {std::move(h), std::move(manifest)};
    }

    auto extract_link(const RGraph & h, Vertex v) -> LinkExtraction
    {
        auto r = h.uniformity();
        if (v >= h.vertex_count())
            throw InvalidArgument("vertex " + str(v) + " is out of range");
        if (r < 2)
            throw InvalidArgument("link extraction needs uniformity at least 2");

        LinkExtraction result{link(h, VertexSet{v}), true, true};
        const auto & lk = result.link.graph;
        std::vector<Vertex> original(r);
        for_each_subset(lk.vertex_count(), r, [&] (std::span<const Vertex> s) {
            for (unsigned i = 0; i < r; ++i)
                original[i] = result.link.original[s[i]];
            bool clique = spans_clique(lk, s);
            bool edge = h.has_edge(original);
            if (clique && edge)
                result.uncovered_condition = false;
            if (clique == edge)
                result.is_lift = false;
        });
        return result;
    }

    auto c5_lower(std::uint64_t n) -> Construction
    {
        if (n < 2)
            fail("c5-lower needs n >= 2, got n = " + str(n));
        auto a = require_vertex_count(n);
        unsigned nv = 3 * a + 1;
        Vertex star = 3 * a;
        auto in_a = [&] (Vertex x) { return x < a; };

        RGraphBuilder builder(3, nv);
        for (Vertex x = 0; x < star; ++x)
            for (Vertex y = x + 1; y < star; ++y)
                if (in_a(x) == in_a(y))
                    builder.add({x, y, star});
        for_each_subset(star, 3, [&] (std::span<const Vertex> s) {
            auto count = in_a(s[0]) + in_a(s[1]) + in_a(s[2]);
            if (count == 1 || count == 2)
                builder.add(s);
        });
        auto h = std::move(builder).build();

        ConstructionParams params;
        params.tag = ConstructionTag::c5_lower;
        params.n = n;
        auto manifest = make_manifest(params, h);
        manifest.special_vertex = star;
        AffineForm star_form{Rational(5, 2), Rational(-3, 2), 0};
        manifest.claims.push_back(claim("min_degree", ClaimKind::min_degree, quadratic(star_form, n)));
        manifest.claims.push_back(claim("deg(v*)", ClaimKind::vertex_degree, quadratic(star_form, n), star, star + 1));
        manifest.claims.push_back(claim("deg(A)", ClaimKind::vertex_degree, quadratic({4, -2, -1}, n), 0, a));
        manifest.claims.push_back(claim("deg(B)", ClaimKind::vertex_degree, quadratic({Rational(5, 2), Rational(1, 2), -1}, n), a, star));
        manifest.uncovered = UncoveredClaim{Motif::c5(), {star}, false};
        manifest.parts = {{"A", 0, a}, {"B", a, star}, {"v*", star, star + 1}};
        return {std::move(h), std::move(manifest)};
    }

    auto k5_lower(std::uint64_t n) -> Construction
    {
        if (n < 2)
            fail("k5-lower needs n >= 2, got n = " + str(n));
        auto half = require_vertex_count(n);
        unsigned nv = 2 * half;

        RGraphBuilder builder(3, nv);
        for_each_subset(nv, 3, [&] (std::span<const Vertex> s) {
            auto low = (s[0] < half) + (s[1] < half) + (s[2] < half);
            if (low == 1 || low == 2)
                builder.add(s);
        });
        auto h = std::move(builder).build();

        ConstructionParams params;
        params.tag = ConstructionTag::k5_lower;
        params.n = n;
        auto manifest = make_manifest(params, h);
        // C(2n-1, 2) - C(n-1, 2)
        AffineForm form{Rational(3, 2), Rational(-3, 2), 0};
        manifest.claims.push_back(claim("min_degree", ClaimKind::min_degree, quadratic(form, n)));
        manifest.claims.push_back(claim("regular_degree", ClaimKind::vertex_degree, quadratic(form, n), 0, nv));
        std::vector<Vertex> everyone(nv);
        std::iota(everyone.begin(), everyone.end(), Vertex{0});
        manifest.uncovered = UncoveredClaim{Motif::complete3(5), std::move(everyone), true};
        manifest.parts = {{"V1", 0, half}, {"V2", half, nv}};
        return {std::move(h), std::move(manifest)};
    }

    auto blowup_sts(const RGraph & h, std::uint64_t n, std::optional<std::uint64_t> t) -> Construction
    {
        if (h.uniformity() != 3)
            fail("blow-up needs a 3-graph, got uniformity " + str(h.uniformity()));
        if (n < 1)
            fail("blow-up needs part size n >= 1");
        unsigned big_n = h.vertex_count();
        auto part = require_vertex_count(n);
        auto nv = require_vertex_count(std::uint64_t(big_n) * n + 1);
        Vertex star = nv - 1;

        std::optional<Independence> alpha;
        if (t) {
            if (*t < 4)
                fail("blow-up cover claim needs t >= 4");
            alpha = independence_number(h);
            if (alpha->value > *t - 1)
                fail("every " + str(*t) + "-set must span an edge, but alpha(H) = " + str(alpha->value));
        }

        RGraphBuilder builder(3, nv);
        for (Vertex x = 0; x < star; ++x)
            for (Vertex y = x + 1; y < star; ++y)
                if (x / part != y / part)
                    builder.add({x, y, star});
        for_each_subset(star, 3, [&] (std::span<const Vertex> s) {
            Vertex i = s[0] / part, j = s[1] / part, k = s[2] / part;
            if (i != j && j != k && i != k && h.has_edge({i, j, k}))
                return;
            builder.add(s);
        });
        auto g = std::move(builder).build();

        ConstructionParams params;
        params.tag = ConstructionTag::sts_blowup;
        params.n = n;
        params.big_n = big_n;
        params.t = t;
        auto manifest = make_manifest(params, g);
        manifest.special_vertex = star;

        auto total = std::uint64_t(big_n) * n;
        auto star_degree = binomial(total, 2) - big_n * binomial(n, 2);
        auto h_degrees = degree_profile(h).per_vertex;
        std::uint64_t lowest = star_degree;
        std::vector<ManifestClaim> parts;
        for (Vertex i = 0; i < big_n; ++i) {
            auto value = n * (big_n - 1) + binomial(total - 1, 2) - h_degrees[i] * n * n;
            lowest = std::min(lowest, value);
            parts.push_back(claim("deg(V" + std::to_string(i) + ")", ClaimKind::vertex_degree, exact(value), i * part, (i + 1) * part));
            manifest.parts.push_back({"V" + std::to_string(i), i * part, (i + 1) * part});
        }
        manifest.parts.push_back({"v*", star, star + 1});
        manifest.claims.push_back(claim("min_degree", ClaimKind::min_degree, exact(lowest)));
        manifest.claims.push_back(claim("deg(v*)", ClaimKind::vertex_degree, exact(star_degree), star, star + 1));
        manifest.claims.insert(manifest.claims.end(), parts.begin(), parts.end());
        if (t) {
            manifest.uncovered = UncoveredClaim{Motif::complete3(static_cast<unsigned>(*t + 1)), {star}, false};
            manifest.notes.push_back("alpha(H) = " + str(alpha->value));
        }
        return {std::move(g), std::move(manifest)};
    }

    auto tau_lower_interval(std::uint64_t n, const Rational & rho, std::uint64_t r, std::optional<std::uint64_t> seed) -> Construction
    {
        if (r < 2)
            fail("tau-lower needs r >= 2");
        if (n == 0 || n % (2 * r) != 0)
            fail("tau-lower needs 2r | n, got n = " + str(n) + ", r = " + str(r));
        Rational rr(r);
        auto left = (rr - 1) / rr, right = tau_upper_breakpoint(r);
        if (rho < left || rho > right)
            fail("tau-lower needs " + to_string(left) + " <= rho <= " + to_string(right) + ", got " + to_string(rho));
        auto d_big = floor((rho - left) * n);
        auto p = n / r, h = p / 2;
        if (d_big > h)
            fail("tau-lower needs d <= n/(2r) = " + str(h) + ", got d = " + d_big.str());
        auto d = static_cast<std::uint64_t>(d_big);
        auto nv = require_vertex_count(n);
        auto pv = static_cast<unsigned>(p), hv = static_cast<unsigned>(h);

        RGraphBuilder builder(2, nv);
        for (Vertex x = 0; x < nv; ++x)
            for (Vertex y = x + 1; y < nv; ++y)
                if (x / pv != y / pv)
                    builder.add({x, y});
        auto rng = make_rng(seed);
        for (unsigned i = 0; i < r; ++i)
            add_circulant(builder, i * pv, i * pv + hv, hv, static_cast<unsigned>(d), rng_ptr(rng));
        auto g = std::move(builder).build();

        ConstructionParams params;
        params.tag = ConstructionTag::tau_lower;
        params.n = n;
        params.rho = rho;
        params.r = r;
        params.d = d;
        params.seed = seed;
        auto manifest = make_manifest(params, g);

        auto t = binomial(r - 1, 2) * p * p + 3 * (r - 1) * p * d / 2;
        manifest.claims.push_back(claim("regular_degree", ClaimKind::vertex_degree, exact(uint(Rational(floor(rho * n)))), 0, nv));
        manifest.claims.push_back(claim("triangle_degree", ClaimKind::triangle_degree, exact(t), 0, nv));
        manifest.claims.push_back(claim("t_max", ClaimKind::t_max, exact(t)));
        auto tau = tau_upper(rho);
        manifest.claims.push_back(claim("t_max_vs_bound", ClaimKind::t_max,
                    {tau * n * n / 2, AffineForm{tau / 2, 0, 0}, Rational(3 * n)}));
        for (unsigned i = 0; i < r; ++i) {
            manifest.parts.push_back({"V" + std::to_string(i + 1) + "'", i * pv, i * pv + hv});
            manifest.parts.push_back({"V" + std::to_string(i + 1) + "''", i * pv + hv, (i + 1) * pv});
        }
        return {std::move(g), std::move(manifest)};
    }

    auto tau_upper_interval(std::uint64_t n, const Rational & rho, std::uint64_t r, std::vector<unsigned> phi,
            std::optional<std::uint64_t> seed) -> Construction
    {
        if (r < 2)
            fail("tau-upper needs r >= 2");
        auto k = r + 1;
        if (n == 0 || n % (2 * k) != 0)
            fail("tau-upper needs 2(r+1) | n, got n = " + str(n) + ", r = " + str(r));
        Rational rr(r);
        auto left = tau_upper_breakpoint(r), right = rr / (rr + 1);
        if (rho < left || rho > right)
            fail("tau-upper needs " + to_string(left) + " <= rho <= " + to_string(right) + ", got " + to_string(rho));

        if (phi.empty())
            for (unsigned i = 0; i < k; ++i)
                phi.push_back(static_cast<unsigned>((i + 1) % k));
        if (phi.size() != k)
            fail("phi must permute " + str(k) + " parts");
        std::vector<bool> seen(k, false);
        for (unsigned i = 0; i < k; ++i) {
            if (phi[i] >= k || seen[phi[i]])
                fail("phi is not a permutation of the parts");
            if (phi[i] == i)
                fail("phi must have no fixed point, but part " + std::to_string(i + 1) + " is fixed");
            seen[phi[i]] = true;
        }

        auto p = n / k, h = p / 2;
        auto d_big = ceil((rho - right + 1 / (2 * (rr + 1))) * n);
        if (d_big < 0 || d_big > h)
            fail("tau-upper block degree " + d_big.str() + " is outside [0, " + str(h) + "]");
        auto d = static_cast<std::uint64_t>(d_big);
        auto nv = require_vertex_count(n);
        auto pv = static_cast<unsigned>(p), hv = static_cast<unsigned>(h), dv = static_cast<unsigned>(d);

        // block i joins the first half of part i to the second half of part phi(i)
        auto rng = make_rng(seed);
        std::vector<std::vector<Vertex>> shuffle(k, std::vector<Vertex>(hv));
        for (auto & pi : shuffle) {
            std::iota(pi.begin(), pi.end(), Vertex{0});
            if (rng)
                rng->shuffle(pi);
        }
        auto block_adjacent = [&] (Vertex first_half, Vertex second_half) {
            unsigned i = first_half / pv;
            unsigned a = first_half % pv, b = second_half % pv - hv;
            return (shuffle[i][b] + hv - a) % hv < dv;
        };

        RGraphBuilder builder(2, nv);
        for (Vertex x = 0; x < nv; ++x)
            for (Vertex y = x + 1; y < nv; ++y) {
                unsigned i = x / pv, j = y / pv;
                if (i == j)
                    continue;
                bool x_first = x % pv < hv, y_first = y % pv < hv;
                bool keep = true;
                if (x_first && ! y_first && phi[i] == j)
                    keep = block_adjacent(x, y);
                else if (y_first && ! x_first && phi[j] == i)
                    keep = block_adjacent(y, x);
                if (keep)
                    builder.add({x, y});
            }
        auto g = std::move(builder).build();

        ConstructionParams params;
        params.tag = ConstructionTag::tau_upper;
        params.n = n;
        params.rho = rho;
        params.r = r;
        params.d = d;
        params.phi = phi;
        params.seed = seed;
        auto manifest = make_manifest(params, g);

        auto t = binomial(r, 2) * p * p - 3 * (r - 1) * h * (h - d);
        manifest.claims.push_back(claim("regular_degree", ClaimKind::vertex_degree, exact(uint(Rational(ceil(rho * n)))), 0, nv));
        manifest.claims.push_back(claim("triangle_degree", ClaimKind::triangle_degree, exact(t), 0, nv));
        manifest.claims.push_back(claim("t_max", ClaimKind::t_max, exact(t)));
        auto tau = tau_upper(rho);
        manifest.claims.push_back(claim("t_max_vs_bound", ClaimKind::t_max,
                    {tau * n * n / 2, AffineForm{tau / 2, 0, 0}, Rational(3 * n)}));
        for (unsigned i = 0; i < k; ++i) {
            manifest.parts.push_back({"V" + std::to_string(i + 1) + "'", i * pv, i * pv + hv});
            manifest.parts.push_back({"V" + std::to_string(i + 1) + "''", i * pv + hv, (i + 1) * pv});
        }
        return {std::move(g), std::move(manifest)};
    }

    auto efg_graph(const std::vector<std::uint64_t> & factors, std::uint64_t t) -> Construction
    {
        if (factors.empty())
            fail("efg needs at least one factor");
        if (t < 1)
            fail("efg needs t >= 1");
        if (factors[0] < 3)
            fail("efg needs r_1 >= 3, got " + str(factors[0]));
        for (std::size_t i = 1; i < factors.size(); ++i)
            if ((factors[i - 1] - 1) * (factors[i - 1] - 1) >= factors[i])
                fail("efg needs (r_" + str(i) + " - 1)^2 < r_" + str(i + 1) + ", got " + str(factors[i - 1]) + " and " + str(factors[i]));

        std::uint64_t n = t, degree = t, book = t;
        for (auto r : factors) {
            n *= r;
            degree *= r - 1;
            book *= r - 2;
        }
        auto nv = require_vertex_count(n);
        auto k = factors.size();

        std::vector<std::vector<unsigned>> coords(nv, std::vector<unsigned>(k));
        for (Vertex v = 0; v < nv; ++v) {
            auto rest = v / t;
            for (std::size_t i = k; i-- > 0;) {
                coords[v][i] = static_cast<unsigned>(rest % factors[i]);
                rest /= factors[i];
            }
        }

        RGraphBuilder builder(2, nv);
        for (Vertex x = 0; x < nv; ++x)
            for (Vertex y = x + 1; y < nv; ++y) {
                bool all = true;
                for (std::size_t i = 0; all && i < k; ++i)
                    all = coords[x][i] != coords[y][i];
                if (all)
                    builder.add({x, y});
            }
        auto g = std::move(builder).build();

        ConstructionParams params;
        params.tag = ConstructionTag::efg;
        params.t = t;
        params.factors = factors;
        auto manifest = make_manifest(params, g);
        manifest.claims.push_back(claim("regular_degree", ClaimKind::vertex_degree, exact(degree), 0, nv));
        manifest.claims.push_back(claim("book_number", ClaimKind::book_number, exact(book)));
        return {std::move(g), std::move(manifest)};
    }
}
