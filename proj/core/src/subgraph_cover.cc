#include <hypercover/adjacency.hh>
#include <hypercover/errors.hh>
#include <hypercover/parallel.hh>
#include <hypercover/subgraph_cover.hh>

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <string>

namespace hypercover
{
    namespace
    {
        constexpr unsigned max_codegree_table = 1024;

        auto check_uniformity(const RGraph & host, const Motif & motif) -> void
        {
            if (host.uniformity() != motif.uniformity())
                throw InvalidArgument("motif " + motif.name() + " has uniformity " + std::to_string(motif.uniformity())
                        + " but the host graph has uniformity " + std::to_string(host.uniformity()));
        }

        auto require_2graph(const RGraph & g, const char * what) -> void
        {
            if (g.uniformity() != 2)
                throw InvalidArgument(std::string(what) + " needs a 2-graph");
        }

        /// Per-host data shared by every covers() call on the same graph.
        struct HostIndex
        {
            const RGraph & graph;
            std::vector<std::uint64_t> degrees;
            /// codegree[a * n + b] for r >= 3 and small n, else empty.
            std::vector<std::uint32_t> codegree;

            explicit HostIndex(const RGraph & g) :
                graph(g),
                degrees(degree_profile(g).per_vertex)
            {
                auto n = g.vertex_count();
                auto r = g.uniformity();
                if (r >= 3 && n <= max_codegree_table) {
                    codegree.assign(std::size_t(n) * n, 0);
                    for (auto e : g.edges())
                        for (unsigned i = 0; i < r; ++i)
                            for (unsigned j = i + 1; j < r; ++j) {
                                ++codegree[std::size_t(e[i]) * n + e[j]];
                                ++codegree[std::size_t(e[j]) * n + e[i]];
                            }
                }
            }

            auto pair_degree(Vertex a, Vertex b) const -> std::uint32_t
            {
                return codegree[std::size_t(a) * graph.vertex_count() + b];
            }
        };

        struct PatternData
        {
            unsigned order, r;
            std::vector<std::vector<Vertex>> edges;
            std::vector<std::uint64_t> degrees;
            std::vector<std::uint32_t> codegree;

            explicit PatternData(const RGraph & p) :
                order(p.vertex_count()),
                r(p.uniformity()),
                degrees(degree_profile(p).per_vertex),
                codegree(std::size_t(order) * order, 0)
            {
                for (auto e : p.edges()) {
                    edges.emplace_back(e.begin(), e.end());
                    for (unsigned i = 0; i < r; ++i)
                        for (unsigned j = i + 1; j < r; ++j) {
                            ++codegree[e[i] * order + e[j]];
                            ++codegree[e[j] * order + e[i]];
                        }
                }
            }
        };

        class Embedder
        {
        public:
            Embedder(const HostIndex & host, const PatternData & pattern, Vertex start) :
                _host(host),
                _pattern(pattern),
                _order(pattern.order),
                _completes(pattern.order),
                _image(pattern.order, 0),
                _used(host.graph.vertex_count(), false)
            {
                _order[0] = start;
                for (unsigned p = 0, i = 1; p < pattern.order; ++p)
                    if (p != start)
                        _order[i++] = p;

                std::vector<unsigned> position(pattern.order);
                for (unsigned i = 0; i < pattern.order; ++i)
                    position[_order[i]] = i;
                for (std::size_t e = 0; e < pattern.edges.size(); ++e) {
                    unsigned last = 0;
                    for (auto p : pattern.edges[e])
                        last = std::max(last, position[p]);
                    _completes[last].push_back(e);
                }
            }

            auto run(Vertex v) -> std::optional<Embedding>
            {
                if (! admissible(0, v))
                    return std::nullopt;
                place(0, v);
                if (extend(1))
                    return Embedding{_image};
                return std::nullopt;
            }

        private:
            const HostIndex & _host;
            const PatternData & _pattern;
            std::vector<Vertex> _order;
            std::vector<std::vector<std::size_t>> _completes;
            std::vector<Vertex> _image;
            std::vector<bool> _used;
            std::array<Vertex, max_uniformity> _scratch{};

            auto admissible(unsigned depth, Vertex h) -> bool
            {
                auto p = _order[depth];
                if (_host.degrees[h] < _pattern.degrees[p])
                    return false;
                if (! _host.codegree.empty())
                    for (unsigned i = 0; i < depth; ++i) {
                        auto q = _order[i];
                        auto need = _pattern.codegree[p * _pattern.order + q];
                        if (need && _host.pair_degree(h, _image[q]) < need)
                            return false;
                    }
                return true;
            }

            auto place(unsigned depth, Vertex h) -> void
            {
                _image[_order[depth]] = h;
                _used[h] = true;
            }

            auto edges_hold(unsigned depth) -> bool
            {
                auto r = _pattern.r;
                for (auto e : _completes[depth]) {
                    for (unsigned i = 0; i < r; ++i)
                        _scratch[i] = _image[_pattern.edges[e][i]];
                    std::sort(_scratch.begin(), _scratch.begin() + r);
                    if (! _host.graph.has_edge(std::span<const Vertex>(_scratch.data(), r)))
                        return false;
                }
                return true;
            }

            auto extend(unsigned depth) -> bool
            {
                if (! edges_hold(depth - 1))
                    return false;
                if (depth == _pattern.order)
                    return true;
                auto n = _host.graph.vertex_count();
                for (Vertex h = 0; h < n; ++h) {
                    if (_used[h] || ! admissible(depth, h))
                        continue;
                    place(depth, h);
                    if (extend(depth + 1))
                        return true;
                    _used[h] = false;
                }
                return false;
            }
        };

        auto covers_indexed(const HostIndex & host, const PatternData & pattern, Vertex v) -> std::optional<Embedding>
        {
            for (Vertex start = 0; start < pattern.order; ++start) {
                Embedder embedder(host, pattern, start);
                if (auto found = embedder.run(v))
                    return found;
            }
            return std::nullopt;
        }

        auto check_vertex(const RGraph & g, Vertex v) -> void
        {
            if (v >= g.vertex_count())
                throw InvalidArgument("vertex " + std::to_string(v) + " is out of range");
        }
    }

    auto is_embedding(const RGraph & host, const RGraph & pattern, const Embedding & embedding) -> bool
    {
        if (host.uniformity() != pattern.uniformity() || embedding.image.size() != pattern.vertex_count())
            return false;
        auto sorted = embedding.image;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return false;
        if (! sorted.empty() && sorted.back() >= host.vertex_count())
            return false;

        std::vector<Vertex> mapped(pattern.uniformity());
        for (auto e : pattern.edges()) {
            for (std::size_t i = 0; i < e.size(); ++i)
                mapped[i] = embedding.image[e[i]];
            std::sort(mapped.begin(), mapped.end());
            if (! host.has_edge(mapped))
                return false;
        }
        return true;
    }

    auto covers(const RGraph & host, const Motif & motif, Vertex v) -> std::optional<Embedding>
    {
        check_uniformity(host, motif);
        check_vertex(host, v);
        HostIndex index(host);
        PatternData pattern(motif.pattern());
        return covers_indexed(index, pattern, v);
    }

    auto uncovered_vertices(const RGraph & host, const Motif & motif, unsigned threads) -> CoverReport
    {
        check_uniformity(host, motif);
        HostIndex index(host);
        PatternData pattern(motif.pattern());

        std::vector<std::optional<Embedding>> found(host.vertex_count());
        parallel_for(found.size(), threads, [&] (std::size_t v) {
            found[v] = covers_indexed(index, pattern, static_cast<Vertex>(v));
        });

        CoverReport report{motif, {}, {}};
        for (Vertex v = 0; v < found.size(); ++v) {
            if (found[v])
                report.witness_per_vertex.emplace(v, std::move(*found[v]));
            else
                report.uncovered.push_back(v);
        }
        return report;
    }

    auto clique_degree(const RGraph & g, Vertex x, unsigned target) -> std::uint64_t
    {
        auto u = g.uniformity();
        if (target != u + 1)
            throw InvalidArgument("clique degree for K_" + std::to_string(target) + " needs a "
                    + std::to_string(target - 1) + "-graph, got uniformity " + std::to_string(u));
        check_vertex(g, x);

        if (u == 2 && g.vertex_count() <= 64)
            return Adjacency(g).triangle_degree(x);

        // Each target-set S containing x is T u {x} for exactly one edge T not containing x.
        std::uint64_t count = 0;
        std::vector<Vertex> probe(u);
        for (auto t : g.edges()) {
            if (std::find(t.begin(), t.end(), x) != t.end())
                continue;
            bool all = true;
            for (unsigned drop = 0; all && drop < u; ++drop) {
                unsigned k = 0;
                for (unsigned i = 0; i < u; ++i)
                    if (i != drop)
                        probe[k++] = t[i];
                probe[k] = x;
                std::sort(probe.begin(), probe.end());
                all = g.has_edge(probe);
            }
            if (all)
                ++count;
        }
        return count;
    }

    auto clique_degrees(const RGraph & g) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> result(g.vertex_count());
        if (g.uniformity() == 2) {
            Adjacency adj(g);
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                result[v] = adj.triangle_degree(v);
            return result;
        }
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            result[v] = clique_degree(g, v, g.uniformity() + 1);
        return result;
    }

    auto triangle_count(const RGraph & g) -> std::uint64_t
    {
        require_2graph(g, "triangle count");
        std::uint64_t sum = 0;
        for (auto t : clique_degrees(g))
            sum += t;
        return sum / 3;
    }

    auto t_max(const RGraph & g) -> TriangleDegreeMax
    {
        require_2graph(g, "t_max");
        TriangleDegreeMax best;
        auto degrees = clique_degrees(g);
        for (Vertex v = 0; v < degrees.size(); ++v)
            if (degrees[v] > best.value)
                best = {degrees[v], v};
        return best;
    }

    auto book_size(const RGraph & g, Vertex x, Vertex y) -> std::uint64_t
    {
        require_2graph(g, "book size");
        check_vertex(g, x);
        check_vertex(g, y);
        if (! g.has_edge({x, y}))
            throw InvalidArgument("{" + std::to_string(x) + "," + std::to_string(y) + "} is not an edge");
        return Adjacency(g).common_neighbours(x, y);
    }

    auto book_number(const RGraph & g) -> BookNumber
    {
        require_2graph(g, "book number");
        Adjacency adj(g);
        BookNumber best;
        for (auto e : g.edges()) {
            auto b = adj.common_neighbours(e[0], e[1]);
            if (! best.edge || b > best.value)
                best = {b, std::pair{e[0], e[1]}};
        }
        return best;
    }

    auto bipartite_edit_distance(const RGraph & g, unsigned exact_limit) -> Bipartition
    {
        require_2graph(g, "bipartite edit distance");
        auto n = g.vertex_count();
        if (n > exact_limit || n > 63)
            throw LimitExceeded("exact bipartite edit distance is limited to " + std::to_string(std::min(exact_limit, 63u))
                    + " vertices, got " + std::to_string(n));

        std::vector<std::uint64_t> row(n, 0);
        for (auto e : g.edges()) {
            row[e[0]] |= std::uint64_t{1} << e[1];
            row[e[1]] |= std::uint64_t{1} << e[0];
        }

        // Vertex n-1 stays on side 0; walk the other n-1 membership bits in Gray code order,
        // updating the inside-edge count on each single flip.
        std::uint64_t side = 0;
        std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        std::uint64_t inside = g.edge_count();
        std::uint64_t best = inside, best_side = 0;
        std::uint64_t steps = std::uint64_t{1} << (n - 1);
        for (std::uint64_t i = 1; i < steps; ++i) {
            auto v = static_cast<unsigned>(std::countr_zero(i));
            auto mine = (side >> v) & 1 ? side : (all & ~side);
            auto theirs = all & ~mine;
            inside -= static_cast<unsigned>(std::popcount(row[v] & mine));
            inside += static_cast<unsigned>(std::popcount(row[v] & theirs));
            side ^= std::uint64_t{1} << v;
            if (inside < best) {
                best = inside;
                best_side = side;
            }
        }

        std::vector<Vertex> members;
        for (Vertex v = 0; v < n; ++v)
            if ((best_side >> v) & 1)
                members.push_back(v);
        return {best, VertexSet(std::move(members)), true};
    }

    auto bipartite_edit_distance_upper_bound(const RGraph & g) -> Bipartition
    {
        require_2graph(g, "bipartite edit distance");
        auto n = g.vertex_count();
        Adjacency adj(g);
        std::vector<bool> side(n, false);

        auto same_side = [&] (Vertex v) {
            std::uint64_t same = 0;
            for (Vertex u = 0; u < n; ++u)
                if (u != v && side[u] == side[v] && adj.adjacent(u, v))
                    ++same;
            return same;
        };

        for (Vertex v = 0; v < n; ++v) {
            std::uint64_t on0 = 0, on1 = 0;
            for (Vertex u = 0; u < v; ++u)
                if (adj.adjacent(u, v))
                    ++(side[u] ? on1 : on0);
            side[v] = on1 < on0;
        }

        bool improved = true;
        while (improved) {
            improved = false;
            for (Vertex v = 0; v < n; ++v) {
                auto same = same_side(v);
                auto other = adj.degree(v) - same;
                if (other < same) {
                    side[v] = ! side[v];
                    improved = true;
                }
            }
        }

        std::uint64_t inside = 0;
        for (auto e : g.edges())
            if (side[e[0]] == side[e[1]])
                ++inside;
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n; ++v)
            if (side[v])
                members.push_back(v);
        return {inside, VertexSet(std::move(members)), false};
    }

    auto independence_number(const RGraph & g, unsigned exact_limit) -> Independence
    {
        auto n = g.vertex_count();
        if (n > exact_limit || n > 64)
            throw LimitExceeded("exact independence number is limited to " + std::to_string(std::min(exact_limit, 64u))
                    + " vertices, got " + std::to_string(n));

        // closing[v] lists the other vertices of each edge whose largest vertex is v.
        std::vector<std::vector<std::uint64_t>> closing(n);
        for (auto e : g.edges()) {
            std::uint64_t rest = 0;
            for (std::size_t i = 0; i + 1 < e.size(); ++i)
                rest |= std::uint64_t{1} << e[i];
            closing[e.back()].push_back(rest);
        }

        std::uint64_t best = 0, best_set = 0;
        auto search = [&] (auto & self, Vertex v, std::uint64_t chosen, unsigned size) -> void {
            if (size > best) {
                best = size;
                best_set = chosen;
            }
            if (v == n || size + (n - v) <= best)
                return;
            bool allowed = std::none_of(closing[v].begin(), closing[v].end(),
                    [&] (std::uint64_t rest) { return (rest & chosen) == rest; });
            if (allowed)
                self(self, v + 1, chosen | (std::uint64_t{1} << v), size + 1);
            self(self, v + 1, chosen, size);
        };
        search(search, 0, 0, 0);

        std::vector<Vertex> members;
        for (Vertex v = 0; v < n; ++v)
            if ((best_set >> v) & 1)
                members.push_back(v);
        return {best, VertexSet(std::move(members))};
    }
}
