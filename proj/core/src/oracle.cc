#include <hypercover/errors.hh>
#include <hypercover/oracle.hh>
#include <hypercover/parallel.hh>
#include <hypercover/subgraph_cover.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercover
{
    namespace
    {
        using Clock = std::chrono::steady_clock;
        using Mask = std::uint64_t;

        constexpr unsigned max_chunk_bits = 8;
        constexpr std::uint64_t deadline_poll = 1u << 14;

        struct Candidates
        {
            unsigned r, n;
            std::vector<std::vector<Vertex>> edges;
        };

        auto candidates(unsigned r, unsigned n, const SearchOptions & options) -> Candidates
        {
            Candidates c{r, n, {}};
            auto count = binomial(n, r);
            if (count > 63 || count > options.edge_limit)
                throw LimitExceeded("exhaustive search over C(" + std::to_string(n) + ", " + std::to_string(r) + ") = "
                        + std::to_string(count) + " candidate edges exceeds the limit of " + std::to_string(std::min(options.edge_limit, 63u)));
            for_each_subset(n, r, [&] (std::span<const Vertex> e) { c.edges.emplace_back(e.begin(), e.end()); });
            return c;
        }

        auto graph_from_mask(const Candidates & c, Mask mask) -> RGraph
        {
            RGraphBuilder b(c.r, c.n);
            for (std::size_t i = 0; i < c.edges.size(); ++i)
                if ((mask >> i) & 1)
                    b.add(c.edges[i]);
            return std::move(b).build();
        }

        struct ChunkBest
        {
            bool found = false;
            std::uint64_t value = 0;
            Mask mask = 0;
            std::uint64_t scanned = 0;
        };

        /// Shared run state: the stop flag and the best value any worker has recorded.
        struct Shared
        {
            std::atomic<bool> stop{false};
            std::atomic<std::uint64_t> best;
            bool share;
            std::uint64_t initial;
            std::optional<Clock::time_point> deadline;

            Shared(std::uint64_t init, bool share_incumbent, std::optional<Clock::time_point> dl) :
                best(init), share(share_incumbent), initial(init), deadline(dl)
            {
            }

            auto incumbent() const -> std::uint64_t
            {
                return share ? best.load(std::memory_order_relaxed) : initial;
            }

            auto poll(std::uint64_t & nodes) -> bool
            {
                if (++nodes % deadline_poll == 0 && deadline && Clock::now() > *deadline)
                    stop = true;
                return stop.load(std::memory_order_relaxed);
            }
        };

        /// Decision for the top bits of chunk `chunk`, or -1 below the prefix.
        auto forced_bit(unsigned edge_count, unsigned chunk_bits, std::uint64_t chunk, unsigned i) -> int
        {
            if (i + chunk_bits < edge_count)
                return -1;
            unsigned j = edge_count - 1 - i;
            return static_cast<int>((chunk >> (chunk_bits - 1 - j)) & 1);
        }

        template <typename Better>
        auto reduce(const std::vector<ChunkBest> & chunks, Better better) -> ChunkBest
        {
            ChunkBest total;
            for (const auto & c : chunks) {
                total.scanned += c.scanned;
                if (! c.found)
                    continue;
                if (! total.found || better(c.value, total.value) || (c.value == total.value && c.mask < total.mask)) {
                    total.found = true;
                    total.value = c.value;
                    total.mask = c.mask;
                }
            }
            return total;
        }

        class Delta1Search
        {
        public:
            Delta1Search(const Candidates & c, const Motif & motif) :
                _c(c),
                _copies(c.edges.size())
            {
                index_copies(motif);
            }

            auto run_chunk(Shared & shared, unsigned chunk_bits, std::uint64_t chunk) -> ChunkBest
            {
                State s{shared, chunk_bits, chunk, std::vector<std::uint64_t>(_c.n, 0), std::vector<std::uint64_t>(_c.n, 0), 0, {}, 0};
                for (const auto & e : _c.edges)
                    for (auto v : e)
                        ++s.remaining[v];
                dfs(s, static_cast<int>(_c.edges.size()) - 1);
                s.best.scanned = s.nodes;
                return s.best;
            }

        private:
            struct State
            {
                Shared & shared;
                unsigned chunk_bits;
                std::uint64_t chunk;
                std::vector<std::uint64_t> included, remaining;
                Mask mask;
                ChunkBest best;
                std::uint64_t nodes;
            };

            const Candidates & _c;
            /// _copies[i]: edge masks of motif copies through vertex 0 whose lowest edge is i.
            std::vector<std::vector<Mask>> _copies;

            auto index_copies(const Motif & motif) -> void
            {
                const auto & pattern = motif.pattern();
                auto k = pattern.vertex_count();
                if (k > _c.n)
                    return;
                std::set<Mask> seen;
                std::vector<Vertex> image(k);
                std::vector<bool> used(_c.n, false);
                std::vector<Vertex> mapped(_c.r);

                auto record = [&] {
                    if (std::find(image.begin(), image.end(), Vertex{0}) == image.end())
                        return;
                    Mask m = 0;
                    for (auto e : pattern.edges()) {
                        for (unsigned i = 0; i < _c.r; ++i)
                            mapped[i] = image[e[i]];
                        std::sort(mapped.begin(), mapped.end());
                        auto at = std::lower_bound(_c.edges.begin(), _c.edges.end(), mapped);
                        m |= Mask{1} << (at - _c.edges.begin());
                    }
                    seen.insert(m);
                };
                auto assign = [&] (auto & self, unsigned depth) -> void {
                    if (depth == k) {
                        record();
                        return;
                    }
                    for (Vertex v = 0; v < _c.n; ++v)
                        if (! used[v]) {
                            used[v] = true;
                            image[depth] = v;
                            self(self, depth + 1);
                            used[v] = false;
                        }
                };
                assign(assign, 0);
                for (auto m : seen)
                    _copies[std::countr_zero(m)].push_back(m);
            }

            auto pruned(const State & s, std::uint64_t bound) const -> bool
            {
                if (bound < s.shared.incumbent())
                    return true;
                return s.best.found && bound <= s.best.value;
            }

            auto dfs(State & s, int i) -> void
            {
                if (s.shared.poll(s.nodes))
                    return;
                std::uint64_t bound = std::numeric_limits<std::uint64_t>::max();
                for (unsigned v = 0; v < _c.n; ++v)
                    bound = std::min(bound, s.included[v] + s.remaining[v]);
                if (pruned(s, bound))
                    return;
                if (i < 0) {
                    s.best = {true, bound, s.mask, 0};
                    if (s.shared.share) {
                        auto cur = s.shared.best.load();
                        while (cur < bound && ! s.shared.best.compare_exchange_weak(cur, bound)) {
                        }
                    }
                    return;
                }

                const auto & e = _c.edges[i];
                auto forced = forced_bit(static_cast<unsigned>(_c.edges.size()), s.chunk_bits, s.chunk, static_cast<unsigned>(i));
                for (auto v : e)
                    --s.remaining[v];
                if (forced != 1)
                    dfs(s, i - 1);
                if (forced != 0) {
                    s.mask |= Mask{1} << i;
                    bool covered = std::any_of(_copies[i].begin(), _copies[i].end(), [&] (Mask m) { return (s.mask & m) == m; });
                    if (! covered) {
                        for (auto v : e)
                            ++s.included[v];
                        dfs(s, i - 1);
                        for (auto v : e)
                            --s.included[v];
                    }
                    s.mask &= ~(Mask{1} << i);
                }
                for (auto v : e)
                    ++s.remaining[v];
            }
        };

        /// Exactly m edges, minimising a statistic that can only grow as edges are added.
        class MinSearch
        {
        public:
            MinSearch(const Candidates & c, std::uint64_t m, Objective objective) :
                _c(c), _m(m), _objective(objective)
            {
            }

            auto run_chunk(Shared & shared, unsigned chunk_bits, std::uint64_t chunk) -> ChunkBest
            {
                State s{shared, chunk_bits, chunk, std::vector<Mask>(_c.n, 0), std::vector<std::uint32_t>(std::size_t(_c.n) * _c.n, 0), 0, 0, {}, 0};
                dfs(s, static_cast<int>(_c.edges.size()) - 1, 0);
                s.best.scanned = s.nodes;
                return s.best;
            }

        private:
            struct State
            {
                Shared & shared;
                unsigned chunk_bits;
                std::uint64_t chunk;
                std::vector<Mask> adj;
                /// Triangle-degrees on the diagonal, book sizes off it.
                std::vector<std::uint32_t> stat;
                std::uint64_t count;
                Mask mask;
                ChunkBest best;
                std::uint64_t nodes;
            };

            const Candidates & _c;
            std::uint64_t _m;
            Objective _objective;

            auto at(State & s, Vertex a, Vertex b) const -> std::uint32_t &
            {
                return s.stat[std::size_t(a) * _c.n + b];
            }

            /// Applies +delta for edge uv and returns the largest touched statistic.
            auto update(State & s, Vertex u, Vertex v, int delta) const -> std::uint64_t
            {
                Mask common = s.adj[u] & s.adj[v];
                auto k = static_cast<std::uint32_t>(std::popcount(common));
                std::uint64_t top = 0;
                if (_objective == Objective::min_tmax) {
                    at(s, u, u) += delta * k;
                    at(s, v, v) += delta * k;
                    top = std::max(at(s, u, u), at(s, v, v));
                    for (Mask w = common; w; w &= w - 1) {
                        auto x = static_cast<Vertex>(std::countr_zero(w));
                        at(s, x, x) += delta;
                        top = std::max<std::uint64_t>(top, at(s, x, x));
                    }
                }
                else {
                    at(s, u, v) += delta * k;
                    at(s, v, u) += delta * k;
                    top = k;
                    for (Mask w = common; w; w &= w - 1) {
                        auto x = static_cast<Vertex>(std::countr_zero(w));
                        for (auto y : {u, v}) {
                            at(s, x, y) += delta;
                            at(s, y, x) += delta;
                            top = std::max<std::uint64_t>(top, at(s, x, y));
                        }
                    }
                }
                return top;
            }

            auto dfs(State & s, int i, std::uint64_t current) -> void
            {
                if (s.shared.poll(s.nodes))
                    return;
                if (current > s.shared.incumbent() || (s.best.found && current >= s.best.value))
                    return;
                if (s.count == _m) {
                    s.best = {true, current, s.mask, 0};
                    if (s.shared.share) {
                        auto cur = s.shared.best.load();
                        while (cur > current && ! s.shared.best.compare_exchange_weak(cur, current)) {
                        }
                    }
                    return;
                }
                if (i < 0 || s.count + static_cast<std::uint64_t>(i + 1) < _m)
                    return;

                auto forced = forced_bit(static_cast<unsigned>(_c.edges.size()), s.chunk_bits, s.chunk, static_cast<unsigned>(i));
                if (forced != 1)
                    dfs(s, i - 1, current);
                if (forced != 0) {
                    Vertex u = _c.edges[i][0], v = _c.edges[i][1];
                    auto top = update(s, u, v, +1);
                    s.adj[u] |= Mask{1} << v;
                    s.adj[v] |= Mask{1} << u;
                    s.mask |= Mask{1} << i;
                    ++s.count;
                    dfs(s, i - 1, std::max(current, top));
                    --s.count;
                    s.mask &= ~(Mask{1} << i);
                    s.adj[u] &= ~(Mask{1} << v);
                    s.adj[v] &= ~(Mask{1} << u);
                    update(s, u, v, -1);
                }
            }
        };

        template <typename Search>
        auto run_chunks(Search & search, Shared & shared, unsigned edge_count, unsigned threads) -> std::vector<ChunkBest>
        {
            unsigned chunk_bits = std::min(edge_count, max_chunk_bits);
            std::vector<ChunkBest> chunks(std::size_t{1} << chunk_bits);
            parallel_for(chunks.size(), threads, [&] (std::size_t c) {
                chunks[c] = search.run_chunk(shared, chunk_bits, c);
            });
            return chunks;
        }

        auto internal_error(const std::string & what) -> void
        {
            throw std::logic_error("search witness failed re-verification: " + what);
        }
    }

    auto to_string(Objective objective) -> std::string
    {
        switch (objective) {
            case Objective::max_delta1_no_cover: return "max-delta1";
            case Objective::min_tmax: return "min-tmax";
            case Objective::min_book: return "min-book";
        }
        return "?";
    }

    auto max_delta1_no_cover(unsigned n, const Motif & motif, const SearchOptions & options) -> SearchResult
    {
        auto start = Clock::now();
        auto r = motif.uniformity();
        if (n < r)
            throw InvalidArgument("need at least " + std::to_string(r) + " vertices");
        auto c = candidates(r, n, options);
        auto edge_count = static_cast<unsigned>(c.edges.size());
        Delta1Search search(c, motif);

        auto attempt = [&] (std::uint64_t floor) {
            Shared shared(floor, options.share_incumbent, options.deadline);
            auto chunks = run_chunks(search, shared, edge_count, options.threads);
            auto best = reduce(chunks, std::greater<>());
            return std::pair{best, ! shared.stop.load()};
        };

        auto [best, completed] = attempt(options.known_attainable.value_or(0));
        if (completed && ! best.found && options.known_attainable) {
            // the supplied bound was not attainable after all
            auto [again, done] = attempt(0);
            best = again;
            completed = done;
        }
        if (! best.found)
            best = {true, 0, 0, best.scanned};

        auto witness = graph_from_mask(c, best.mask);
        if (completed || best.mask != 0) {
            if (min_i_degree(witness, 1).value != best.value)
                internal_error("minimum degree differs");
            if (covers(witness, motif, 0))
                internal_error("vertex 0 is covered");
        }
        return {Objective::max_delta1_no_cover, n, motif, std::nullopt, best.value, std::move(witness), best.scanned,
            Clock::now() - start, completed};
    }

    namespace
    {
        auto min_objective(Objective objective, unsigned n, std::uint64_t m, const SearchOptions & options) -> SearchResult
        {
            auto start = Clock::now();
            if (n < 2)
                throw InvalidArgument("need at least 2 vertices");
            if (m > binomial(n, 2))
                throw InvalidArgument("m = " + std::to_string(m) + " exceeds C(" + std::to_string(n) + ", 2)");
            auto c = candidates(2, n, options);
            auto edge_count = static_cast<unsigned>(c.edges.size());
            MinSearch search(c, m, objective);

            auto attempt = [&] (std::uint64_t ceiling) {
                Shared shared(ceiling, options.share_incumbent, options.deadline);
                auto chunks = run_chunks(search, shared, edge_count, options.threads);
                return std::pair{reduce(chunks, std::less<>()), ! shared.stop.load()};
            };

            auto [best, completed] = attempt(options.known_attainable.value_or(std::numeric_limits<std::uint64_t>::max()));
            if (completed && ! best.found && options.known_attainable) {
                auto [again, done] = attempt(std::numeric_limits<std::uint64_t>::max());
                best = again;
                completed = done;
            }
            if (! best.found)
                throw LimitExceeded("search budget ran out before any graph with " + std::to_string(m) + " edges was reached");

            auto witness = graph_from_mask(c, best.mask);
            if (witness.edge_count() != m)
                internal_error("edge count differs");
            auto measured = objective == Objective::min_tmax ? t_max(witness).value : book_number(witness).value;
            if (measured != best.value)
                internal_error(to_string(objective) + " differs");
            return {objective, n, std::nullopt, m, best.value, std::move(witness), best.scanned, Clock::now() - start, completed};
        }
    }

    auto min_tmax(unsigned n, std::uint64_t m, const SearchOptions & options) -> SearchResult
    {
        return min_objective(Objective::min_tmax, n, m, options);
    }

    auto min_book(unsigned n, std::uint64_t m, const SearchOptions & options) -> SearchResult
    {
        return min_objective(Objective::min_book, n, m, options);
    }
}
