#include <hypercover/errors.hh>
#include <hypercover/hypergraph.hh>

#include <algorithm>
#include <array>
#include <limits>
#include <string>

namespace hypercover
{
    namespace
    {
        constexpr std::uint64_t max_membership_bits = std::uint64_t{1} << 31;

        auto check_shape(unsigned r, unsigned n) -> void
        {
            if (r < 1)
                throw InvalidArgument("uniformity must be positive");
            if (r > max_uniformity)
                throw InvalidArgument("uniformity " + std::to_string(r) + " exceeds the supported maximum " + std::to_string(max_uniformity));
            if (n < r)
                throw InvalidArgument("vertex count " + std::to_string(n) + " is smaller than the uniformity " + std::to_string(r));
        }

        auto describe(std::span<const Vertex> edge) -> std::string
        {
            std::string s = "{";
            for (std::size_t i = 0; i < edge.size(); ++i) {
                if (i)
                    s += ",";
                s += std::to_string(edge[i]);
            }
            return s + "}";
        }
    }

    VertexSet::VertexSet(std::initializer_list<Vertex> members) :
        VertexSet(std::vector<Vertex>(members))
    {
    }

    VertexSet::VertexSet(std::vector<Vertex> members) :
        _members(std::move(members))
    {
        std::sort(_members.begin(), _members.end());
        if (std::adjacent_find(_members.begin(), _members.end()) != _members.end())
            throw InvalidArgument("vertex set has a repeated vertex");
    }

    auto VertexSet::contains(Vertex v) const -> bool
    {
        return std::binary_search(_members.begin(), _members.end(), v);
    }

    RGraph::RGraph(unsigned r, unsigned n) :
        _r(r),
        _n(n)
    {
        check_shape(r, n);
        index();
    }

    auto RGraph::index() -> void
    {
        _choose.assign(std::size_t(_n + 1) * (_r + 1), 0);
        for (Vertex v = 0; v <= _n; ++v)
            for (unsigned k = 0; k <= _r; ++k)
                _choose[v * (_r + 1) + k] = binomial(v, k);

        std::uint64_t total = choose(_n, _r);
        if (total > max_membership_bits)
            throw LimitExceeded("C(" + std::to_string(_n) + ", " + std::to_string(_r) + ") r-sets exceed the membership index capacity");
        _membership.assign((total + 63) / 64, 0);
        for (auto e : edges()) {
            auto k = rank(e);
            _membership[k / 64] |= std::uint64_t{1} << (k % 64);
        }
    }

    auto RGraph::rank(std::span<const Vertex> edge) const -> std::uint64_t
    {
        std::uint64_t result = 0;
        for (unsigned i = 0; i < _r; ++i)
            result += choose(edge[i], i + 1);
        return result;
    }

    auto RGraph::has_edge(std::span<const Vertex> edge) const -> bool
    {
        auto k = rank(edge);
        return (_membership[k / 64] >> (k % 64)) & 1;
    }

    auto RGraph::has_edge(std::initializer_list<Vertex> edge) const -> bool
    {
        if (edge.size() != _r)
            return false;
        std::array<Vertex, max_uniformity> sorted;
        std::copy(edge.begin(), edge.end(), sorted.begin());
        std::sort(sorted.begin(), sorted.begin() + _r);
        for (unsigned i = 0; i < _r; ++i)
            if (sorted[i] >= _n || (i > 0 && sorted[i] == sorted[i - 1]))
                return false;
        return has_edge(std::span<const Vertex>(sorted.data(), _r));
    }

    auto RGraph::from_edge_list(unsigned r, unsigned n, std::span<const std::vector<Vertex>> edges) -> RGraph
    {
        if (r < 2)
            throw InvalidArgument("uniformity must be at least 2, got " + std::to_string(r));
        RGraphBuilder builder(r, n);
        for (auto & e : edges)
            builder.add(std::span<const Vertex>(e));
        return std::move(builder).build();
    }

    auto RGraph::from_edge_list(unsigned r, unsigned n, std::initializer_list<std::vector<Vertex>> edges) -> RGraph
    {
        return from_edge_list(r, n, std::span<const std::vector<Vertex>>(edges.begin(), edges.size()));
    }

    RGraphBuilder::RGraphBuilder(unsigned r, unsigned n) :
        _r(r),
        _n(n)
    {
        check_shape(r, n);
    }

    auto RGraphBuilder::add(std::span<const Vertex> edge) -> RGraphBuilder &
    {
        if (edge.size() != _r)
            throw InvalidArgument("edge " + describe(edge) + " has " + std::to_string(edge.size()) + " vertices, expected " + std::to_string(_r));
        std::array<Vertex, max_uniformity> sorted;
        std::copy(edge.begin(), edge.end(), sorted.begin());
        std::sort(sorted.begin(), sorted.begin() + _r);
        for (unsigned i = 0; i < _r; ++i) {
            if (sorted[i] >= _n)
                throw InvalidArgument("edge " + describe(edge) + " has vertex " + std::to_string(sorted[i]) + " out of range for n = " + std::to_string(_n));
            if (i > 0 && sorted[i] == sorted[i - 1])
                throw InvalidArgument("edge " + describe(edge) + " repeats vertex " + std::to_string(sorted[i]));
        }
        _flat.insert(_flat.end(), sorted.begin(), sorted.begin() + _r);
        return *this;
    }

    auto RGraphBuilder::add(std::initializer_list<Vertex> edge) -> RGraphBuilder &
    {
        return add(std::span<const Vertex>(edge.begin(), edge.size()));
    }

    auto RGraphBuilder::build() && -> RGraph
    {
        std::size_t m = _flat.size() / _r;
        std::vector<std::size_t> order(m);
        for (std::size_t i = 0; i < m; ++i)
            order[i] = i;
        auto at = [&](std::size_t i) { return std::span<const Vertex>(_flat.data() + i * _r, _r); };
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            auto x = at(a), y = at(b);
            return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
        });

        RGraph g(_r, _n);
        g._flat.reserve(_flat.size());
        for (std::size_t i = 0; i < m; ++i) {
            auto e = at(order[i]);
            if (i > 0 && std::equal(e.begin(), e.end(), at(order[i - 1]).begin()))
                continue;
            g._flat.insert(g._flat.end(), e.begin(), e.end());
        }
        g.index();
        return g;
    }

    auto degree(const RGraph & g, const VertexSet & s) -> std::uint64_t
    {
        if (s.size() > g.uniformity())
            throw InvalidArgument("degree of a set larger than the uniformity");
        for (auto v : s.members())
            if (v >= g.vertex_count())
                throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
        if (s.empty())
            return g.edge_count();

        std::uint64_t count = 0;
        for (auto e : g.edges())
            if (std::includes(e.begin(), e.end(), s.members().begin(), s.members().end()))
                ++count;
        return count;
    }

    auto degree_profile(const RGraph & g) -> DegreeProfile
    {
        DegreeProfile result;
        result.per_vertex.assign(g.vertex_count(), 0);
        for (auto e : g.edges())
            for (auto v : e)
                ++result.per_vertex[v];
        result.min_degree = *std::min_element(result.per_vertex.begin(), result.per_vertex.end());
        result.max_degree = *std::max_element(result.per_vertex.begin(), result.per_vertex.end());
        return result;
    }

    auto for_each_subset(unsigned n, unsigned k, const std::function<void (std::span<const Vertex>)> & fn) -> void
    {
        if (k > n)
            return;
        std::vector<Vertex> c(k);
        for (unsigned i = 0; i < k; ++i)
            c[i] = i;
        while (true) {
            fn(c);
            int i = static_cast<int>(k) - 1;
            while (i >= 0 && c[i] == n - k + static_cast<unsigned>(i))
                --i;
            if (i < 0)
                return;
            ++c[i];
            for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j)
                c[j] = c[j - 1] + 1;
        }
    }

    auto min_i_degree(const RGraph & g, unsigned i) -> MinDegree
    {
        unsigned r = g.uniformity(), n = g.vertex_count();
        if (i < 1 || i >= r)
            throw InvalidArgument("i must satisfy 1 <= i <= r-1, got " + std::to_string(i));

        auto colex = [&](std::span<const Vertex> s) {
            std::uint64_t k = 0;
            for (unsigned j = 0; j < s.size(); ++j)
                k += binomial(s[j], j + 1);
            return k;
        };

        std::vector<std::uint64_t> counts(binomial(n, i), 0);
        std::vector<Vertex> sub(i);
        for (auto e : g.edges()) {
            // every i-subset of the edge, by index combination
            std::vector<unsigned> idx(i);
            for (unsigned j = 0; j < i; ++j)
                idx[j] = j;
            while (true) {
                for (unsigned j = 0; j < i; ++j)
                    sub[j] = e[idx[j]];
                ++counts[colex(sub)];
                int j = static_cast<int>(i) - 1;
                while (j >= 0 && idx[j] == r - i + static_cast<unsigned>(j))
                    --j;
                if (j < 0)
                    break;
                ++idx[j];
                for (unsigned l = static_cast<unsigned>(j) + 1; l < i; ++l)
                    idx[l] = idx[l - 1] + 1;
            }
        }

        MinDegree result;
        result.value = std::numeric_limits<std::uint64_t>::max();
        for_each_subset(n, i, [&](std::span<const Vertex> s) {
            auto c = counts[colex(s)];
            if (c < result.value) {
                result.value = c;
                result.witness = VertexSet(std::vector<Vertex>(s.begin(), s.end()));
            }
        });
        return result;
    }

    auto link(const RGraph & g, const VertexSet & s) -> LinkGraph
    {
        unsigned r = g.uniformity(), n = g.vertex_count();
        if (s.empty() || s.size() >= r)
            throw InvalidArgument("link requires 0 < |S| < r");
        for (auto v : s.members())
            if (v >= n)
                throw InvalidArgument("vertex " + std::to_string(v) + " out of range");

        std::vector<Vertex> original;
        std::vector<Vertex> relabel(n, 0);
        for (Vertex v = 0; v < n; ++v)
            if (! s.contains(v)) {
                relabel[v] = static_cast<Vertex>(original.size());
                original.push_back(v);
            }

        unsigned lr = r - static_cast<unsigned>(s.size());
        RGraphBuilder builder(lr, static_cast<unsigned>(original.size()));
        std::vector<Vertex> rest;
        for (auto e : g.edges()) {
            if (! std::includes(e.begin(), e.end(), s.members().begin(), s.members().end()))
                continue;
            rest.clear();
            for (auto v : e)
                if (! s.contains(v))
                    rest.push_back(relabel[v]);
            builder.add(rest);
        }
        return LinkGraph{std::move(builder).build(), std::move(original)};
    }

    auto edge_density(const RGraph & g) -> Rational
    {
        return Rational(BigInt(g.edge_count()), big_binomial(g.vertex_count(), g.uniformity()));
    }

    auto complete_graph(unsigned r, unsigned n) -> RGraph
    {
        RGraphBuilder builder(r, n);
        for_each_subset(n, r, [&](std::span<const Vertex> s) { builder.add(s); });
        return std::move(builder).build();
    }
}
