#include <hypercover/errors.hh>
#include <hypercover/motif.hh>

#include <charconv>

namespace hypercover
{
    auto Motif::k4() -> Motif
    {
        return Motif(MotifKind::k4, 4, complete_graph(3, 4));
    }

    auto Motif::k4_minus() -> Motif
    {
        return Motif(MotifKind::k4_minus, 4, RGraph::from_edge_list(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}));
    }

    auto Motif::c5() -> Motif
    {
        // every three cyclically consecutive vertices of 0,1,2,3,4
        return Motif(MotifKind::c5, 5, RGraph::from_edge_list(3, 5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}}));
    }

    auto Motif::complete3(unsigned t) -> Motif
    {
        if (t < 4)
            throw InvalidArgument("K_t^(3) needs t >= 4");
        if (t == 4)
            return k4();
        return Motif(MotifKind::complete3, t, complete_graph(3, t));
    }

    auto Motif::clique(unsigned r) -> Motif
    {
        if (r < 3 || r > max_uniformity + 1)
            throw InvalidArgument("clique{r} needs 3 <= r <= " + std::to_string(max_uniformity + 1));
        return Motif(MotifKind::clique, r, complete_graph(r - 1, r));
    }

    auto Motif::parse(std::string_view name) -> Motif
    {
        auto number = [&](std::string_view digits) -> unsigned {
            unsigned value = 0;
            auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
            if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size())
                throw InvalidArgument("unknown motif '" + std::string(name) + "'");
            return value;
        };

        if (name == "k4")
            return k4();
        if (name == "k4-")
            return k4_minus();
        if (name == "c5")
            return c5();
        if (name.starts_with("clique"))
            return clique(number(name.substr(6)));
        if (name.starts_with("k")) {
            unsigned t = number(name.substr(1));
            if (t < 5)
                throw InvalidArgument("k{t} needs t >= 5 (use k4 for the tetrahedron)");
            return complete3(t);
        }
        throw InvalidArgument("unknown motif '" + std::string(name) + "'; expected k4, k4-, c5, k{t} or clique{r}");
    }

    auto Motif::name() const -> std::string
    {
        switch (_kind) {
            case MotifKind::k4: return "k4";
            case MotifKind::k4_minus: return "k4-";
            case MotifKind::c5: return "c5";
            case MotifKind::complete3: return "k" + std::to_string(_parameter);
            case MotifKind::clique: return "clique" + std::to_string(_parameter);
        }
        return "?";
    }
}
