#include <hypercover/errors.hh>
#include <hypercover/hypergraph_io.hh>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

namespace hypercover
{
    namespace
    {
        auto split_fields(const std::string & line, std::size_t line_number) -> std::vector<unsigned long>
        {
            std::vector<unsigned long> fields;
            std::size_t i = 0;
            while (i < line.size()) {
                std::size_t j = line.find(' ', i);
                if (j == std::string::npos)
                    j = line.size();
                if (j == i)
                    throw ParseError("fields must be separated by single spaces", line_number);
                unsigned long value = 0;
                auto [end, ec] = std::from_chars(line.data() + i, line.data() + j, value);
                if (ec != std::errc{} || end != line.data() + j)
                    throw ParseError("expected a non-negative integer, got '" + line.substr(i, j - i) + "'", line_number);
                fields.push_back(value);
                i = j + 1;
                if (j + 1 == line.size())
                    throw ParseError("trailing space", line_number);
            }
            return fields;
        }
    }

    auto parse_hypergraph(const std::string & text) -> RGraph
    {
        if (text.empty() || text.back() != '\n')
            throw ParseError("file must end with a newline", static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1);

        std::istringstream in(text);
        std::string line;
        std::size_t line_number = 0;
        bool have_header = false;
        unsigned r = 0, n = 0;
        std::vector<Vertex> edge;
        std::optional<RGraphBuilder> builder;

        while (std::getline(in, line)) {
            ++line_number;
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            if (! line.empty() && line.front() == '#')
                continue;

            if (! have_header) {
                if (line.empty())
                    continue;
                auto fields = split_fields(line, line_number);
                if (fields.size() != 2)
                    throw ParseError("header must be 'r n'", line_number);
                if (fields[0] < 2 || fields[0] > max_uniformity)
                    throw ParseError("uniformity " + std::to_string(fields[0]) + " out of range", line_number);
                if (fields[1] < fields[0] || fields[1] > 1'000'000)
                    throw ParseError("vertex count " + std::to_string(fields[1]) + " out of range", line_number);
                r = static_cast<unsigned>(fields[0]);
                n = static_cast<unsigned>(fields[1]);
                builder.emplace(r, n);
                have_header = true;
                continue;
            }

            if (line.empty())
                throw ParseError("empty edge line", line_number);
            auto fields = split_fields(line, line_number);
            if (fields.size() != r)
                throw ParseError("edge has " + std::to_string(fields.size()) + " vertices, expected " + std::to_string(r), line_number);
            edge.clear();
            for (std::size_t k = 0; k < fields.size(); ++k) {
                if (fields[k] >= n)
                    throw ParseError("vertex " + std::to_string(fields[k]) + " out of range for n = " + std::to_string(n), line_number);
                if (k > 0 && fields[k] <= fields[k - 1])
                    throw ParseError("edge vertices must be strictly ascending", line_number);
                edge.push_back(static_cast<Vertex>(fields[k]));
            }
            builder->add(edge);
        }

        if (! have_header)
            throw ParseError("missing 'r n' header", line_number);
        return std::move(*builder).build();
    }

    auto read_hypergraph(std::istream & in) -> RGraph
    {
        std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        return parse_hypergraph(text);
    }

    auto read_hypergraph(const std::filesystem::path & path) -> RGraph
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw Error("cannot open " + path.string());
        return read_hypergraph(in);
    }

    auto format_hypergraph(const RGraph & g) -> std::string
    {
        std::string out = std::to_string(g.uniformity()) + " " + std::to_string(g.vertex_count()) + "\n";
        for (auto e : g.edges()) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i)
                    out += ' ';
                out += std::to_string(e[i]);
            }
            out += '\n';
        }
        return out;
    }

    auto write_hypergraph(std::ostream & out, const RGraph & g) -> void
    {
        out << format_hypergraph(g);
    }

    auto write_hypergraph(const std::filesystem::path & path, const RGraph & g) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw Error("cannot write " + path.string());
        write_hypergraph(out, g);
    }
}
