#pragma once

#include <hypercover/hypergraph.hh>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace hypercover
{
    // Text format: the first non-comment line is "r n"; every following line is one
    // edge, r ascending 0-based indices separated by single spaces. Lines starting with
    // '#' are comments. The file must end with a newline.

    auto read_hypergraph(std::istream & in) -> RGraph;
    auto read_hypergraph(const std::filesystem::path & path) -> RGraph;
    auto parse_hypergraph(const std::string & text) -> RGraph;

    auto write_hypergraph(std::ostream & out, const RGraph & g) -> void;
    auto write_hypergraph(const std::filesystem::path & path, const RGraph & g) -> void;
    auto format_hypergraph(const RGraph & g) -> std::string;
}
