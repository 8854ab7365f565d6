/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PATHFORGE_IO_HH
#define PATHFORGE_IO_HH 1

#include <pathforge/graph.hh>

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pathforge
{
    class ParseError : public std::runtime_error
    {
        private:
            int _line;

        public:
            ParseError(int line, const std::string & message) :
                std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
                _line(line)
            {
            }

            auto line() const -> int { return _line; }
    };

    // Edge-list text: '#' comment lines, an optional "p <n> <m>" header, one
    // "u v" edge per line with 0-based identifiers. With a header the vertex
    // set is 0 .. n-1; without one it is the set of edge endpoints.
    auto parse_edge_list(std::istream & in) -> Graph;
    auto parse_edge_list(std::string_view text) -> Graph;

    // Writes the header and the edges in ascending order. The graph must use
    // identifiers 0 .. n-1 (see compact()).
    auto write_edge_list(const Graph & g) -> std::string;

    // graph6 for up to 258047 vertices (the long form starts above 62).
    // Identifiers must be 0 .. n-1; decoding yields 0 .. n-1.
    auto encode_graph6(const Graph & g) -> std::string;
    auto decode_graph6(std::string_view text) -> Graph;

    // Either format, chosen by the ">>graph6<<" header or by format.
    enum class GraphFormat
    {
        EdgeList,
        Graph6
    };

    auto read_graph(std::istream & in, GraphFormat format) -> Graph;
    auto write_graph(const Graph & g, GraphFormat format) -> std::string;

    // FNV-1a over the canonical edge-list text, as 16 hex digits.
    auto content_hash(const Graph & g) -> std::string;
}

#endif
