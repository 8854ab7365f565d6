/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/io.hh>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iterator>
#include <set>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace pathforge
{
    namespace
    {
        auto trim(string_view s) -> string_view
        {
            while (! s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
                s.remove_prefix(1);
            while (! s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
                s.remove_suffix(1);
            return s;
        }

        auto split_numbers(string_view s, int line) -> vector<long long>
        {
            vector<long long> result;
            while (true) {
                s = trim(s);
                if (s.empty())
                    break;
                auto end = s.find_first_of(" \t");
                auto token = s.substr(0, end);
                long long value = 0;
                auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
                if (ec != std::errc{} || ptr != token.data() + token.size())
                    throw ParseError{line, "expected an integer, found '" + string(token) + "'"};
                result.push_back(value);
                if (end == string_view::npos)
                    break;
                s.remove_prefix(end);
            }
            return result;
        }

        auto require_compact(const Graph & g) -> void
        {
            for (std::size_t i = 0; i < g.order(); ++i)
                if (g.vertices()[i] != Vertex(i))
                    throw GraphError{"graph identifiers must be 0 .. n-1 for this format"};
        }
    }

    auto parse_edge_list(std::istream & in) -> Graph
    {
        string line;
        int number = 0;
        long long header_n = -1, header_m = -1;
        int header_line = 0;
        vector<Edge> edges;
        std::set<Edge> seen;
        std::set<Vertex> endpoints;

        while (std::getline(in, line)) {
            ++number;
            auto text = trim(line);
            if (text.empty() || text.front() == '#')
                continue;
            if (text.front() == 'p') {
                if (header_n != -1)
                    throw ParseError{number, "second header line"};
                if (! edges.empty())
                    throw ParseError{number, "header must precede the edges"};
                auto values = split_numbers(text.substr(1), number);
                if (values.size() != 2 || values[0] < 0 || values[1] < 0)
                    throw ParseError{number, "header must be 'p <n> <m>'"};
                header_n = values[0];
                header_m = values[1];
                header_line = number;
                continue;
            }
            auto values = split_numbers(text, number);
            if (values.size() != 2)
                throw ParseError{number, "edge line must hold exactly two vertices"};
            if (values[0] < 0 || values[1] < 0)
                throw ParseError{number, "vertex identifiers are 0-based and non-negative"};
            if (header_n != -1 && (values[0] >= header_n || values[1] >= header_n))
                throw ParseError{number, "vertex outside 0 .. " + std::to_string(header_n - 1)};
            if (values[0] == values[1])
                throw ParseError{number, "self-loop"};
            auto e = make_edge(Vertex(values[0]), Vertex(values[1]));
            if (! seen.insert(e).second)
                throw ParseError{number, "parallel edge " + std::to_string(e.first) + " " + std::to_string(e.second)};
            edges.push_back(e);
            endpoints.insert(e.first);
            endpoints.insert(e.second);
        }

        if (header_n != -1) {
            if (header_m != (long long)(edges.size()))
                throw ParseError{header_line, "header announces " + std::to_string(header_m) + " edges, found " + std::to_string(edges.size())};
            return Graph::from_edges(std::size_t(header_n), edges);
        }
        return Graph::from_edges(vector<Vertex>(endpoints.begin(), endpoints.end()), edges);
    }

    auto parse_edge_list(string_view text) -> Graph
    {
        std::istringstream in{string(text)};
        return parse_edge_list(in);
    }

    auto write_edge_list(const Graph & g) -> string
    {
        require_compact(g);
        string out = "p " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
        for (auto [u, v] : g.edges())
            out += std::to_string(u) + " " + std::to_string(v) + "\n";
        return out;
    }

    auto encode_graph6(const Graph & g) -> string
    {
        require_compact(g);
        auto n = g.order();
        string out;
        if (n <= 62)
            out.push_back(char(63 + n));
        else if (n <= 258047) {
            out.push_back('~');
            out.push_back(char(63 + ((n >> 12) & 63)));
            out.push_back(char(63 + ((n >> 6) & 63)));
            out.push_back(char(63 + (n & 63)));
        }
        else
            throw GraphError{"graph6 encoding supports at most 258047 vertices"};

        int value = 0, bits = 0;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i) {
                value = (value << 1) | (g.adjacent(Vertex(i), Vertex(j)) ? 1 : 0);
                if (++bits == 6) {
                    out.push_back(char(63 + value));
                    value = bits = 0;
                }
            }
        if (bits > 0)
            out.push_back(char(63 + (value << (6 - bits))));
        return out;
    }

    auto decode_graph6(string_view text) -> Graph
    {
        text = trim(text);
        if (text.starts_with(">>graph6<<"))
            text.remove_prefix(10);
        if (text.empty())
            throw ParseError{0, "empty graph6 string"};
        for (char c : text)
            if (c < 63 || c > 126)
                throw ParseError{0, "invalid graph6 character"};

        std::size_t n = 0, pos = 0;
        if (text[0] != '~')
            n = std::size_t(text[pos++] - 63);
        else {
            if (text.size() < 4 || text[1] == '~')
                throw ParseError{0, "unsupported graph6 size prefix"};
            n = (std::size_t(text[1] - 63) << 12) | (std::size_t(text[2] - 63) << 6) | std::size_t(text[3] - 63);
            if (n <= 62)
                throw ParseError{0, "non-canonical graph6 size prefix"};
            pos = 4;
        }

        std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
        std::size_t expected = (pairs + 5) / 6;
        if (text.size() - pos != expected)
            throw ParseError{0, "graph6 body has " + std::to_string(text.size() - pos) + " characters, expected " + std::to_string(expected)};

        vector<Edge> edges;
        std::size_t bit = 0;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i, ++bit) {
                int chunk = text[pos + bit / 6] - 63;
                if ((chunk >> (5 - bit % 6)) & 1)
                    edges.emplace_back(Vertex(i), Vertex(j));
            }
        if (bit % 6 != 0) {
            int chunk = text[pos + bit / 6] - 63;
            if (chunk & ((1 << (6 - bit % 6)) - 1))
                throw ParseError{0, "non-zero graph6 padding bits"};
        }
        return Graph::from_edges(n, edges);
    }

    auto read_graph(std::istream & in, GraphFormat format) -> Graph
    {
        string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        if (format == GraphFormat::Graph6 || trim(text).starts_with(">>graph6<<"))
            return decode_graph6(text);
        return parse_edge_list(text);
    }

    auto write_graph(const Graph & g, GraphFormat format) -> string
    {
        if (format == GraphFormat::Graph6)
            return encode_graph6(g) + "\n";
        return write_edge_list(g);
    }

    auto content_hash(const Graph & g) -> string
    {
        std::uint64_t hash = 0xcbf29ce484222325ull;
        auto feed = [&] (const string & s) {
            for (unsigned char c : s) {
                hash ^= c;
                hash *= 0x100000001b3ull;
            }
        };
        // canonical text that does not require compact identifiers
        feed("n " + std::to_string(g.order()) + "\n");
        for (auto v : g.vertices())
            feed(std::to_string(v) + "\n");
        for (auto [u, v] : g.edges())
            feed(std::to_string(u) + " " + std::to_string(v) + "\n");
        char buffer[17];
        std::snprintf(buffer, sizeof(buffer), "%016llx", (unsigned long long)(hash));
        return buffer;
    }
}
