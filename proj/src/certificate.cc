/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/certificate.hh>
#include <pathforge/io.hh>

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

using std::map;
using std::string;
using std::to_string;
using std::vector;

namespace pathforge
{
    namespace
    {
        const string header = "pathforge-certificate v1";

        auto join(const vector<Vertex> & vs) -> string
        {
            string out;
            for (auto v : vs)
                out += (out.empty() ? "" : " ") + to_string(v);
            return out;
        }

        auto flag(bool b) -> string { return b ? "1" : "0"; }

        // Whitespace tokens with ':' treated as a separator.
        auto tokens(const string & line) -> vector<string>
        {
            string spaced = line;
            std::replace(spaced.begin(), spaced.end(), ':', ' ');
            std::istringstream in{spaced};
            vector<string> out;
            for (string t; in >> t; )
                out.push_back(t);
            return out;
        }

        struct BodyError
        {
            string message;
        };

        // Walks body entries, turning BodyError into ParseError with the
        // source line.
        template <typename F_>
        auto each_line(const CertificateFile & c, F_ && f) -> void
        {
            for (std::size_t i = 0; i < c.body.size(); ++i) {
                try {
                    f(tokens(c.body[i]));
                }
                catch (const BodyError & e) {
                    int line = i < c.body_lines.size() ? c.body_lines[i] : 0;
                    throw ParseError{line, e.message + (line == 0 ? " in body entry " + to_string(i + 1) : "")};
                }
            }
        }

        auto number(const string & s) -> long
        {
            try {
                std::size_t used = 0;
                long v = std::stol(s, &used);
                if (used != s.size())
                    throw BodyError{"bad number '" + s + "'"};
                return v;
            }
            catch (const std::logic_error &) {
                throw BodyError{"bad number '" + s + "'"};
            }
        }

        auto numbers(const vector<string> & ts, std::size_t from) -> vector<Vertex>
        {
            vector<Vertex> out;
            for (auto i = from; i < ts.size(); ++i)
                out.push_back(Vertex(number(ts[i])));
            return out;
        }

        auto path_lines(const map<Edge, vector<Vertex>> & paths) -> vector<string>
        {
            vector<string> out;
            for (auto & [e, p] : paths)
                out.push_back("path " + to_string(e.first) + " " + to_string(e.second) + ": " + join(p));
            return out;
        }
    }

    auto CertificateFile::hash_of(const string & role) const -> string
    {
        for (auto & [r, h] : graphs)
            if (r == role)
                return h;
        throw GraphError{"certificate has no graph with role " + role};
    }

    auto certificate_for(const Graph & host, const PathDecomposition & pd) -> CertificateFile
    {
        CertificateFile c{"path-decomposition", {{"host", content_hash(host)}}, {"width " + to_string(pd.width())}};
        for (auto & bag : pd.bags)
            c.body.push_back("bag: " + join(bag));
        return c;
    }

    auto certificate_for(const MinorModel & m) -> CertificateFile
    {
        CertificateFile c{"minor-model", {{"pattern", content_hash(m.pattern)}, {"host", content_hash(m.host)}},
            {"induced " + flag(m.induced)}};
        for (auto & [p, xs] : m.branch_sets)
            c.body.push_back("set " + to_string(p) + ": " + join(xs));
        return c;
    }

    auto certificate_for(const Embedding & e) -> CertificateFile
    {
        CertificateFile c{"embedding", {{"pattern", content_hash(e.pattern)}, {"host", content_hash(e.host)}},
            {"induced " + flag(e.induced)}};
        for (auto & [p, h] : e.map)
            c.body.push_back("map " + to_string(p) + " " + to_string(h));
        return c;
    }

    auto certificate_for(const SubdivisionEmbedding & e) -> CertificateFile
    {
        CertificateFile c{"subdivision", {{"base", content_hash(e.cert.base)}, {"host", content_hash(e.host)}},
            {"induced " + flag(e.induced)}};
        for (auto & [b, h] : e.cert.branch_map)
            c.body.push_back("branch " + to_string(b) + " " + to_string(h));
        auto paths = path_lines(e.cert.path_map);
        c.body.insert(c.body.end(), paths.begin(), paths.end());
        return c;
    }

    auto certificate_for(const WattleCertificate & w) -> CertificateFile
    {
        CertificateFile c{"wattle", {{"host", content_hash(w.host)}},
            {"height " + to_string(w.base.height()), "triangles: " + join(w.triangles)}};
        for (auto & [b, hs] : w.branch_map)
            c.body.push_back("branch " + to_string(b) + ": " + join(hs));
        auto paths = path_lines(w.path_map);
        c.body.insert(c.body.end(), paths.begin(), paths.end());
        return c;
    }

    auto certificate_for(const Graph & host, const Distance5Partition & p) -> CertificateFile
    {
        CertificateFile c{"partition", {{"host", content_hash(host)}}, {}};
        for (auto & cls : p.classes)
            c.body.push_back("class: " + join(cls));
        return c;
    }

    auto certificate_for(const LineGraphEmbedding & e) -> CertificateFile
    {
        auto base_height = [&] {
            int h = 0;
            while ((std::size_t{1} << (h + 1)) - 1 < e.tree.cert.base.order())
                ++h;
            return h;
        }();
        CertificateFile c{"line-graph", {{"host", content_hash(e.host)}}, {"height " + to_string(base_height)}};
        for (auto & [edge, p] : e.tree.cert.path_map)
            c.body.push_back("length " + to_string(edge.first) + " " + to_string(edge.second) + " " + to_string(p.size() - 1));
        for (auto & [f, h] : e.edge_image)
            c.body.push_back("edge " + to_string(f.first) + " " + to_string(f.second) + " " + to_string(h));
        return c;
    }

    auto write_certificate(std::ostream & out, const CertificateFile & c) -> void
    {
        out << header << '\n' << "kind " << c.kind << '\n';
        for (auto & [role, hash] : c.graphs)
            out << "graph " << role << ' ' << hash << '\n';
        for (auto & line : c.body)
            out << line << '\n';
        out << "end\n";
    }

    auto to_string(const CertificateFile & c) -> string
    {
        std::ostringstream out;
        write_certificate(out, c);
        return out.str();
    }

    auto parse_certificate(std::istream & in) -> CertificateFile
    {
        CertificateFile c;
        int line_no = 0;
        enum { Header, Kind, Graphs, Body, Done } state = Header;
        for (string line; std::getline(in, line); ) {
            ++line_no;
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty() || line[0] == '#')
                continue;
            auto ts = tokens(line);
            switch (state) {
                case Header:
                    if (line != header)
                        throw ParseError{line_no, "expected '" + header + "'"};
                    state = Kind;
                    break;
                case Kind:
                    if (ts.size() != 2 || ts[0] != "kind")
                        throw ParseError{line_no, "expected 'kind <name>'"};
                    c.kind = ts[1];
                    state = Graphs;
                    break;
                case Graphs:
                    if (! ts.empty() && ts[0] == "graph") {
                        if (ts.size() != 3)
                            throw ParseError{line_no, "expected 'graph <role> <hash>'"};
                        c.graphs.emplace_back(ts[1], ts[2]);
                        break;
                    }
                    state = Body;
                    [[fallthrough]];
                case Body:
                    if (line == "end")
                        state = Done;
                    else {
                        c.body.push_back(line);
                        c.body_lines.push_back(line_no);
                    }
                    break;
                case Done:
                    throw ParseError{line_no, "text after 'end'"};
            }
        }
        if (state != Done)
            throw ParseError{line_no, "missing 'end' line"};
        if (c.graphs.empty())
            throw ParseError{line_no, "certificate references no graph"};
        return c;
    }

    namespace
    {
        auto require_kind(const CertificateFile & c, const string & kind) -> void
        {
            if (c.kind != kind)
                throw ParseError{0, "expected a " + kind + " certificate, not " + c.kind};
        }

        auto read_height(long height) -> int
        {
            if (height < 0 || height > 24)
                throw ParseError{0, "missing or unreasonable height"};
            return int(height);
        }

        auto read_decomposition(const CertificateFile & c, long & claimed) -> PathDecomposition
        {
            PathDecomposition pd;
            each_line(c, [&] (const vector<string> & ts) {
                if (ts.size() == 2 && ts[0] == "width")
                    claimed = number(ts[1]);
                else if (! ts.empty() && ts[0] == "bag")
                    pd.bags.push_back(make_vertex_set(numbers(ts, 1)));
                else
                    throw BodyError{"unexpected line"};
            });
            return pd;
        }

        auto read_embedding(const CertificateFile & c, const Graph & pattern, const Graph & host) -> Embedding
        {
            Embedding e{pattern, host, {}, false};
            each_line(c, [&] (const vector<string> & ts) {
                if (ts.size() == 2 && ts[0] == "induced")
                    e.induced = number(ts[1]) != 0;
                else if (ts.size() == 3 && ts[0] == "map")
                    e.map[Vertex(number(ts[1]))] = Vertex(number(ts[2]));
                else
                    throw BodyError{"unexpected line"};
            });
            return e;
        }

        auto read_subdivision(const CertificateFile & c, const Graph & base, const Graph & host) -> SubdivisionEmbedding
        {
            SubdivisionEmbedding e{host, SubdivisionCert{base, {}, {}}, false};
            each_line(c, [&] (const vector<string> & ts) {
                if (ts.size() == 2 && ts[0] == "induced")
                    e.induced = number(ts[1]) != 0;
                else if (ts.size() == 3 && ts[0] == "branch")
                    e.cert.branch_map[Vertex(number(ts[1]))] = Vertex(number(ts[2]));
                else if (ts.size() >= 3 && ts[0] == "path")
                    e.cert.path_map[make_edge(Vertex(number(ts[1])), Vertex(number(ts[2])))] = numbers(ts, 3);
                else
                    throw BodyError{"unexpected line"};
            });
            return e;
        }

        auto read_partition(const CertificateFile & c) -> vector<VertexSet>
        {
            vector<VertexSet> classes;
            each_line(c, [&] (const vector<string> & ts) {
                if (ts.empty() || ts[0] != "class")
                    throw BodyError{"unexpected line"};
                classes.push_back(make_vertex_set(numbers(ts, 1)));
            });
            return classes;
        }

        auto read_line_graph(const CertificateFile & c, const Graph & host) -> LineGraphEmbedding
        {
            long height = -1;
            map<Edge, int> lengths;
            map<Edge, Vertex> image;
            each_line(c, [&] (const vector<string> & ts) {
                if (ts.size() == 2 && ts[0] == "height")
                    height = number(ts[1]);
                else if (ts.size() == 4 && ts[0] == "length")
                    lengths[make_edge(Vertex(number(ts[1])), Vertex(number(ts[2])))] = int(number(ts[3]));
                else if (ts.size() == 4 && ts[0] == "edge")
                    image[make_edge(Vertex(number(ts[1])), Vertex(number(ts[2])))] = Vertex(number(ts[3]));
                else
                    throw BodyError{"unexpected line"};
            });
            auto base = complete_binary_tree(read_height(height)).graph();
            return LineGraphEmbedding{host, subdivide(base, lengths), image};
        }

        auto partition_problems(const Graph & host, const vector<VertexSet> & classes) -> vector<string>
        {
            vector<string> problems;
            map<Vertex, int> seen;
            for (auto & cls : classes) {
                for (auto v : cls)
                    if (! host.has_vertex(v))
                        problems.push_back("vertex " + to_string(v) + " is not in the host");
                    else if (seen[v]++)
                        problems.push_back("vertex " + to_string(v) + " lies in two classes");
                if (problems.empty() && ! pairwise_distance_at_least(host, cls, 5))
                    problems.push_back("a class has two vertices closer than distance 5");
            }
            if (seen.size() != host.order())
                problems.push_back("classes do not cover the host");
            return problems;
        }
    }

    auto read_minor_model(const CertificateFile & c, const Graph & pattern, const Graph & host) -> MinorModel
    {
        require_kind(c, "minor-model");
        MinorModel m{pattern, host, {}, false};
        each_line(c, [&] (const vector<string> & ts) {
            if (ts.size() == 2 && ts[0] == "induced")
                m.induced = number(ts[1]) != 0;
            else if (ts.size() >= 2 && ts[0] == "set")
                m.branch_sets[Vertex(number(ts[1]))] = make_vertex_set(numbers(ts, 2));
            else
                throw BodyError{"unexpected line"};
        });
        return m;
    }

    auto read_wattle(const CertificateFile & c, const Graph & host) -> WattleCertificate
    {
        require_kind(c, "wattle");
        long height = -1;
        vector<Vertex> triangles;
        map<Vertex, vector<Vertex>> branch;
        map<Edge, vector<Vertex>> paths;
        each_line(c, [&] (const vector<string> & ts) {
            if (ts.size() == 2 && ts[0] == "height")
                height = number(ts[1]);
            else if (! ts.empty() && ts[0] == "triangles")
                triangles = numbers(ts, 1);
            else if (ts.size() >= 2 && ts[0] == "branch")
                branch[Vertex(number(ts[1]))] = numbers(ts, 2);
            else if (ts.size() >= 3 && ts[0] == "path")
                paths[make_edge(Vertex(number(ts[1])), Vertex(number(ts[2])))] = numbers(ts, 3);
            else
                throw BodyError{"unexpected line"};
        });
        return WattleCertificate{complete_binary_tree(read_height(height)), make_vertex_set(triangles), host, branch, paths};
    }

    auto verify_certificate(const CertificateFile & c, const vector<Graph> & graphs) -> vector<string>
    {
        static const map<string, vector<string>> roles{
            {"path-decomposition", {"host"}},
            {"minor-model", {"pattern", "host"}},
            {"embedding", {"pattern", "host"}},
            {"subdivision", {"base", "host"}},
            {"wattle", {"host"}},
            {"partition", {"host"}},
            {"line-graph", {"host"}}};
        auto needed = roles.find(c.kind);
        if (needed == roles.end())
            return {"unknown certificate kind '" + c.kind + "'"};

        map<string, const Graph *> by_role;
        vector<string> problems;
        for (auto & [role, hash] : c.graphs) {
            const Graph * match = nullptr;
            for (auto & g : graphs)
                if (content_hash(g) == hash) {
                    match = &g;
                    break;
                }
            if (! match)
                problems.push_back("no supplied graph has hash " + hash + " (role " + role + ")");
            else
                by_role[role] = match;
        }
        for (auto & r : needed->second)
            if (! by_role.count(r) && std::none_of(c.graphs.begin(), c.graphs.end(), [&] (auto & p) { return p.first == r; }))
                problems.push_back("certificate lacks a '" + r + "' graph");
        if (! problems.empty())
            return problems;

        auto & host = *by_role.at("host");
        try {
            if (c.kind == "path-decomposition") {
                long claimed = -2;
                auto pd = read_decomposition(c, claimed);
                problems = validate_path_decomposition(host, pd);
                if (claimed != pd.width())
                    problems.push_back("stated width " + to_string(claimed) + " differs from " + to_string(pd.width()));
            }
            else if (c.kind == "minor-model") {
                for (auto & p : validate_model(read_minor_model(c, *by_role.at("pattern"), host)))
                    problems.push_back(p.detail);
            }
            else if (c.kind == "embedding")
                problems = validate_embedding(read_embedding(c, *by_role.at("pattern"), host));
            else if (c.kind == "subdivision")
                problems = validate_subdivision_embedding(read_subdivision(c, *by_role.at("base"), host));
            else if (c.kind == "wattle")
                problems = validate_wattle(read_wattle(c, host), EmbeddingMode::Induced);
            else if (c.kind == "partition")
                problems = partition_problems(host, read_partition(c));
            else if (c.kind == "line-graph")
                problems = validate_line_graph_embedding(read_line_graph(c, host));
        }
        catch (const ParseError & e) {
            problems.push_back(e.what());
        }
        catch (const GraphError & e) {
            problems.push_back(e.what());
        }
        return problems;
    }
}
