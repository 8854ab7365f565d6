/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/generators.hh>

#include <algorithm>
#include <functional>
#include <set>

using std::map;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace pathforge
{
    namespace
    {
        auto edge_name(Edge e) -> string
        {
            return to_string(e.first) + "-" + to_string(e.second);
        }

        auto path_edges(const vector<Vertex> & path, vector<Edge> & out) -> void
        {
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                out.push_back(make_edge(path[i], path[i + 1]));
        }

        auto check_edge_set(const Graph & host, const VertexSet & image, vector<Edge> expected,
                EmbeddingMode mode, vector<string> & problems) -> void
        {
            std::sort(expected.begin(), expected.end());
            expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
            for (auto [u, v] : expected)
                if (! host.adjacent(u, v))
                    problems.push_back("image edge " + to_string(u) + "-" + to_string(v) + " missing from host");
            if (mode == EmbeddingMode::Subgraph)
                return;
            for (auto v : image)
                if (! host.has_vertex(v)) {
                    problems.push_back("image vertex " + to_string(v) + " not in host");
                    return;
                }
            auto actual = induced_subgraph(host, image).edges();
            for (auto & e : actual)
                if (! std::binary_search(expected.begin(), expected.end(), e))
                    problems.push_back("host edge " + edge_name(e) + " inside the image is not an image edge");
            if (mode == EmbeddingMode::Exact && image != host.vertices())
                problems.push_back("image does not cover the host");
        }
    }

    auto SubdivisionCert::original_vertices() const -> VertexSet
    {
        vector<Vertex> result;
        for (auto & [b, h] : branch_map)
            result.push_back(h);
        return make_vertex_set(std::move(result));
    }

    auto SubdivisionCert::image_vertices() const -> VertexSet
    {
        vector<Vertex> result;
        for (auto & [b, h] : branch_map)
            result.push_back(h);
        for (auto & [e, p] : path_map)
            result.insert(result.end(), p.begin(), p.end());
        return make_vertex_set(std::move(result));
    }

    auto SubdivisionCert::image_edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (auto & [e, p] : path_map)
            path_edges(p, result);
        std::sort(result.begin(), result.end());
        return result;
    }

    auto validate_subdivision(const Graph & host, const SubdivisionCert & cert, EmbeddingMode mode) -> vector<string>
    {
        vector<string> problems;
        set<Vertex> images;
        for (auto b : cert.base.vertices()) {
            auto it = cert.branch_map.find(b);
            if (it == cert.branch_map.end()) {
                problems.push_back("base vertex " + to_string(b) + " has no image");
                continue;
            }
            if (! host.has_vertex(it->second))
                problems.push_back("image of " + to_string(b) + " is not a host vertex");
            if (! images.insert(it->second).second)
                problems.push_back("image " + to_string(it->second) + " used twice");
        }
        if (cert.branch_map.size() != cert.base.order())
            problems.push_back("branch map has entries for non-base vertices");

        auto base_edges = cert.base.edges();
        if (cert.path_map.size() != base_edges.size())
            problems.push_back("path map size differs from the base edge count");

        set<Vertex> internal;
        for (auto e : base_edges) {
            auto it = cert.path_map.find(e);
            if (it == cert.path_map.end()) {
                problems.push_back("base edge " + edge_name(e) + " has no path");
                continue;
            }
            auto & p = it->second;
            if (p.size() < 2) {
                problems.push_back("path for " + edge_name(e) + " is too short");
                continue;
            }
            auto bu = cert.branch_map.find(e.first), bv = cert.branch_map.find(e.second);
            if (bu == cert.branch_map.end() || bv == cert.branch_map.end())
                continue;
            if (p.front() != bu->second || p.back() != bv->second)
                problems.push_back("path for " + edge_name(e) + " does not join the two images");
            for (std::size_t i = 1; i + 1 < p.size(); ++i) {
                if (images.count(p[i]))
                    problems.push_back("path for " + edge_name(e) + " passes through an original vertex");
                if (! internal.insert(p[i]).second)
                    problems.push_back("internal vertex " + to_string(p[i]) + " shared between paths");
            }
        }
        for (auto & [e, p] : cert.path_map)
            if (! cert.base.adjacent(e.first, e.second))
                problems.push_back("path given for non-edge " + edge_name(e));

        if (! problems.empty())
            return problems;
        check_edge_set(host, cert.image_vertices(), cert.image_edges(), mode, problems);
        return problems;
    }

    auto complete_binary_tree(int k) -> RootedTree
    {
        if (k < 0)
            throw GraphError{"height must be non-negative"};
        std::size_t n = (std::size_t{1} << (k + 1)) - 1;
        vector<Edge> edges;
        for (std::size_t i = 1; i < n; ++i)
            edges.emplace_back(Vertex((i - 1) / 2), Vertex(i));
        return RootedTree{Graph::from_edges(n, edges), 0};
    }

    auto binary_tree_plus(int k) -> RootedTree
    {
        if (k < 0)
            throw GraphError{"height must be non-negative"};
        auto t = complete_binary_tree(k + 1);
        auto edges = t.graph().edges();
        Vertex extra = Vertex(t.order());
        edges.emplace_back(0, extra);
        return RootedTree{Graph::from_edges(t.order() + 1, edges), 0};
    }

    auto binary_tree_plus_core(int k) -> VertexSet
    {
        VertexSet result((std::size_t{1} << (k + 1)) - 1);
        for (std::size_t i = 0; i < result.size(); ++i)
            result[i] = Vertex(i);
        return result;
    }

    auto k_ary_tree(int k) -> RootedTree
    {
        if (k < 1)
            throw GraphError{"k-ary tree needs k >= 1"};
        vector<Edge> edges;
        vector<Vertex> level{0};
        Vertex next = 1;
        for (int d = 0; d < k; ++d) {
            vector<Vertex> below;
            for (auto v : level)
                for (int c = 0; c < k; ++c) {
                    edges.emplace_back(v, next);
                    below.push_back(next++);
                }
            level = std::move(below);
        }
        return RootedTree{Graph::from_edges(std::size_t(next), edges), 0};
    }

    auto path_graph(int n) -> Graph
    {
        vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        return Graph::from_edges(std::size_t(std::max(n, 0)), edges);
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw GraphError{"cycles need at least 3 vertices"};
        auto edges = path_graph(n).edges();
        edges.emplace_back(0, n - 1);
        return Graph::from_edges(std::size_t(n), edges);
    }

    auto complete_graph(int n) -> Graph
    {
        vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                edges.emplace_back(i, j);
        return Graph::from_edges(std::size_t(std::max(n, 0)), edges);
    }

    auto complete_bipartite_graph(int a, int b) -> Graph
    {
        vector<Edge> edges;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                edges.emplace_back(i, a + j);
        return Graph::from_edges(std::size_t(a + b), edges);
    }

    auto star_graph(int leaves) -> Graph
    {
        return complete_bipartite_graph(1, leaves);
    }

    auto claw_graph() -> Graph
    {
        return star_graph(3);
    }

    auto net_graph() -> Graph
    {
        return semi_fork_graph(1, 1, 1);
    }

    auto fork_graph(int a, int b, int c) -> Graph
    {
        if (a < 1 || b < 1 || c < 1)
            throw GraphError{"fork arms need length >= 1"};
        GraphBuilder builder;
        builder.add_vertex(0);
        Vertex next = 1;
        for (int len : {a, b, c}) {
            Vertex prev = 0;
            for (int i = 0; i < len; ++i) {
                builder.add_edge(prev, next);
                prev = next++;
            }
        }
        return builder.build();
    }

    auto semi_fork_graph(int a, int b, int c) -> Graph
    {
        if (a < 0 || b < 0 || c < 0)
            throw GraphError{"semi-fork pendant paths need length >= 0"};
        GraphBuilder builder;
        builder.add_edge(0, 1).add_edge(1, 2).add_edge(0, 2);
        Vertex next = 3;
        Vertex corner = 0;
        for (int len : {a, b, c}) {
            Vertex prev = corner++;
            for (int i = 0; i < len; ++i) {
                builder.add_edge(prev, next);
                prev = next++;
            }
        }
        return builder.build();
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        GraphBuilder builder;
        Vertex shift = a.next_free_id() - (b.empty() ? 0 : b.vertices().front());
        for (auto v : a.vertices())
            builder.add_vertex(v);
        for (auto [u, v] : a.edges())
            builder.add_edge(u, v);
        for (auto v : b.vertices())
            builder.add_vertex(v + shift);
        for (auto [u, v] : b.edges())
            builder.add_edge(u + shift, v + shift);
        return builder.build();
    }

    auto subdivide(const Graph & base, const map<Edge, int> & lengths) -> Subdivided
    {
        Subdivided result;
        result.cert.base = base;
        GraphBuilder builder;
        for (auto v : base.vertices()) {
            builder.add_vertex(v);
            result.cert.branch_map.emplace(v, v);
        }
        Vertex next = base.next_free_id();
        for (auto e : base.edges()) {
            int len = 1;
            if (! lengths.empty()) {
                auto it = lengths.find(e);
                if (it == lengths.end())
                    throw GraphError{"no subdivision length for edge " + edge_name(e)};
                len = it->second;
            }
            if (len < 1)
                throw GraphError{"subdivision length must be at least 1"};
            vector<Vertex> path{e.first};
            for (int i = 1; i < len; ++i)
                path.push_back(next++);
            path.push_back(e.second);
            builder.add_path(path);
            result.cert.path_map.emplace(e, std::move(path));
        }
        result.graph = builder.build();
        return result;
    }

    auto subdivide_uniform(const Graph & base, int length) -> Subdivided
    {
        map<Edge, int> lengths;
        for (auto e : base.edges())
            lengths.emplace(e, length);
        return subdivide(base, lengths);
    }

    auto net_graph_replacement(const Graph & g, Vertex v) -> NetReplacement
    {
        auto nbrs = g.neighbours(v);
        if (nbrs.size() != 3)
            throw GraphError{"net graph replacement needs a degree-3 vertex, " + to_string(v) + " has degree " + to_string(nbrs.size())};
        NetReplacement r;
        r.a = nbrs[0];
        r.b = nbrs[1];
        r.c = nbrs[2];
        r.x = g.next_free_id();
        r.y = r.x + 1;
        r.z = r.x + 2;

        GraphBuilder builder;
        for (auto w : g.vertices())
            if (w != v)
                builder.add_vertex(w);
        for (auto [p, q] : g.edges())
            if (p != v && q != v)
                builder.add_edge(p, q);
        builder.add_edge(r.x, r.y).add_edge(r.y, r.z).add_edge(r.z, r.x);
        builder.add_edge(r.x, r.a).add_edge(r.y, r.b).add_edge(r.z, r.c);
        r.graph = builder.build();
        return r;
    }

    auto WattleCertificate::image_vertices() const -> VertexSet
    {
        vector<Vertex> result;
        for (auto & [b, h] : branch_map)
            result.insert(result.end(), h.begin(), h.end());
        for (auto & [e, p] : path_map)
            result.insert(result.end(), p.begin(), p.end());
        return make_vertex_set(std::move(result));
    }

    auto WattleCertificate::image_edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (auto & [e, p] : path_map)
            path_edges(p, result);
        for (auto & [b, h] : branch_map)
            if (h.size() == 3) {
                result.push_back(make_edge(h[0], h[1]));
                result.push_back(make_edge(h[1], h[2]));
                result.push_back(make_edge(h[0], h[2]));
            }
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }

    auto WattleCertificate::attachment(Vertex u, Vertex w) const -> Vertex
    {
        auto & p = path_map.at(make_edge(u, w));
        return u < w ? p.front() : p.back();
    }

    auto validate_wattle(const WattleCertificate & w, EmbeddingMode mode) -> vector<string>
    {
        vector<string> problems;
        auto & base = w.base.graph();

        for (auto t : w.triangles)
            if (! base.has_vertex(t) || base.degree(t) != 3)
                problems.push_back("triangle at " + to_string(t) + " which is not a degree-3 base vertex");

        set<Vertex> images;
        for (auto b : base.vertices()) {
            auto it = w.branch_map.find(b);
            if (it == w.branch_map.end()) {
                problems.push_back("base vertex " + to_string(b) + " has no image");
                continue;
            }
            bool tri = std::binary_search(w.triangles.begin(), w.triangles.end(), b);
            if (it->second.size() != (tri ? 3u : 1u))
                problems.push_back("image of " + to_string(b) + " has the wrong size");
            for (auto h : it->second)
                if (! images.insert(h).second)
                    problems.push_back("host vertex " + to_string(h) + " used by two branch images");
        }

        map<Vertex, int> attach_uses;
        set<Vertex> internal;
        for (auto e : base.edges()) {
            auto it = w.path_map.find(e);
            if (it == w.path_map.end()) {
                problems.push_back("base edge " + edge_name(e) + " has no path");
                continue;
            }
            auto & p = it->second;
            if (p.size() < 2) {
                problems.push_back("path for " + edge_name(e) + " is too short");
                continue;
            }
            auto bu = w.branch_map.find(e.first), bv = w.branch_map.find(e.second);
            if (bu == w.branch_map.end() || bv == w.branch_map.end())
                continue;
            auto in = [] (const vector<Vertex> & s, Vertex x) { return std::find(s.begin(), s.end(), x) != s.end(); };
            if (! in(bu->second, p.front()) || ! in(bv->second, p.back()))
                problems.push_back("path for " + edge_name(e) + " does not join the two images");
            ++attach_uses[p.front()];
            ++attach_uses[p.back()];
            for (std::size_t i = 1; i + 1 < p.size(); ++i) {
                if (images.count(p[i]))
                    problems.push_back("path for " + edge_name(e) + " passes through a branch image");
                if (! internal.insert(p[i]).second)
                    problems.push_back("internal vertex " + to_string(p[i]) + " shared between paths");
            }
        }
        if (w.path_map.size() != base.size())
            problems.push_back("path map size differs from the base edge count");
        for (auto t : w.triangles)
            if (auto it = w.branch_map.find(t); it != w.branch_map.end())
                for (auto h : it->second)
                    if (attach_uses[h] != 1)
                        problems.push_back("triangle vertex " + to_string(h) + " is not the end of exactly one path");

        if (! problems.empty())
            return problems;
        check_edge_set(w.host, w.image_vertices(), w.image_edges(), mode, problems);
        return problems;
    }

    auto wattle(int k, const map<Edge, int> & lengths, const VertexSet & triangles) -> WattleCertificate
    {
        auto tree = complete_binary_tree(k);
        for (auto t : triangles)
            if (! tree.graph().has_vertex(t) || tree.graph().degree(t) != 3)
                throw GraphError{"wattle triangle at " + to_string(t) + ": only degree-3 vertices of T_k qualify"};

        auto sub = subdivide(tree.graph(), lengths);
        Graph host = sub.graph;
        map<Vertex, vector<Vertex>> branch_map;
        for (auto v : tree.graph().vertices())
            branch_map[v] = {v};
        auto paths = sub.cert.path_map;

        for (auto t : triangles) {
            auto r = net_graph_replacement(host, t);
            for (auto & [e, p] : paths) {
                if (e.first != t && e.second != t)
                    continue;
                bool front = p.front() == t;
                Vertex next_to = front ? p[1] : p[p.size() - 2];
                Vertex corner = next_to == r.a ? r.x : next_to == r.b ? r.y : r.z;
                (front ? p.front() : p.back()) = corner;
            }
            branch_map[t] = {r.x, r.y, r.z};
            host = std::move(r.graph);
        }

        auto renamed = compact(host);
        auto rename = [&] (Vertex v) { return renamed.renamed.at(v); };
        WattleCertificate result{tree, triangles, renamed.graph, {}, {}};
        for (auto & [b, h] : branch_map) {
            vector<Vertex> image;
            for (auto v : h)
                image.push_back(rename(v));
            result.branch_map.emplace(b, std::move(image));
        }
        for (auto & [e, p] : paths) {
            vector<Vertex> path;
            for (auto v : p)
                path.push_back(rename(v));
            result.path_map.emplace(e, std::move(path));
        }
        return result;
    }

    auto hat_tree(int k) -> HatTree
    {
        if (k < 1)
            throw GraphError{"hat tree needs k >= 1"};
        auto base = complete_binary_tree(2 * k);

        map<Vertex, int> preorder;
        std::function<void (Vertex)> visit = [&] (Vertex v) {
            int index = int(preorder.size());
            preorder.emplace(v, index);
            for (auto c : base.children(v))
                visit(c);
        };
        visit(base.root());

        map<Edge, int> lengths;
        for (auto e : base.graph().edges()) {
            auto [p, c] = base.depth(e.first) < base.depth(e.second) ? e : Edge{e.second, e.first};
            lengths.emplace(e, 3 * (preorder.at(c) - preorder.at(p)));
        }
        auto sub = subdivide(base.graph(), lengths);

        HatTree result;
        result.base = base;
        result.branch_vertices = base.graph().vertices();
        result.layering = bfs_layering(sub.graph, base.root(), true);
        result.cert = sub.cert;

        GraphBuilder builder;
        for (auto v : sub.graph.vertices())
            builder.add_vertex(v);
        for (auto [u, v] : sub.graph.edges())
            builder.add_edge(u, v);
        for (auto u : result.branch_vertices) {
            auto & layer = result.layering.layers.at(std::size_t(3 * preorder.at(u)));
            for (auto y : layer)
                if (y != u)
                    builder.add_edge(u, y);
        }
        result.graph = builder.build();
        return result;
    }
}
