/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/graph.hh>

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

using std::deque;
using std::optional;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace pathforge
{
    auto make_edge(Vertex u, Vertex v) -> Edge
    {
        return u < v ? Edge{u, v} : Edge{v, u};
    }

    auto make_vertex_set(vector<Vertex> vertices) -> VertexSet
    {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        return vertices;
    }

    auto Graph::from_edges(vector<Vertex> vertices, const vector<Edge> & edges) -> Graph
    {
        Graph g;
        std::sort(vertices.begin(), vertices.end());
        if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
            throw GraphError{"duplicate vertex identifier"};
        g._vertices = std::move(vertices);
        g._adjacency.resize(g._vertices.size());
        for (auto [u, v] : edges) {
            if (u == v)
                throw GraphError{"self-loop at vertex " + to_string(u)};
            auto iu = g.index_of(u), iv = g.index_of(v);
            if (iu == no_index || iv == no_index)
                throw GraphError{"edge " + to_string(u) + " " + to_string(v) + " has an unknown endpoint"};
            g._adjacency[iu].push_back(v);
            g._adjacency[iv].push_back(u);
        }
        for (auto & a : g._adjacency) {
            std::sort(a.begin(), a.end());
            if (std::adjacent_find(a.begin(), a.end()) != a.end())
                throw GraphError{"parallel edge"};
            g._size += a.size();
        }
        g._size /= 2;
        return g;
    }

    auto Graph::from_edges(std::size_t n, const vector<Edge> & edges) -> Graph
    {
        vector<Vertex> vertices(n);
        std::iota(vertices.begin(), vertices.end(), 0);
        return from_edges(std::move(vertices), edges);
    }

    auto Graph::index_of(Vertex v) const -> std::size_t
    {
        auto it = std::lower_bound(_vertices.begin(), _vertices.end(), v);
        if (it == _vertices.end() || *it != v)
            return no_index;
        return std::size_t(it - _vertices.begin());
    }

    auto Graph::neighbours(Vertex v) const -> span<const Vertex>
    {
        auto i = index_of(v);
        if (i == no_index)
            throw GraphError{"unknown vertex " + to_string(v)};
        return _adjacency[i];
    }

    auto Graph::adjacent(Vertex u, Vertex v) const -> bool
    {
        auto i = index_of(u);
        if (i == no_index)
            return false;
        return std::binary_search(_adjacency[i].begin(), _adjacency[i].end(), v);
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_size);
        for (std::size_t i = 0; i < _vertices.size(); ++i)
            for (auto w : _adjacency[i])
                if (_vertices[i] < w)
                    result.emplace_back(_vertices[i], w);
        return result;
    }

    auto Graph::max_degree() const -> std::size_t
    {
        std::size_t result = 0;
        for (auto & a : _adjacency)
            result = std::max(result, a.size());
        return result;
    }

    auto GraphBuilder::add_vertex(Vertex v) -> GraphBuilder &
    {
        _vertices.push_back(v);
        return *this;
    }

    auto GraphBuilder::add_edge(Vertex u, Vertex v) -> GraphBuilder &
    {
        if (u == v)
            throw GraphError{"self-loop at vertex " + to_string(u)};
        _vertices.push_back(u);
        _vertices.push_back(v);
        _edges.push_back(make_edge(u, v));
        return *this;
    }

    auto GraphBuilder::add_path(span<const Vertex> path) -> GraphBuilder &
    {
        for (auto v : path)
            add_vertex(v);
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            add_edge(path[i], path[i + 1]);
        return *this;
    }

    auto GraphBuilder::build() const -> Graph
    {
        auto edges = _edges;
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        return Graph::from_edges(make_vertex_set(_vertices), edges);
    }

    auto Layering::layer_of(Vertex v) const -> int
    {
        for (std::size_t i = 0; i < layers.size(); ++i)
            if (std::binary_search(layers[i].begin(), layers[i].end(), v))
                return int(i);
        return -1;
    }

    RootedTree::RootedTree(Graph graph, Vertex root) :
        _graph(std::move(graph)),
        _root(root)
    {
        auto n = _graph.order();
        auto r = _graph.index_of(root);
        if (r == no_index)
            throw GraphError{"root " + to_string(root) + " is not a vertex"};
        if (_graph.size() + 1 != n)
            throw GraphError{"rooted tree needs |E| = |V| - 1"};

        _parent.assign(n, root);
        _depth.assign(n, -1);
        _children.assign(n, {});
        _entry.assign(n, 0);
        _exit.assign(n, 0);

        // iterative DFS, children in ascending order
        int clock = 0;
        vector<std::pair<std::size_t, std::size_t>> stack{{r, 0}};
        _depth[r] = 0;
        _entry[r] = clock++;
        while (! stack.empty()) {
            auto & [i, next] = stack.back();
            auto nbrs = _graph.neighbours_by_index(i);
            if (next == nbrs.size()) {
                _exit[i] = clock++;
                stack.pop_back();
                continue;
            }
            Vertex w = nbrs[next++];
            auto j = _graph.index_of(w);
            if (_depth[j] != -1)
                continue;
            _depth[j] = _depth[i] + 1;
            _parent[j] = _graph.vertices()[i];
            _children[i].push_back(w);
            _entry[j] = clock++;
            stack.emplace_back(j, 0);
        }
        if (std::find(_depth.begin(), _depth.end(), -1) != _depth.end())
            throw GraphError{"rooted tree is not connected"};
    }

    auto RootedTree::parent(Vertex v) const -> optional<Vertex>
    {
        auto i = _graph.index_of(v);
        if (i == no_index)
            throw GraphError{"unknown vertex " + to_string(v)};
        if (v == _root)
            return std::nullopt;
        return _parent[i];
    }

    auto RootedTree::children(Vertex v) const -> span<const Vertex>
    {
        auto i = _graph.index_of(v);
        if (i == no_index)
            throw GraphError{"unknown vertex " + to_string(v)};
        return _children[i];
    }

    auto RootedTree::depth(Vertex v) const -> int
    {
        auto i = _graph.index_of(v);
        if (i == no_index)
            throw GraphError{"unknown vertex " + to_string(v)};
        return _depth[i];
    }

    auto RootedTree::height() const -> int
    {
        return _depth.empty() ? -1 : *std::max_element(_depth.begin(), _depth.end());
    }

    auto RootedTree::is_ancestor(Vertex u, Vertex v) const -> bool
    {
        auto i = _graph.index_of(u), j = _graph.index_of(v);
        if (i == no_index || j == no_index)
            return false;
        return _entry[i] <= _entry[j] && _exit[j] <= _exit[i];
    }

    auto RootedTree::left_child(Vertex v) const -> optional<Vertex>
    {
        auto c = children(v);
        if (c.empty())
            return std::nullopt;
        return c.front();
    }

    auto RootedTree::right_child(Vertex v) const -> optional<Vertex>
    {
        auto c = children(v);
        if (c.size() < 2)
            return std::nullopt;
        return c[1];
    }

    auto RootedTree::path(Vertex u, Vertex v) const -> vector<Vertex>
    {
        vector<Vertex> up, down;
        Vertex a = u, b = v;
        while (depth(a) > depth(b)) {
            up.push_back(a);
            a = *parent(a);
        }
        while (depth(b) > depth(a)) {
            down.push_back(b);
            b = *parent(b);
        }
        while (a != b) {
            up.push_back(a);
            down.push_back(b);
            a = *parent(a);
            b = *parent(b);
        }
        up.push_back(a);
        up.insert(up.end(), down.rbegin(), down.rend());
        return up;
    }

    auto RootedTree::subtree(Vertex v) const -> VertexSet
    {
        vector<Vertex> result, stack{v};
        while (! stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            result.push_back(x);
            for (auto c : children(x))
                stack.push_back(c);
        }
        return make_vertex_set(std::move(result));
    }

    auto RootedTree::descendants_at_depth(Vertex v, int d) const -> VertexSet
    {
        vector<Vertex> frontier{v};
        for (int i = 0; i < d; ++i) {
            vector<Vertex> next;
            for (auto x : frontier)
                for (auto c : children(x))
                    next.push_back(c);
            frontier = std::move(next);
        }
        return make_vertex_set(std::move(frontier));
    }

    auto distances_from(const Graph & g, Vertex source, int radius) -> vector<int>
    {
        vector<int> dist(g.order(), -1);
        auto s = g.index_of(source);
        if (s == no_index)
            throw GraphError{"unknown vertex " + to_string(source)};
        deque<std::size_t> queue{s};
        dist[s] = 0;
        while (! queue.empty()) {
            auto i = queue.front();
            queue.pop_front();
            if (radius >= 0 && dist[i] >= radius)
                continue;
            for (auto w : g.neighbours_by_index(i)) {
                auto j = g.index_of(w);
                if (dist[j] == -1) {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
            }
        }
        return dist;
    }

    auto bfs_layering(const Graph & g, Vertex root, bool require_connected) -> Layering
    {
        auto dist = distances_from(g, root);
        Layering result;
        result.root = root;
        for (std::size_t i = 0; i < g.order(); ++i) {
            if (dist[i] < 0) {
                if (require_connected)
                    throw GraphError{"graph is not connected"};
                continue;
            }
            if (std::size_t(dist[i]) >= result.layers.size())
                result.layers.resize(dist[i] + 1);
            result.layers[dist[i]].push_back(g.vertices()[i]);
        }
        return result;
    }

    auto girth(const Graph & g) -> optional<int>
    {
        int best = std::numeric_limits<int>::max();
        auto n = g.order();
        vector<int> dist(n), parent(n);
        for (std::size_t s = 0; s < n; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            dist[s] = 0;
            parent[s] = -1;
            deque<std::size_t> queue{s};
            while (! queue.empty()) {
                auto i = queue.front();
                queue.pop_front();
                // any cycle found from here on has length >= 2 dist
                if (2 * dist[i] >= best)
                    break;
                for (auto w : g.neighbours_by_index(i)) {
                    auto j = g.index_of(w);
                    if (dist[j] == -1) {
                        dist[j] = dist[i] + 1;
                        parent[j] = int(i);
                        queue.push_back(j);
                    }
                    else if (parent[i] != int(j))
                        best = std::min(best, dist[i] + dist[j] + 1);
                }
            }
        }
        if (best == std::numeric_limits<int>::max())
            return std::nullopt;
        return best;
    }

    auto line_graph(const Graph & g) -> LineGraph
    {
        LineGraph result;
        result.edge_of = g.edges();
        std::map<Edge, Vertex> id;
        for (std::size_t i = 0; i < result.edge_of.size(); ++i)
            id.emplace(result.edge_of[i], Vertex(i));

        vector<Edge> edges;
        for (auto v : g.vertices()) {
            auto nbrs = g.neighbours(v);
            for (std::size_t a = 0; a < nbrs.size(); ++a)
                for (std::size_t b = a + 1; b < nbrs.size(); ++b)
                    edges.push_back(make_edge(id.at(make_edge(v, nbrs[a])), id.at(make_edge(v, nbrs[b]))));
        }
        result.graph = Graph::from_edges(result.edge_of.size(), edges);
        return result;
    }

    auto induced_subgraph(const Graph & g, span<const Vertex> s) -> Graph
    {
        auto keep = make_vertex_set(vector<Vertex>(s.begin(), s.end()));
        vector<Edge> edges;
        for (auto v : keep) {
            if (! g.has_vertex(v))
                throw GraphError{"unknown vertex " + to_string(v)};
            for (auto w : g.neighbours(v))
                if (v < w && std::binary_search(keep.begin(), keep.end(), w))
                    edges.emplace_back(v, w);
        }
        return Graph::from_edges(std::move(keep), edges);
    }

    auto remove_vertices(const Graph & g, span<const Vertex> s) -> Graph
    {
        auto drop = make_vertex_set(vector<Vertex>(s.begin(), s.end()));
        vector<Vertex> keep;
        for (auto v : g.vertices())
            if (! std::binary_search(drop.begin(), drop.end(), v))
                keep.push_back(v);
        return induced_subgraph(g, keep);
    }

    auto contract_sets(const Graph & g, const vector<VertexSet> & parts, const vector<Vertex> & representatives) -> Contraction
    {
        if (! representatives.empty() && representatives.size() != parts.size())
            throw GraphError{"one representative per part required"};

        std::map<Vertex, Vertex> image;
        Contraction result;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            if (parts[p].empty())
                throw GraphError{"empty part"};
            if (! is_connected_subset(g, parts[p]))
                throw GraphError{"part " + to_string(p) + " does not induce a connected subgraph"};
            Vertex rep = representatives.empty() ? *std::min_element(parts[p].begin(), parts[p].end()) : representatives[p];
            if (std::find(parts[p].begin(), parts[p].end(), rep) == parts[p].end())
                throw GraphError{"representative outside its part"};
            for (auto v : parts[p])
                if (! image.emplace(v, rep).second)
                    throw GraphError{"parts overlap at vertex " + to_string(v)};
            result.part_vertex.push_back(rep);
        }

        auto map = [&] (Vertex v) {
            auto it = image.find(v);
            return it == image.end() ? v : it->second;
        };

        GraphBuilder builder;
        for (auto v : g.vertices())
            builder.add_vertex(map(v));
        for (auto [u, v] : g.edges())
            if (map(u) != map(v))
                builder.add_edge(map(u), map(v));
        result.graph = builder.build();
        return result;
    }

    auto connected_components(const Graph & g) -> vector<VertexSet>
    {
        vector<int> label(g.order(), -1);
        vector<VertexSet> result;
        for (std::size_t s = 0; s < g.order(); ++s) {
            if (label[s] != -1)
                continue;
            VertexSet component;
            vector<std::size_t> stack{s};
            label[s] = int(result.size());
            while (! stack.empty()) {
                auto i = stack.back();
                stack.pop_back();
                component.push_back(g.vertices()[i]);
                for (auto w : g.neighbours_by_index(i)) {
                    auto j = g.index_of(w);
                    if (label[j] == -1) {
                        label[j] = int(result.size());
                        stack.push_back(j);
                    }
                }
            }
            result.push_back(make_vertex_set(std::move(component)));
        }
        return result;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return connected_components(g).size() <= 1;
    }

    auto is_connected_subset(const Graph & g, span<const Vertex> s) -> bool
    {
        if (s.empty())
            return false;
        return is_connected(induced_subgraph(g, s));
    }

    auto is_forest(const Graph & g) -> bool
    {
        return g.size() + connected_components(g).size() == g.order();
    }

    auto is_tree(const Graph & g) -> bool
    {
        return g.order() > 0 && g.size() + 1 == g.order() && is_connected(g);
    }

    auto shortest_path(const Graph & g, span<const Vertex> sources, span<const Vertex> targets, span<const Vertex> allowed) -> vector<Vertex>
    {
        auto n = g.order();
        vector<char> ok(n, allowed.empty() ? 1 : 0), target(n, 0);
        for (auto v : allowed)
            if (auto i = g.index_of(v); i != no_index)
                ok[i] = 1;
        for (auto v : targets)
            if (auto i = g.index_of(v); i != no_index)
                target[i] = 1;

        vector<long> parent(n, -2);
        deque<std::size_t> queue;
        auto sorted_sources = make_vertex_set(vector<Vertex>(sources.begin(), sources.end()));
        for (auto v : sorted_sources) {
            auto i = g.index_of(v);
            if (i == no_index || ! ok[i])
                continue;
            parent[i] = -1;
            queue.push_back(i);
        }
        while (! queue.empty()) {
            auto i = queue.front();
            queue.pop_front();
            if (target[i]) {
                vector<Vertex> path;
                for (long j = long(i); j != -1; j = parent[j])
                    path.push_back(g.vertices()[j]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            for (auto w : g.neighbours_by_index(i)) {
                auto j = g.index_of(w);
                if (ok[j] && parent[j] == -2) {
                    parent[j] = long(i);
                    queue.push_back(j);
                }
            }
        }
        return {};
    }

    auto compact(const Graph & g) -> Compaction
    {
        Compaction result;
        for (std::size_t i = 0; i < g.order(); ++i)
            result.renamed.emplace(g.vertices()[i], Vertex(i));
        vector<Edge> edges;
        for (auto [u, v] : g.edges())
            edges.push_back(make_edge(result.renamed.at(u), result.renamed.at(v)));
        result.graph = Graph::from_edges(g.order(), edges);
        return result;
    }

    auto to_string(const Graph & g) -> string
    {
        std::ostringstream out;
        out << "V={";
        for (std::size_t i = 0; i < g.order(); ++i)
            out << (i ? "," : "") << g.vertices()[i];
        out << "} E={";
        bool first = true;
        for (auto [u, v] : g.edges()) {
            out << (first ? "" : ",") << u << "-" << v;
            first = false;
        }
        out << "}";
        return out.str();
    }
}
