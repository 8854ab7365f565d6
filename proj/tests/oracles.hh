/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PATHFORGE_TESTS_ORACLES_HH
#define PATHFORGE_TESTS_ORACLES_HH 1

// Slow, obviously correct reference implementations used to check the
// library. Nothing here calls library algorithms beyond Graph accessors.

#include <pathforge/graph.hh>
#include <pathforge/minors.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle
{
    using pathforge::Edge;
    using pathforge::Graph;
    using pathforge::Vertex;
    using pathforge::VertexSet;

    inline auto adjacency_matrix(const Graph & g) -> std::vector<std::vector<char>>
    {
        auto n = g.order();
        std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
        for (auto [u, v] : g.edges()) {
            auto i = g.index_of(u), j = g.index_of(v);
            a[i][j] = a[j][i] = 1;
        }
        return a;
    }

    // Minimum over all vertex orders of the largest number of placed vertices
    // that still have an unplaced neighbour.
    inline auto pathwidth(const Graph & g) -> int
    {
        auto n = g.order();
        if (n == 0)
            return -1;
        auto a = adjacency_matrix(g);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        int best = int(n);
        do {
            int worst = 0;
            std::vector<char> placed(n, 0);
            for (std::size_t i = 0; i < n && worst < best; ++i) {
                placed[order[i]] = 1;
                int open = 0;
                for (std::size_t u = 0; u < n; ++u) {
                    if (! placed[u])
                        continue;
                    for (std::size_t w = 0; w < n; ++w)
                        if (a[u][w] && ! placed[w]) {
                            ++open;
                            break;
                        }
                }
                worst = std::max(worst, open);
            }
            best = std::min(best, worst);
        } while (std::next_permutation(order.begin(), order.end()));
        return best;
    }

    inline auto distances(const Graph & g, Vertex s) -> std::map<Vertex, int>
    {
        std::map<Vertex, int> d{{s, 0}};
        std::vector<Vertex> queue{s};
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (auto w : g.neighbours(queue[h]))
                if (! d.count(w)) {
                    d[w] = d[queue[h]] + 1;
                    queue.push_back(w);
                }
        return d;
    }

    inline auto distance(const Graph & g, Vertex s, Vertex t) -> int
    {
        auto d = distances(g, s);
        return d.count(t) ? d[t] : -1;
    }

    // True when g has a cycle with at most max_length vertices, found by
    // extending simple paths that start at their smallest vertex.
    inline auto has_short_cycle(const Graph & g, int max_length) -> bool
    {
        std::vector<Vertex> path;
        std::set<Vertex> on_path;
        std::function<bool (Vertex)> grow = [&] (Vertex v) -> bool {
            for (auto w : g.neighbours(v)) {
                if (w == path.front() && path.size() >= 3)
                    return true;
                if (w < path.front() || on_path.count(w) || int(path.size()) >= max_length)
                    continue;
                path.push_back(w);
                on_path.insert(w);
                bool found = grow(w);
                path.pop_back();
                on_path.erase(w);
                if (found)
                    return true;
            }
            return false;
        };
        for (auto v : g.vertices()) {
            path = {v};
            on_path = {v};
            if (grow(v))
                return true;
        }
        return false;
    }

    // Every injective map from the pattern onto each subset of the right size.
    inline auto has_induced_subgraph(const Graph & host, const Graph & pattern) -> bool
    {
        auto k = pattern.order();
        auto n = host.order();
        if (k > n)
            return false;
        auto ha = adjacency_matrix(host), pa = adjacency_matrix(pattern);
        std::vector<int> pick(k);
        std::function<bool (std::size_t, std::size_t)> choose = [&] (std::size_t i, std::size_t from) -> bool {
            if (i == k) {
                std::vector<int> perm = pick;
                std::sort(perm.begin(), perm.end());
                do {
                    bool ok = true;
                    for (std::size_t x = 0; x < k && ok; ++x)
                        for (std::size_t y = x + 1; y < k && ok; ++y)
                            ok = (ha[perm[x]][perm[y]] != 0) == (pa[x][y] != 0);
                    if (ok)
                        return true;
                } while (std::next_permutation(perm.begin(), perm.end()));
                return false;
            }
            for (auto v = from; v < n; ++v) {
                pick[i] = int(v);
                if (choose(i + 1, v + 1))
                    return true;
            }
            return false;
        };
        return choose(0, 0);
    }

    inline auto connected_within(const Graph & g, const VertexSet & s) -> bool
    {
        if (s.empty())
            return false;
        std::set<Vertex> inside(s.begin(), s.end()), seen{s.front()};
        std::vector<Vertex> queue{s.front()};
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (auto w : g.neighbours(queue[h]))
                if (inside.count(w) && seen.insert(w).second)
                    queue.push_back(w);
        return seen.size() == inside.size();
    }

    // Direct check of the model conditions.
    inline auto model_ok(const pathforge::MinorModel & m) -> bool
    {
        std::map<Vertex, Vertex> owner;
        for (auto p : m.pattern.vertices()) {
            auto it = m.branch_sets.find(p);
            if (it == m.branch_sets.end() || ! connected_within(m.host, it->second))
                return false;
            for (auto x : it->second)
                if (! m.host.has_vertex(x) || ! owner.emplace(x, p).second)
                    return false;
        }
        std::set<Edge> touching;
        for (auto [a, b] : m.host.edges())
            if (owner.count(a) && owner.count(b) && owner[a] != owner[b])
                touching.insert(pathforge::make_edge(owner[a], owner[b]));
        for (auto e : m.pattern.edges())
            if (! touching.count(e))
                return false;
        if (m.induced)
            for (auto e : touching)
                if (! m.pattern.adjacent(e.first, e.second))
                    return false;
        return true;
    }

    // Labels every host vertex with a pattern vertex or "deleted" and accepts
    // when the labelling is an induced minor model. Exponential; hosts of at
    // most 20 vertices.
    inline auto has_induced_minor(const Graph & host, const Graph & pattern) -> bool
    {
        auto n = host.order();
        auto p = pattern.order();
        std::vector<std::uint32_t> adj(n, 0);
        for (auto [u, v] : host.edges()) {
            auto i = host.index_of(u), j = host.index_of(v);
            adj[i] |= std::uint32_t{1} << j;
            adj[j] |= std::uint32_t{1} << i;
        }
        auto pa = adjacency_matrix(pattern);
        auto connected = [&] (std::uint32_t m) {
            if (! m)
                return false;
            std::uint32_t seen = m & (~m + 1), frontier = seen;
            while (frontier) {
                std::uint32_t next = 0;
                for (auto f = frontier; f; f &= f - 1)
                    next |= adj[std::countr_zero(f)];
                next &= m & ~seen;
                seen |= next;
                frontier = next;
            }
            return seen == m;
        };
        std::vector<std::uint32_t> masks(p, 0);
        std::function<bool (std::size_t)> assign = [&] (std::size_t i) -> bool {
            if (i == n) {
                for (std::size_t a = 0; a < p; ++a)
                    if (! connected(masks[a]))
                        return false;
                for (std::size_t a = 0; a < p; ++a)
                    for (std::size_t b = a + 1; b < p; ++b) {
                        bool touch = false;
                        for (auto m = masks[a]; m && ! touch; m &= m - 1)
                            touch = adj[std::countr_zero(m)] & masks[b];
                        if (touch != (pa[a][b] != 0))
                            return false;
                    }
                return true;
            }
            if (assign(i + 1))
                return true;
            for (std::size_t l = 0; l < p; ++l) {
                masks[l] |= std::uint32_t{1} << i;
                bool found = assign(i + 1);
                masks[l] &= ~(std::uint32_t{1} << i);
                if (found)
                    return true;
            }
            return false;
        };
        return assign(0);
    }

    inline auto random_graph(std::mt19937_64 & rng, int n, double p) -> Graph
    {
        std::vector<Edge> edges;
        std::bernoulli_distribution coin{p};
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        return Graph::from_edges(std::size_t(n), edges);
    }

    // Random labelled tree from a random parent for every vertex after 0.
    inline auto random_tree(std::mt19937_64 & rng, int n) -> Graph
    {
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v)
            edges.emplace_back(int(rng() % std::uint64_t(v)), v);
        return Graph::from_edges(std::size_t(n), edges);
    }

    // Random graph of maximum degree at most max_degree.
    inline auto random_bounded_degree(std::mt19937_64 & rng, int n, int max_degree, int attempts) -> Graph
    {
        std::vector<int> degree(n, 0);
        std::set<Edge> edges;
        for (int i = 0; i < attempts; ++i) {
            int u = int(rng() % std::uint64_t(n)), v = int(rng() % std::uint64_t(n));
            if (u == v || degree[u] >= max_degree || degree[v] >= max_degree)
                continue;
            if (edges.insert(pathforge::make_edge(u, v)).second) {
                ++degree[u];
                ++degree[v];
            }
        }
        return Graph::from_edges(std::size_t(n), std::vector<Edge>(edges.begin(), edges.end()));
    }
}

#endif
