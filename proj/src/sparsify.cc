/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/minors.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

using std::map;
using std::set;
using std::to_string;
using std::vector;

namespace pathforge
{
    namespace
    {
        // BFS tree path inside the ball from centre to target, ascending
        // identifiers breaking ties.
        auto ball_path(const Graph & g, const VertexSet & ball, Vertex centre, Vertex target) -> vector<Vertex>
        {
            auto path = shortest_path(g, VertexSet{centre}, VertexSet{target}, ball);
            if (path.empty())
                throw GraphError{"attachment " + to_string(target) + " unreachable inside the ball of " + to_string(centre)};
            return path;
        }

        // Sparsifiability of centre inside g[kept], looking only at the
        // centre and its neighbours.
        auto centre_ok(const Graph & g, const vector<char> & kept, Vertex centre) -> bool
        {
            auto inside = [&] (Vertex x) { return kept[g.index_of(x)] != 0; };
            GraphBuilder local;
            local.add_vertex(centre);
            for (auto w : g.neighbours(centre)) {
                if (! inside(w))
                    continue;
                local.add_edge(centre, w);
                for (auto z : g.neighbours(w))
                    if (inside(z))
                        local.add_edge(w, z);
            }
            return is_sparsifiable(local.build(), centre);
        }
    }

    auto sparsifiable_restriction(const Graph & g, const BallContraction & contraction, const Graph & h_sub) -> Restriction
    {
        if (h_sub.max_degree() > 3)
            throw GraphError{"h_sub has a vertex of degree above 3"};
        for (auto [u, v] : h_sub.edges())
            if (! contraction.graph.adjacent(u, v))
                throw GraphError{"h_sub is not a subgraph of the contracted graph"};

        auto & balls = contraction.model.branch_sets;
        set<Vertex> centres(contraction.centres.begin(), contraction.centres.end());

        // one host edge per h_sub edge, lowest pair first
        map<Vertex, vector<Vertex>> attachments;
        for (auto [u, v] : h_sub.edges()) {
            bool done = false;
            for (auto a : balls.at(u)) {
                for (auto b : g.neighbours(a))
                    if (std::binary_search(balls.at(v).begin(), balls.at(v).end(), b)) {
                        attachments[u].push_back(a);
                        attachments[v].push_back(b);
                        done = true;
                        break;
                    }
                if (done)
                    break;
            }
            if (! done)
                throw GraphError{"no host edge realises contracted edge " + to_string(u) + "-" + to_string(v)};
        }

        map<Vertex, VertexSet> sets;
        for (auto x : h_sub.vertices()) {
            if (! centres.count(x)) {
                sets.emplace(x, VertexSet{x});
                continue;
            }
            vector<Vertex> keep{x};
            for (auto a : attachments[x]) {
                auto p = ball_path(g, balls.at(x), x, a);
                keep.insert(keep.end(), p.begin(), p.end());
            }
            sets.emplace(x, make_vertex_set(std::move(keep)));
        }

        auto all_kept = [&] () {
            vector<Vertex> s;
            for (auto & [x, xs] : sets)
                s.insert(s.end(), xs.begin(), xs.end());
            return make_vertex_set(std::move(s));
        };

        // fall back to any connected subset of the ball that keeps the centre
        // and its attachments and makes the centre sparsifiable
        vector<char> kept(g.order(), 0);
        for (auto & [x, xs] : sets)
            for (auto v : xs)
                kept[g.index_of(v)] = 1;
        auto mark = [&] (const VertexSet & xs, char value) {
            for (auto v : xs)
                kept[g.index_of(v)] = value;
        };

        for (auto & [x, xs] : sets) {
            if (! centres.count(x) || centre_ok(g, kept, x))
                continue;
            auto & ball = balls.at(x);
            vector<Vertex> optional_part;
            set<Vertex> must(attachments[x].begin(), attachments[x].end());
            must.insert(x);
            for (auto b : ball)
                if (! must.count(b))
                    optional_part.push_back(b);
            if (optional_part.size() > 20)
                throw GraphError{"ball of " + to_string(x) + " too large for the exhaustive fallback"};

            bool fixed = false;
            auto original = xs;
            mark(xs, 0);
            // smaller subsets first
            vector<std::uint32_t> masks;
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << optional_part.size()); ++mask)
                masks.push_back(mask);
            std::stable_sort(masks.begin(), masks.end(), [] (auto a, auto b) { return std::popcount(a) < std::popcount(b); });
            for (auto mask : masks) {
                vector<Vertex> candidate(must.begin(), must.end());
                for (std::size_t i = 0; i < optional_part.size(); ++i)
                    if (mask >> i & 1)
                        candidate.push_back(optional_part[i]);
                xs = make_vertex_set(std::move(candidate));
                if (! is_connected_subset(g, xs))
                    continue;
                mark(xs, 1);
                if (centre_ok(g, kept, x)) {
                    fixed = true;
                    break;
                }
                mark(xs, 0);
            }
            if (! fixed) {
                xs = original;
                mark(xs, 1);
                throw GraphError{"centre " + to_string(x) + " cannot be made sparsifiable"};
            }
        }

        Restriction result;
        result.kept = all_kept();
        auto sub = induced_subgraph(g, result.kept);
        result.model = MinorModel{h_sub, sub, sets, false};
        if (auto problems = validate_model(result.model); ! problems.empty())
            throw GraphError{"restricted model fails validation: " + problems.front().detail};
        for (auto c : centres)
            if (sub.has_vertex(c) && ! is_sparsifiable(sub, c))
                throw GraphError{"centre " + to_string(c) + " is not sparsifiable after restriction"};
        return result;
    }
}
