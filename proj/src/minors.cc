/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/minors.hh>

#include <algorithm>
#include <set>

using std::map;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace pathforge
{
    auto MinorModel::owners() const -> map<Vertex, Vertex>
    {
        map<Vertex, Vertex> result;
        for (auto & [p, xs] : branch_sets)
            for (auto x : xs)
                result.emplace(x, p);
        return result;
    }

    auto validate_model(const MinorModel & m) -> vector<ModelProblem>
    {
        vector<ModelProblem> problems;
        auto note = [&] (string condition, Vertex u, Vertex v, string detail) {
            problems.push_back(ModelProblem{std::move(condition), u, v, std::move(detail)});
        };

        map<Vertex, Vertex> owner;
        for (auto p : m.pattern.vertices()) {
            auto it = m.branch_sets.find(p);
            if (it == m.branch_sets.end()) {
                note("missing", p, -1, "pattern vertex " + to_string(p) + " has no branch set");
                continue;
            }
            if (it->second.empty())
                note("empty", p, -1, "branch set of " + to_string(p) + " is empty");
            bool known = true;
            for (auto x : it->second) {
                if (! m.host.has_vertex(x)) {
                    note("unknown-vertex", p, x, "branch set of " + to_string(p) + " holds non-host vertex " + to_string(x));
                    known = false;
                    continue;
                }
                auto [o, fresh] = owner.emplace(x, p);
                if (! fresh)
                    note("overlap", o->second, p, "host vertex " + to_string(x) + " lies in the sets of "
                            + to_string(o->second) + " and " + to_string(p));
            }
            if (known && ! it->second.empty() && ! is_connected_subset(m.host, it->second))
                note("disconnected", p, -1, "branch set of " + to_string(p) + " is not connected");
        }
        for (auto & [p, xs] : m.branch_sets)
            if (! m.pattern.has_vertex(p))
                note("unknown-vertex", p, -1, "branch set given for non-pattern vertex " + to_string(p));

        // which pairs of pattern vertices have a host edge between their sets
        set<Edge> touching;
        for (auto [a, b] : m.host.edges()) {
            auto oa = owner.find(a), ob = owner.find(b);
            if (oa != owner.end() && ob != owner.end() && oa->second != ob->second)
                touching.insert(make_edge(oa->second, ob->second));
        }
        for (auto e : m.pattern.edges())
            if (! touching.count(e))
                note("non-adjacent", e.first, e.second, "no host edge between the sets of "
                        + to_string(e.first) + " and " + to_string(e.second));
        if (m.induced)
            for (auto e : touching)
                if (! m.pattern.adjacent(e.first, e.second))
                    note("induced", e.first, e.second, "host edge between the sets of non-adjacent "
                            + to_string(e.first) + " and " + to_string(e.second));
        return problems;
    }

    auto identity_model(const Graph & g, bool induced) -> MinorModel
    {
        MinorModel m{g, g, {}, induced};
        for (auto v : g.vertices())
            m.branch_sets.emplace(v, VertexSet{v});
        return m;
    }

    auto branch_set_radius(const Graph & host, const VertexSet & set) -> int
    {
        auto sub = induced_subgraph(host, set);
        int best = -1;
        for (auto c : sub.vertices()) {
            auto d = distances_from(sub, c);
            int worst = 0;
            for (auto x : d)
                worst = x < 0 ? int(set.size()) : std::max(worst, x);
            if (best == -1 || worst < best)
                best = worst;
        }
        return best;
    }

    auto sparsifiable_case(const Graph & g, Vertex v) -> SparsifiableCase
    {
        auto nbrs = g.neighbours(v);
        if (nbrs.size() <= 2)
            return SparsifiableCase::LowDegree;
        if (nbrs.size() != 3)
            return SparsifiableCase::No;
        vector<Vertex> quiet, loud;
        for (auto w : nbrs)
            (g.degree(w) <= 2 ? quiet : loud).push_back(w);
        if (quiet.size() == 3)
            return SparsifiableCase::QuietNeighbours;
        for (auto q : quiet) {
            vector<Vertex> others;
            for (auto w : nbrs)
                if (w != q)
                    others.push_back(w);
            if (g.adjacent(others[0], others[1]))
                return SparsifiableCase::Triangle;
        }
        return SparsifiableCase::No;
    }

    auto is_sparsifiable(const Graph & g, Vertex v) -> bool
    {
        return sparsifiable_case(g, v) != SparsifiableCase::No;
    }

    auto is_sparsifiable_graph(const Graph & g) -> bool
    {
        return std::all_of(g.vertices().begin(), g.vertices().end(), [&] (Vertex v) { return is_sparsifiable(g, v); });
    }

    auto violating_edges(const MinorModel & plus_model, const Graph & h) -> vector<Edge>
    {
        vector<Edge> result;
        auto owner = plus_model.owners();
        for (auto [a, b] : plus_model.host.edges()) {
            auto oa = owner.find(a), ob = owner.find(b);
            if (oa == owner.end() || ob == owner.end())
                continue;
            auto u = oa->second, v = ob->second;
            if (u != v && h.has_vertex(u) && h.has_vertex(v) && ! h.adjacent(u, v))
                result.push_back(Edge{a, b});
        }
        return result;
    }

    namespace
    {
        auto erase_from(VertexSet & s, Vertex x) -> void
        {
            s.erase(std::find(s.begin(), s.end(), x));
        }
    }

    auto repair_to_induced_model(const MinorModel & plus_model, const Graph & h) -> RepairResult
    {
        auto & g = plus_model.host;
        auto & hp = plus_model.pattern;

        if (! validate_model(MinorModel{hp, g, plus_model.branch_sets, false}).empty())
            throw PreconditionError{"input is not a valid minor model"};
        if (! is_sparsifiable_graph(g))
            throw PreconditionError{"host is not sparsifiable"};
        for (auto v : h.vertices()) {
            if (! hp.has_vertex(v))
                throw PreconditionError{"vertex " + to_string(v) + " of H is not in H+"};
            if (hp.degree(v) < 3)
                throw PreconditionError{"vertex " + to_string(v) + " has degree below 3 in H+"};
        }
        if (! (induced_subgraph(hp, h.vertices()) == h))
            throw PreconditionError{"H is not an induced subgraph of H+"};

        RepairResult result{plus_model, 0, {}};
        result.model.induced = false;
        auto & sets = result.model.branch_sets;

        auto in_closed_neighbourhood = [&] (Vertex c, Vertex u, const map<Vertex, Vertex> & owner) {
            auto o = owner.find(c);
            return o != owner.end() && (o->second == u || hp.adjacent(o->second, u));
        };

        while (true) {
            auto bad = violating_edges(result.model, h);
            result.history.push_back(bad.size());
            if (bad.empty())
                break;
            if (result.iterations > g.size())
                throw GraphError{"repair loop ran past the edge count"};

            auto owner = result.model.owners();
            auto [a, b] = bad.front();
            Vertex u = owner.at(a), v = owner.at(b);

            if (g.degree(a) <= 2)
                erase_from(sets[u], a);
            else if (g.degree(b) <= 2)
                erase_from(sets[v], b);
            else {
                vector<Vertex> common;
                for (auto c : g.neighbours(a))
                    if (g.adjacent(b, c))
                        common.push_back(c);
                if (common.empty())
                    throw GraphError{"degree-3 endpoints " + to_string(a) + ", " + to_string(b) + " share no neighbour"};
                Vertex c = common.front();
                if (! in_closed_neighbourhood(c, u, owner))
                    erase_from(sets[u], a);
                else if (! in_closed_neighbourhood(c, v, owner))
                    erase_from(sets[v], b);
                else {
                    Vertex w = owner.at(c);
                    erase_from(sets[u], a);
                    erase_from(sets[v], b);
                    sets[w] = make_vertex_set([&] { auto s = sets[w]; s.push_back(a); s.push_back(b); return s; }());
                }
            }
            ++result.iterations;

            if (! validate_model(MinorModel{hp, g, sets, false}).empty())
                throw GraphError{"repair move broke the model at edge " + to_string(a) + "-" + to_string(b)};
            if (violating_edges(result.model, h).size() >= result.history.back())
                throw GraphError{"repair move did not decrease the violating edge count"};
        }

        MinorModel final_model{h, g, {}, true};
        for (auto x : h.vertices())
            final_model.branch_sets.emplace(x, sets.at(x));
        if (auto problems = validate_model(final_model); ! problems.empty())
            throw GraphError{"repaired model fails validation: " + problems.front().detail};
        result.model = std::move(final_model);
        return result;
    }

    namespace
    {
        // Bounded BFS reusing dist (all -1 between calls); returns the
        // indices reached, source first.
        auto local_ball(const Graph & g, std::size_t source, int radius, vector<int> & dist) -> vector<std::size_t>
        {
            vector<std::size_t> reached{source};
            dist[source] = 0;
            for (std::size_t head = 0; head < reached.size(); ++head) {
                auto i = reached[head];
                if (dist[i] >= radius)
                    continue;
                for (auto w : g.neighbours_by_index(i)) {
                    auto j = g.index_of(w);
                    if (dist[j] == -1) {
                        dist[j] = dist[i] + 1;
                        reached.push_back(j);
                    }
                }
            }
            return reached;
        }

        auto clear(vector<int> & dist, const vector<std::size_t> & reached) -> void
        {
            for (auto i : reached)
                dist[i] = -1;
        }
    }

    auto pairwise_distance_at_least(const Graph & g, const VertexSet & s, int d) -> bool
    {
        vector<int> dist(g.order(), -1);
        vector<char> member(g.order(), 0);
        for (auto v : s)
            member[g.index_of(v)] = 1;
        for (auto v : s) {
            auto reached = local_ball(g, g.index_of(v), d - 1, dist);
            bool ok = std::none_of(reached.begin() + 1, reached.end(), [&] (std::size_t j) { return member[j]; });
            clear(dist, reached);
            if (! ok)
                return false;
        }
        return true;
    }

    auto distance5_partition(const Graph & g) -> Distance5Partition
    {
        Distance5Partition result;
        vector<int> cls(g.order(), -1), dist(g.order(), -1);
        for (std::size_t i = 0; i < g.order(); ++i) {
            auto reached = local_ball(g, i, 4, dist);
            set<int> taken;
            for (auto j : reached)
                if (cls[j] >= 0)
                    taken.insert(cls[j]);
            clear(dist, reached);
            int c = 0;
            while (taken.count(c))
                ++c;
            cls[i] = c;
            if (std::size_t(c) == result.classes.size())
                result.classes.emplace_back();
            result.classes[c].push_back(g.vertices()[i]);
        }
        return result;
    }

    auto ball_contract(const Graph & g, const VertexSet & centres) -> BallContraction
    {
        for (auto c : centres)
            if (! g.has_vertex(c))
                throw GraphError{"centre " + to_string(c) + " is not a vertex"};
        if (! pairwise_distance_at_least(g, centres, 5))
            throw GraphError{"centres are not pairwise at distance 5 or more"};

        map<Vertex, Vertex> rep;
        map<Vertex, VertexSet> balls;
        vector<int> dist(g.order(), -1);
        for (auto c : centres) {
            auto reached = local_ball(g, g.index_of(c), 2, dist);
            clear(dist, reached);
            vector<Vertex> ball;
            for (auto j : reached) {
                ball.push_back(g.vertices()[j]);
                rep[g.vertices()[j]] = c;
            }
            balls.emplace(c, make_vertex_set(std::move(ball)));
        }

        GraphBuilder builder;
        auto rep_of = [&] (Vertex v) { auto it = rep.find(v); return it == rep.end() ? v : it->second; };
        for (auto v : g.vertices())
            builder.add_vertex(rep_of(v));
        for (auto [a, b] : g.edges())
            if (rep_of(a) != rep_of(b))
                builder.add_edge(rep_of(a), rep_of(b));

        BallContraction result{builder.build(), {}, centres};
        result.model = MinorModel{result.graph, g, {}, true};
        for (auto v : result.graph.vertices()) {
            auto it = balls.find(v);
            result.model.branch_sets.emplace(v, it == balls.end() ? VertexSet{v} : it->second);
        }
        return result;
    }
}
