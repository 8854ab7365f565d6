/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/extract.hh>

#include <algorithm>
#include <set>

using std::map;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace pathforge
{
    auto mono_height(int k) -> int
    {
        return (k * k + 5 * k) / 2;
    }

    auto composed_height(int k) -> int
    {
        return 2 * k * k + 10 * k;
    }

    auto check_fork_parts(const Graph & g, const ForkParts & parts) -> vector<string>
    {
        vector<string> problems;
        map<Vertex, int> part_of;   // 0..3 for A, B, C, S; 4, 5, 6 for a, b, c
        const VertexSet * sets[4] = {&parts.a_side, &parts.b_side, &parts.c_side, &parts.s};
        const char * names[7] = {"A", "B", "C", "S", "a", "b", "c"};
        for (int i = 0; i < 4; ++i) {
            if (sets[i]->empty())
                problems.push_back(string{"part "} + names[i] + " is empty");
            else if (! is_connected_subset(g, *sets[i]))
                problems.push_back(string{"part "} + names[i] + " is not connected");
            for (auto v : *sets[i])
                if (! part_of.emplace(v, i).second)
                    problems.push_back("vertex " + to_string(v) + " lies in two parts");
        }
        Vertex ends[3] = {parts.a, parts.b, parts.c};
        for (int i = 0; i < 3; ++i)
            if (! part_of.emplace(ends[i], 4 + i).second)
                problems.push_back(string{"end "} + names[4 + i] + " = " + to_string(ends[i]) + " also lies in another part");
        for (auto v : g.vertices())
            if (! part_of.count(v))
                problems.push_back("vertex " + to_string(v) + " is in no part");
        if (part_of.size() != g.order())
            problems.push_back("parts name vertices outside the graph");
        if (! problems.empty())
            return problems;
        if (! is_connected(g))
            problems.push_back("graph is not connected");

        for (auto [u, v] : g.edges()) {
            int pu = part_of.at(u), pv = part_of.at(v);
            if (pu == pv)
                continue;
            auto lo = std::min(pu, pv), hi = std::max(pu, pv);
            bool allowed = (hi == lo + 4 && lo < 3) || (hi == 3 && lo < 3);
            if (! allowed)
                problems.push_back("edge " + to_string(u) + "-" + to_string(v) + " joins parts "
                        + names[pu] + " and " + names[pv]);
        }
        return problems;
    }

    namespace
    {
        auto connects(const Graph & g, const vector<char> & alive, const ForkParts & p) -> bool
        {
            vector<char> seen(g.order(), 0);
            vector<std::size_t> queue{g.index_of(p.a)};
            seen[queue[0]] = 1;
            for (std::size_t head = 0; head < queue.size(); ++head)
                for (auto w : g.neighbours_by_index(queue[head])) {
                    auto j = g.index_of(w);
                    if (alive[j] && ! seen[j]) {
                        seen[j] = 1;
                        queue.push_back(j);
                    }
                }
            return seen[g.index_of(p.b)] && seen[g.index_of(p.c)];
        }

        // Drops vertices in ascending order while a, b, c stay connected,
        // then reads off a fork or semi-fork if that is what remains.
        auto minimise(const Graph & g, const ForkParts & p) -> std::optional<CleanFork>
        {
            vector<char> alive(g.order(), 1);
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t i = 0; i < g.order(); ++i) {
                    auto v = g.vertices()[i];
                    if (! alive[i] || v == p.a || v == p.b || v == p.c)
                        continue;
                    alive[i] = 0;
                    if (connects(g, alive, p))
                        changed = true;
                    else
                        alive[i] = 1;
                }
            }
            vector<Vertex> kept;
            for (std::size_t i = 0; i < g.order(); ++i)
                if (alive[i])
                    kept.push_back(g.vertices()[i]);
            auto h = induced_subgraph(g, kept);
            Vertex ends[3] = {p.a, p.b, p.c};
            for (auto v : h.vertices())
                if ((h.degree(v) == 1) != (v == p.a || v == p.b || v == p.c))
                    return std::nullopt;

            CleanFork result;
            result.embedding.host = g;
            result.embedding.induced = true;
            auto & cert = result.embedding.cert;

            auto end_index = [&] (Vertex x) { return int(std::find(ends, ends + 3, x) - ends); };

            if (auto fork = recognize(h, Shape::Fork, Strictness::Strict); fork.matches) {
                cert.base = claw_graph();
                Vertex centre = fork.parts[0][0];
                cert.branch_map[0] = centre;
                for (std::size_t i = 1; i < 4; ++i) {
                    auto & arm = fork.parts[i];
                    int leaf = end_index(arm.back()) + 1;
                    if (leaf > 3)
                        return std::nullopt;
                    cert.branch_map[leaf] = arm.back();
                    vector<Vertex> path{centre};
                    path.insert(path.end(), arm.begin(), arm.end());
                    cert.path_map[make_edge(0, leaf)] = path;
                }
                return result;
            }
            if (auto semi = recognize(h, Shape::SemiFork, Strictness::Strict); semi.matches) {
                result.semi = true;
                cert.base = net_graph();
                for (std::size_t i = 1; i < 4; ++i) {
                    auto & pendant = semi.parts[i];
                    int corner = end_index(pendant.back());
                    if (corner > 2 || pendant.size() < 2)
                        return std::nullopt;
                    cert.branch_map[corner] = pendant.front();
                    cert.branch_map[corner + 3] = pendant.back();
                    cert.path_map[make_edge(corner, corner + 3)] = pendant;
                }
                for (auto [x, y] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}})
                    cert.path_map[make_edge(x, y)] = {cert.branch_map.at(x), cert.branch_map.at(y)};
                return result;
            }
            return std::nullopt;
        }
    }

    auto clean_fork(const Graph & g, const ForkParts & parts) -> CleanFork
    {
        if (auto problems = check_fork_parts(g, parts); ! problems.empty())
            throw GraphError{"clean_fork parts: " + problems.front()};

        auto result = minimise(g, parts);
        if (! result) {
            // exhaustive search over induced claw and net subdivisions
            Budget budget{std::uint64_t{1} << 32};
            SubdivisionQuery claw_query;
            claw_query.pinned = {{1, parts.a}, {2, parts.b}, {3, parts.c}};
            auto found = find_subdivision(g, claw_graph(), claw_query, budget);
            if (found.found())
                result = CleanFork{false, found.value};
            else {
                SubdivisionQuery net_query;
                net_query.pinned = {{3, parts.a}, {4, parts.b}, {5, parts.c}};
                net_query.max_length = {{make_edge(0, 1), 1}, {make_edge(1, 2), 1}, {make_edge(0, 2), 1}};
                auto net = find_subdivision(g, net_graph(), net_query, budget);
                if (net.found())
                    result = CleanFork{true, net.value};
            }
        }
        if (! result)
            throw GraphError{"no induced fork or semi-fork ends at the three given vertices"};
        if (auto problems = validate_subdivision_embedding(result->embedding); ! problems.empty())
            throw GraphError{"clean_fork produced an invalid embedding: " + problems.front()};
        return *result;
    }

    namespace
    {
        class WattleBuilder
        {
            private:
                const MinorModel & _m;
                const Graph & _host;
                int _height;

                auto set_of(Vertex v) const -> const VertexSet & { return _m.branch_sets.at(v); }

                auto has_children(Vertex v) const -> bool { return 2 * std::size_t(v) + 1 < _m.pattern.order(); }

                // vertices of X_v with a neighbour in X_u
                auto frontier(Vertex v, Vertex u) const -> VertexSet
                {
                    auto & xu = set_of(u);
                    VertexSet result;
                    for (auto x : set_of(v))
                        for (auto y : _host.neighbours(x))
                            if (std::binary_search(xu.begin(), xu.end(), y)) {
                                result.push_back(x);
                                break;
                            }
                    return result;
                }

            public:
                WattleBuilder(const MinorModel & m, int height) :
                    _m(m),
                    _host(m.host),
                    _height(height)
                {
                }

                // P_v: shortest path in X_v from the parent side to the left
                // child side
                auto path_p(Vertex v) const -> vector<Vertex>
                {
                    auto path = shortest_path(_host, frontier(v, (v - 1) / 2), frontier(v, 2 * v + 1), set_of(v));
                    if (path.empty())
                        throw GraphError{"no path through the branch set of " + to_string(v)};
                    return path;
                }

                auto w0(Vertex v) const -> Vertex
                {
                    if (has_children(v))
                        return path_p(v).front();
                    auto f = frontier(v, (v - 1) / 2);
                    if (f.empty())
                        throw GraphError{"branch set of " + to_string(v) + " does not touch its parent"};
                    return f.front();
                }

                auto build(int k) -> WattleCertificate
                {
                    WattleCertificate w{complete_binary_tree(k), {}, _host, {}, {}};
                    if (k == 0) {
                        w.branch_map[0] = {set_of(0).front()};
                        return w;
                    }

                    // base path between the leftmost left and leftmost right
                    // descendants at depth 4
                    Vertex a = 15, b = 23;
                    Vertex wa = w0(a), wb = w0(b);
                    vector<Vertex> allowed{wa, wb};
                    for (Vertex side : {a, b})
                        for (Vertex x = (side - 1) / 2; ; x = (x - 1) / 2) {
                            allowed.insert(allowed.end(), set_of(x).begin(), set_of(x).end());
                            if (x == 0)
                                break;
                        }
                    allowed = make_vertex_set(std::move(allowed));
                    auto base = shortest_path(_host, VertexSet{wa}, VertexSet{wb}, allowed);
                    if (base.empty())
                        throw GraphError{"no path between the depth-4 branch sets"};
                    auto & root_set = set_of(0);
                    auto at_root = std::find_if(base.begin(), base.end(),
                            [&] (Vertex x) { return std::binary_search(root_set.begin(), root_set.end(), x); });
                    if (at_root == base.end())
                        throw GraphError{"base path misses the root branch set"};
                    w.branch_map[0] = {*at_root};
                    w.branch_map[1] = {wa};
                    w.branch_map[2] = {wb};
                    w.path_map[make_edge(0, 1)] = vector<Vertex>(std::make_reverse_iterator(at_root + 1), base.rend());
                    w.path_map[make_edge(0, 2)] = vector<Vertex>(at_root, base.end());

                    map<Vertex, Vertex> phi{{1, a}, {2, b}};
                    vector<Vertex> triangles;
                    for (int j = 2; j <= k; ++j) {
                        map<Vertex, Vertex> next_phi;
                        for (Vertex u = (1 << (j - 1)) - 1; u <= (1 << j) - 2; ++u) {
                            Vertex v = phi.at(u);
                            auto pv = path_p(v);
                            Vertex lv = 2 * v + 1, s = 2 * lv + 1, ls = 2 * s + 1, cs = 2 * s + 2;
                            Vertex bb = 2 * ls + 1, cc = 2 * cs + 1;

                            ForkParts parts{set_of(lv), set_of(ls), set_of(cs), set_of(s), pv.back(), w0(bb), w0(cc)};
                            vector<Vertex> region{parts.a, parts.b, parts.c};
                            for (auto * part : {&parts.a_side, &parts.b_side, &parts.c_side, &parts.s})
                                region.insert(region.end(), part->begin(), part->end());
                            auto fork = clean_fork(induced_subgraph(_host, make_vertex_set(region)), parts);
                            auto & fc = fork.embedding.cert;

                            auto & parent_path = w.path_map.at(make_edge((u - 1) / 2, u));
                            parent_path.insert(parent_path.end(), pv.begin() + 1, pv.end());
                            Edge up = fork.semi ? make_edge(0, 3) : make_edge(0, 1);
                            auto & arm = fc.path_map.at(up);
                            parent_path.insert(parent_path.end(), arm.rbegin() + 1, arm.rend());

                            if (fork.semi) {
                                w.branch_map[u] = {fc.branch_map.at(0), fc.branch_map.at(1), fc.branch_map.at(2)};
                                w.path_map[make_edge(u, 2 * u + 1)] = fc.path_map.at(make_edge(1, 4));
                                w.path_map[make_edge(u, 2 * u + 2)] = fc.path_map.at(make_edge(2, 5));
                                triangles.push_back(u);
                            }
                            else {
                                w.branch_map[u] = {fc.branch_map.at(0)};
                                w.path_map[make_edge(u, 2 * u + 1)] = fc.path_map.at(make_edge(0, 2));
                                w.path_map[make_edge(u, 2 * u + 2)] = fc.path_map.at(make_edge(0, 3));
                            }
                            w.branch_map[2 * u + 1] = {parts.b};
                            w.branch_map[2 * u + 2] = {parts.c};
                            next_phi[2 * u + 1] = bb;
                            next_phi[2 * u + 2] = cc;
                        }
                        phi = std::move(next_phi);
                    }
                    w.triangles = make_vertex_set(std::move(triangles));
                    return w;
                }
        };

        // Height of a complete binary tree in heap numbering, or -1.
        auto heap_tree_height(const Graph & g) -> int
        {
            for (int h = 0; h < 30; ++h) {
                std::size_t n = (std::size_t{1} << (h + 1)) - 1;
                if (n == g.order())
                    return g == complete_binary_tree(h).graph() ? h : -1;
                if (n > g.order())
                    return -1;
            }
            return -1;
        }
    }

    auto minor_to_wattle(const MinorModel & m, int k) -> WattleCertificate
    {
        if (k < 0)
            throw GraphError{"k must be non-negative"};
        int height = heap_tree_height(m.pattern);
        if (height < 0)
            throw GraphError{"model pattern is not a complete binary tree in heap numbering"};
        if (height < 4 * k)
            throw GraphError{"model pattern has height " + to_string(height) + ", need " + to_string(4 * k)};
        if (! m.induced)
            throw GraphError{"minor_to_wattle needs an induced model"};
        if (auto problems = validate_model(m); ! problems.empty())
            throw GraphError{"invalid model: " + problems.front().detail};

        auto w = WattleBuilder{m, height}.build(k);
        if (auto problems = validate_wattle(w, EmbeddingMode::Induced); ! problems.empty())
            throw GraphError{"internal error: extracted wattle fails validation: " + problems.front()};
        return w;
    }
}
