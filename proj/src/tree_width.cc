/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/width.hh>

#include <algorithm>
#include <map>
#include <optional>

using std::map;
using std::optional;
using std::pair;
using std::vector;

namespace pathforge
{
    namespace
    {
        // A piece is the subtree below x with the subtrees below each member
        // of removed cut away. Vertices are indices into the graph.
        struct Piece
        {
            int x;
            vector<int> removed;

            auto operator<(const Piece & other) const -> bool
            {
                return std::tie(x, removed) < std::tie(other.x, other.removed);
            }
        };

        class ForestWidth
        {
            private:
                const Graph & _g;
                vector<vector<int>> _children;
                vector<int> _enter, _exit;
                map<Piece, int> _memo;

                // strict descendant test
                auto below(int a, int d) const -> bool
                {
                    return _enter[a] < _enter[d] && _exit[d] <= _exit[a];
                }

                auto pieces_below(const Piece & p) const -> vector<Piece>
                {
                    vector<Piece> result;
                    for (int c : _children[p.x]) {
                        if (std::binary_search(p.removed.begin(), p.removed.end(), c))
                            continue;
                        Piece q{c, {}};
                        for (int r : p.removed)
                            if (below(c, r))
                                q.removed.push_back(r);
                        result.push_back(std::move(q));
                    }
                    return result;
                }

                // In a piece of width m, a vertex having two branches of width
                // m. Such a vertex, if it exists, is found by following the
                // unique heaviest branch.
                auto critical(Piece p, int m) -> optional<Piece>
                {
                    while (true) {
                        optional<Piece> next;
                        int count = 0;
                        for (auto & q : pieces_below(p))
                            if (width(q) == m) {
                                ++count;
                                next = q;
                            }
                        if (count >= 2)
                            return p;
                        if (count == 0)
                            return std::nullopt;
                        p = std::move(*next);
                    }
                }

                static auto without(const Piece & p, int w) -> Piece
                {
                    Piece result = p;
                    result.removed.insert(std::upper_bound(result.removed.begin(), result.removed.end(), w), w);
                    return result;
                }

                struct Shape
                {
                    vector<Piece> branches;
                    vector<int> widths;
                    int m = -1, heavy = 0;
                };

                auto shape(const Piece & p) -> Shape
                {
                    Shape s;
                    s.branches = pieces_below(p);
                    for (auto & q : s.branches)
                        s.widths.push_back(width(q));
                    for (int w : s.widths)
                        s.m = std::max(s.m, w);
                    s.heavy = int(std::count(s.widths.begin(), s.widths.end(), s.m));
                    return s;
                }

                // Follows heaviest branches downwards from p until none has
                // width m.
                auto chain(Piece p, int m) -> vector<Piece>
                {
                    vector<Piece> result;
                    while (true) {
                        result.push_back(p);
                        optional<Piece> next;
                        for (auto & q : pieces_below(p))
                            if (width(q) == m)
                                next = q;
                        if (! next)
                            return result;
                        p = std::move(*next);
                    }
                }

                auto emit(vector<VertexSet> & bags, const vector<VertexSet> & part, int extra) -> void
                {
                    for (auto bag : part) {
                        bag.push_back(_g.vertices()[extra]);
                        bags.push_back(make_vertex_set(std::move(bag)));
                    }
                }

            public:
                ForestWidth(const Graph & g) :
                    _g(g),
                    _children(g.order()),
                    _enter(g.order(), -1),
                    _exit(g.order(), -1)
                {
                }

                // Roots each component at its smallest vertex; returns roots.
                auto root_all() -> vector<int>
                {
                    vector<int> roots;
                    int clock = 0;
                    for (std::size_t r = 0; r < _g.order(); ++r) {
                        if (_enter[r] != -1)
                            continue;
                        roots.push_back(int(r));
                        vector<pair<int, std::size_t>> stack{{int(r), 0}};
                        _enter[r] = clock++;
                        while (! stack.empty()) {
                            auto & [v, next] = stack.back();
                            auto nbrs = _g.neighbours_by_index(v);
                            if (next == nbrs.size()) {
                                _exit[v] = clock;
                                stack.pop_back();
                                continue;
                            }
                            int w = int(_g.index_of(nbrs[next++]));
                            if (_enter[w] != -1)
                                continue;
                            _enter[w] = clock++;
                            _children[v].push_back(w);
                            stack.emplace_back(w, 0);
                        }
                    }
                    return roots;
                }

                auto width(const Piece & p) -> int
                {
                    if (auto it = _memo.find(p); it != _memo.end())
                        return it->second;

                    auto s = shape(p);
                    int result;
                    if (s.branches.empty())
                        result = 0;
                    else if (s.m == 0 || s.heavy >= 3)
                        result = s.m + 1;
                    else if (s.heavy == 2) {
                        result = s.m;
                        for (std::size_t i = 0; i < s.branches.size(); ++i)
                            if (s.widths[i] == s.m && critical(s.branches[i], s.m))
                                result = s.m + 1;
                    }
                    else {
                        result = s.m;
                        auto heavy = std::find(s.widths.begin(), s.widths.end(), s.m) - s.widths.begin();
                        if (auto w = critical(s.branches[heavy], s.m))
                            if (width(without(p, w->x)) >= s.m)
                                result = s.m + 1;
                    }
                    _memo.emplace(p, result);
                    return result;
                }

                auto decompose(const Piece & p) -> vector<VertexSet>
                {
                    auto s = shape(p);
                    Vertex here = _g.vertices()[p.x];
                    if (s.branches.empty())
                        return {VertexSet{here}};

                    vector<VertexSet> bags;
                    if (width(p) == s.m + 1) {
                        for (auto & q : s.branches)
                            emit(bags, decompose(q), p.x);
                        return bags;
                    }

                    // Width m: lay out a main path whose hanging parts all
                    // have width below m, then add the path vertex to each.
                    vector<Piece> path;
                    optional<Piece> extra_hang;
                    int extra_at = -1;
                    vector<int> heavy;
                    for (std::size_t i = 0; i < s.branches.size(); ++i)
                        if (s.widths[i] == s.m)
                            heavy.push_back(int(i));

                    auto append_reversed = [&] (const vector<Piece> & c) { path.insert(path.end(), c.rbegin(), c.rend()); };
                    if (heavy.size() == 2) {
                        append_reversed(chain(s.branches[heavy[0]], s.m));
                        path.push_back(p);
                        auto down = chain(s.branches[heavy[1]], s.m);
                        path.insert(path.end(), down.begin(), down.end());
                    }
                    else if (auto w = critical(s.branches[heavy[0]], s.m)) {
                        vector<Piece> twin;
                        for (auto & q : pieces_below(*w))
                            if (width(q) == s.m)
                                twin.push_back(q);
                        append_reversed(chain(twin[0], s.m));
                        path.push_back(*w);
                        auto down = chain(twin[1], s.m);
                        path.insert(path.end(), down.begin(), down.end());
                        extra_hang = without(p, w->x);
                        extra_at = w->x;
                    }
                    else {
                        path.push_back(p);
                        auto down = chain(s.branches[heavy[0]], s.m);
                        path.insert(path.end(), down.begin(), down.end());
                    }

                    for (std::size_t i = 0; i < path.size(); ++i) {
                        auto on_path = [&] (int v) {
                            return (i > 0 && path[i - 1].x == v) || (i + 1 < path.size() && path[i + 1].x == v);
                        };
                        for (auto & q : pieces_below(path[i]))
                            if (! on_path(q.x))
                                emit(bags, decompose(q), path[i].x);
                        if (path[i].x == extra_at)
                            emit(bags, decompose(*extra_hang), extra_at);
                        if (i + 1 < path.size())
                            bags.push_back(make_vertex_set({_g.vertices()[path[i].x], _g.vertices()[path[i + 1].x]}));
                        else if (path.size() == 1 && bags.empty())
                            bags.push_back(VertexSet{here});
                    }
                    return bags;
                }
        };
    }

    auto tree_pathwidth(const Graph & g) -> WidthResult
    {
        if (! is_forest(g))
            throw GraphError{"tree_pathwidth needs a forest"};
        ForestWidth f{g};
        WidthResult result;
        for (int r : f.root_all()) {
            Piece whole{r, {}};
            result.width = std::max(result.width, f.width(whole));
            auto bags = f.decompose(whole);
            result.decomposition.bags.insert(result.decomposition.bags.end(), bags.begin(), bags.end());
        }
        if (result.decomposition.width() != result.width)
            throw GraphError{"internal error: forest decomposition width mismatch"};
        return result;
    }
}
