/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/bitset.hh>
#include <pathforge/patterns.hh>

#include <algorithm>
#include <set>

using std::map;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace pathforge
{
    auto Embedding::image() const -> VertexSet
    {
        vector<Vertex> result;
        for (auto & [p, h] : map)
            result.push_back(h);
        return make_vertex_set(std::move(result));
    }

    auto validate_embedding(const Embedding & e) -> vector<string>
    {
        vector<string> problems;
        set<Vertex> images;
        for (auto p : e.pattern.vertices()) {
            auto it = e.map.find(p);
            if (it == e.map.end())
                problems.push_back("pattern vertex " + to_string(p) + " is unmapped");
            else if (! e.host.has_vertex(it->second))
                problems.push_back("image of " + to_string(p) + " is not a host vertex");
            else if (! images.insert(it->second).second)
                problems.push_back("image " + to_string(it->second) + " used twice");
        }
        if (e.map.size() != e.pattern.order())
            problems.push_back("map has entries for non-pattern vertices");
        if (! problems.empty())
            return problems;

        auto & ps = e.pattern.vertices();
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j) {
                bool want = e.pattern.adjacent(ps[i], ps[j]);
                bool have = e.host.adjacent(e.map.at(ps[i]), e.map.at(ps[j]));
                if (want && ! have)
                    problems.push_back("edge " + to_string(ps[i]) + "-" + to_string(ps[j]) + " is not preserved");
                else if (e.induced && have && ! want)
                    problems.push_back("non-edge " + to_string(ps[i]) + "-" + to_string(ps[j]) + " maps to a host edge");
            }
        return problems;
    }

    namespace
    {
        class InducedSearch
        {
            private:
                const Graph & _host;
                const Graph & _pattern;
                Budget & _budget;
                bool _induced;

                vector<Bitset> _rows;
                vector<std::size_t> _order;                 // pattern indices
                vector<vector<char>> _pattern_adjacent;
                vector<std::size_t> _assignment;            // pattern index -> host index
                Bitset _used;

            public:
                InducedSearch(const Graph & host, const Graph & pattern, Budget & budget, bool induced) :
                    _host(host),
                    _pattern(pattern),
                    _budget(budget),
                    _induced(induced),
                    _assignment(pattern.order()),
                    _used(host.order())
                {
                    for (std::size_t i = 0; i < host.order(); ++i) {
                        Bitset row(host.order());
                        for (auto w : host.neighbours_by_index(i))
                            row.set(host.index_of(w));
                        _rows.push_back(std::move(row));
                    }

                    auto np = pattern.order();
                    _pattern_adjacent.assign(np, vector<char>(np, 0));
                    for (std::size_t i = 0; i < np; ++i)
                        for (auto w : pattern.neighbours_by_index(i))
                            _pattern_adjacent[i][pattern.index_of(w)] = 1;

                    // highest degree first; among the rest prefer vertices
                    // tied to many already ordered ones, then higher degree
                    vector<char> taken(np, 0);
                    vector<int> links(np, 0);
                    for (std::size_t step = 0; step < np; ++step) {
                        std::size_t best = np;
                        for (std::size_t i = 0; i < np; ++i) {
                            if (taken[i])
                                continue;
                            if (best == np || links[i] > links[best]
                                    || (links[i] == links[best] && pattern.neighbours_by_index(i).size() > pattern.neighbours_by_index(best).size()))
                                best = i;
                        }
                        taken[best] = 1;
                        _order.push_back(best);
                        for (auto w : pattern.neighbours_by_index(best))
                            ++links[pattern.index_of(w)];
                    }
                }

                auto run(std::size_t depth) -> SearchStatus
                {
                    if (depth == _order.size())
                        return SearchStatus::Found;
                    if (! _budget.spend())
                        return SearchStatus::Exhausted;

                    auto p = _order[depth];
                    Bitset domain(_host.order(), true);
                    domain.and_not(_used);
                    for (std::size_t d = 0; d < depth; ++d) {
                        auto q = _order[d];
                        if (_pattern_adjacent[p][q])
                            domain &= _rows[_assignment[q]];
                        else if (_induced)
                            domain.and_not(_rows[_assignment[q]]);
                    }

                    auto need = _pattern.neighbours_by_index(p).size();
                    for (auto h = domain.find_first(); h < domain.size(); h = domain.find_next(h + 1)) {
                        if (_host.neighbours_by_index(h).size() < need)
                            continue;
                        _assignment[p] = h;
                        _used.set(h);
                        auto status = run(depth + 1);
                        _used.reset(h);
                        if (status != SearchStatus::None)
                            return status;
                    }
                    return SearchStatus::None;
                }

                auto embedding() const -> Embedding
                {
                    Embedding e{_pattern, _host, {}, _induced};
                    for (std::size_t i = 0; i < _pattern.order(); ++i)
                        e.map.emplace(_pattern.vertices()[i], _host.vertices()[_assignment[i]]);
                    return e;
                }
        };
    }

    auto find_induced_subgraph(const Graph & host, const Graph & pattern, Budget & budget, bool induced) -> SearchResult<Embedding>
    {
        SearchResult<Embedding> result;
        if (pattern.order() > host.order())
            return result;
        InducedSearch search{host, pattern, budget, induced};
        result.status = search.run(0);
        if (result.found())
            result.value = search.embedding();
        return result;
    }

    auto ramsey_detect(const Graph & g, int n, Budget & budget, int tree_height) -> RamseyResult
    {
        if (n < 1)
            throw GraphError{"ramsey_detect needs n >= 1"};
        if (tree_height < 0)
            tree_height = n;

        RamseyResult result;
        bool gave_up = false;
        vector<std::pair<string, Graph>> targets{
            {"complete", complete_graph(n)},
            {"complete-bipartite", complete_bipartite_graph(n, n)},
            {"kary-tree", k_ary_tree(tree_height).graph()}};
        for (auto & [kind, pattern] : targets) {
            auto found = find_induced_subgraph(g, pattern, budget, true);
            if (found.found()) {
                result.status = SearchStatus::Found;
                result.kind = kind;
                result.embedding = std::move(found.value);
                return result;
            }
            if (found.status == SearchStatus::Exhausted)
                gave_up = true;
        }
        result.status = gave_up ? SearchStatus::Exhausted : SearchStatus::None;
        return result;
    }
}
