/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/minors.hh>
#include <pathforge/patterns.hh>

#include <algorithm>
#include <functional>

using std::vector;

namespace pathforge
{
    namespace
    {
        class BranchSetSearch
        {
            private:
                const Graph & _host;
                const Graph & _pattern;
                Budget & _budget;
                bool _induced;

                vector<std::size_t> _order;                 // pattern indices
                vector<int> _position;                      // pattern index -> place in _order
                vector<int> _owner;                         // host index -> pattern index or -1
                vector<vector<std::size_t>> _sets;
                std::size_t _free;
                std::size_t _cap = 1;
                bool _hit_cap = false, _exhausted = false;

                auto host_nbrs(std::size_t x) const { return _host.neighbours_by_index(x); }
                auto hidx(Vertex v) const -> std::size_t { return _host.index_of(v); }

                auto acceptable(std::size_t depth, const vector<std::size_t> & xs, const vector<char> & in_x) -> bool
                {
                    auto p = _order[depth];
                    vector<char> touches(_pattern.order(), 0);
                    std::size_t free_contacts = 0;
                    vector<char> counted(_host.order(), 0);
                    for (auto x : xs)
                        for (auto yv : host_nbrs(x)) {
                            auto y = hidx(yv);
                            if (in_x[y])
                                continue;
                            if (_owner[y] >= 0)
                                touches[_owner[y]] = 1;
                            else if (! counted[y]) {
                                counted[y] = 1;
                                ++free_contacts;
                            }
                        }

                    std::size_t unplaced_nbrs = 0;
                    for (auto wv : _pattern.neighbours_by_index(p)) {
                        auto w = _pattern.index_of(wv);
                        if (_position[w] < int(depth)) {
                            if (! touches[w])
                                return false;
                        }
                        else
                            ++unplaced_nbrs;
                    }
                    if (free_contacts < unplaced_nbrs)
                        return false;
                    if (_induced)
                        for (std::size_t q = 0; q < _pattern.order(); ++q)
                            if (touches[q] && q != p && ! _pattern.adjacent(_pattern.vertices()[p], _pattern.vertices()[q]))
                                return false;
                    return _free - xs.size() >= _order.size() - depth - 1;
                }

                // Connected sets of free vertices with anchor as smallest
                // index, each produced once.
                auto grow(std::size_t depth, vector<std::size_t> & xs, vector<char> & in_x, vector<char> & near,
                        vector<std::size_t> extension, std::size_t anchor) -> bool
                {
                    if (! _budget.spend()) {
                        _exhausted = true;
                        return false;
                    }
                    if (acceptable(depth, xs, in_x)) {
                        for (auto x : xs)
                            _owner[x] = int(_order[depth]);
                        _sets[_order[depth]] = xs;
                        _free -= xs.size();
                        bool ok = place(depth + 1);
                        _free += xs.size();
                        for (auto x : xs)
                            _owner[x] = -1;
                        if (ok || _exhausted)
                            return ok;
                    }
                    if (xs.size() == _cap) {
                        _hit_cap = true;
                        return false;
                    }

                    while (! extension.empty()) {
                        auto w = extension.back();
                        extension.pop_back();
                        auto next = extension;
                        vector<std::size_t> marked;
                        for (auto uv : host_nbrs(w)) {
                            auto u = hidx(uv);
                            if (u > anchor && _owner[u] == -1 && ! in_x[u] && ! near[u]) {
                                next.push_back(u);
                                near[u] = 1;
                                marked.push_back(u);
                            }
                        }
                        xs.push_back(w);
                        in_x[w] = 1;
                        bool ok = grow(depth, xs, in_x, near, std::move(next), anchor);
                        in_x[w] = 0;
                        xs.pop_back();
                        for (auto u : marked)
                            near[u] = 0;
                        if (ok || _exhausted)
                            return ok;
                    }
                    return false;
                }

                auto place(std::size_t depth) -> bool
                {
                    if (depth == _order.size())
                        return true;
                    for (std::size_t anchor = 0; anchor < _host.order(); ++anchor) {
                        if (_owner[anchor] != -1)
                            continue;
                        vector<std::size_t> xs{anchor};
                        vector<char> in_x(_host.order(), 0), near(_host.order(), 0);
                        in_x[anchor] = 1;
                        near[anchor] = 1;
                        vector<std::size_t> extension;
                        for (auto uv : host_nbrs(anchor)) {
                            auto u = hidx(uv);
                            if (u > anchor && _owner[u] == -1) {
                                extension.push_back(u);
                                near[u] = 1;
                            }
                        }
                        if (grow(depth, xs, in_x, near, std::move(extension), anchor) || _exhausted)
                            return ! _exhausted;
                    }
                    return false;
                }

            public:
                BranchSetSearch(const Graph & host, const Graph & pattern, Budget & budget, bool induced) :
                    _host(host),
                    _pattern(pattern),
                    _budget(budget),
                    _induced(induced),
                    _position(pattern.order(), -1),
                    _owner(host.order(), -1),
                    _sets(pattern.order()),
                    _free(host.order())
                {
                    // breadth-first from the highest degree vertex of each
                    // component
                    while (_order.size() < pattern.order()) {
                        std::size_t start = pattern.order();
                        for (std::size_t i = 0; i < pattern.order(); ++i)
                            if (_position[i] == -1 && (start == pattern.order()
                                        || pattern.neighbours_by_index(i).size() > pattern.neighbours_by_index(start).size()))
                                start = i;
                        _position[start] = int(_order.size());
                        _order.push_back(start);
                        for (std::size_t head = _order.size() - 1; head < _order.size(); ++head)
                            for (auto wv : pattern.neighbours_by_index(_order[head])) {
                                auto w = pattern.index_of(wv);
                                if (_position[w] == -1) {
                                    _position[w] = int(_order.size());
                                    _order.push_back(w);
                                }
                            }
                    }
                }

                auto run() -> SearchStatus
                {
                    for (_cap = 1; _cap <= _host.order(); ++_cap) {
                        _hit_cap = false;
                        if (place(0))
                            return SearchStatus::Found;
                        if (_exhausted)
                            return SearchStatus::Exhausted;
                        if (! _hit_cap)
                            break;
                    }
                    return SearchStatus::None;
                }

                auto model() const -> MinorModel
                {
                    MinorModel m{_pattern, _host, {}, _induced};
                    for (std::size_t p = 0; p < _pattern.order(); ++p) {
                        vector<Vertex> xs;
                        for (auto x : _sets[p])
                            xs.push_back(_host.vertices()[x]);
                        m.branch_sets.emplace(_pattern.vertices()[p], make_vertex_set(std::move(xs)));
                    }
                    return m;
                }
        };
    }

    auto find_minor_model(const Graph & g, const Graph & pattern, Budget & budget, bool induced) -> SearchResult<MinorModel>
    {
        SearchResult<MinorModel> result;
        if (pattern.empty()) {
            result.status = SearchStatus::Found;
            result.value = MinorModel{pattern, g, {}, induced};
            return result;
        }
        if (pattern.order() > g.order())
            return result;

        if (! induced && is_connected(pattern) && pattern.max_degree() <= 3) {
            // for maximum degree 3 a minor is a topological minor
            SubdivisionQuery query;
            query.induced = false;
            auto found = find_subdivision(g, pattern, query, budget);
            result.status = found.status;
            if (found.found()) {
                auto & cert = found.value.cert;
                result.value = MinorModel{pattern, g, {}, false};
                std::map<Vertex, vector<Vertex>> sets;
                for (auto & [b, h] : cert.branch_map)
                    sets[b].push_back(h);
                for (auto & [e, path] : cert.path_map)
                    sets[e.first].insert(sets[e.first].end(), path.begin() + 1, path.end() - 1);
                for (auto & [b, xs] : sets)
                    result.value.branch_sets.emplace(b, make_vertex_set(xs));
            }
            return result;
        }

        BranchSetSearch search{g, pattern, budget, induced};
        result.status = search.run();
        if (result.found())
            result.value = search.model();
        return result;
    }
}
