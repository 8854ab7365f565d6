/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/patterns.hh>

#include <algorithm>
#include <limits>
#include <set>

using std::map;
using std::set;
using std::string;
using std::vector;

namespace pathforge
{
    auto validate_subdivision_embedding(const SubdivisionEmbedding & e) -> vector<string>
    {
        return validate_subdivision(e.host, e.cert, e.induced ? EmbeddingMode::Induced : EmbeddingMode::Subgraph);
    }

    namespace
    {
        struct Step
        {
            Vertex from, to;        // base vertices
            bool closing;           // to is already placed when this runs
            int min_length, max_length;
        };

        class SubdivisionSearch
        {
            private:
                const Graph & _host;
                const Graph & _base;
                const SubdivisionQuery & _query;
                Budget & _budget;

                vector<Step> _steps;
                Vertex _root;

                // per host index
                vector<int> _owner;             // -1 free, otherwise base vertex or -2 for path interiors
                vector<char> _allowed, _reserved;
                long _free_allowed = 0;

                map<Vertex, std::size_t> _image;        // base vertex -> host index
                map<Edge, vector<std::size_t>> _paths;
                set<Edge> _forced_direct;
                std::size_t _pending_interior = 0;      // minimum interiors still needed

                bool _exhausted = false;

                auto hidx(Vertex v) const -> std::size_t { return _host.index_of(v); }

                auto length_of(const map<Edge, int> & m, Edge e, int fallback) const -> int
                {
                    auto it = m.find(e);
                    return it == m.end() ? fallback : it->second;
                }

                auto unplaced_count() const -> std::size_t { return _base.order() - _image.size(); }

                // Induced check for adding host index y with predecessor
                // pred. Returns false on a forbidden adjacency. For a branch
                // vertex, adjacencies to placed branch images are recorded as
                // forced direct edges in forced.
                auto induced_ok(std::size_t y, std::size_t pred, std::optional<std::size_t> target,
                        std::optional<Vertex> new_branch, Edge current, vector<Edge> & forced, bool & touches_target) const -> bool
                {
                    touches_target = false;
                    for (auto wv : _host.neighbours_by_index(y)) {
                        auto w = hidx(wv);
                        if (w == pred || _owner[w] == -1)
                            continue;
                        if (target && w == *target) {
                            touches_target = true;
                            continue;
                        }
                        if (new_branch && _owner[w] >= 0) {
                            Vertex t = _owner[w];
                            auto e = make_edge(*new_branch, t);
                            if (e != current && _base.adjacent(*new_branch, t) && ! _paths.count(e)
                                    && length_of(_query.min_length, e, 1) <= 1) {
                                forced.push_back(e);
                                continue;
                            }
                        }
                        return false;
                    }
                    return true;
                }

                auto place(std::size_t step_index) -> bool;

                auto route(std::size_t step_index, vector<std::size_t> & path) -> bool
                {
                    if (! _budget.spend()) {
                        _exhausted = true;
                        return false;
                    }

                    auto & s = _steps[step_index];
                    auto e = make_edge(s.from, s.to);
                    int length = int(path.size()) - 1;
                    auto x = path.back();
                    std::optional<std::size_t> target;
                    if (s.closing)
                        target = _image.at(s.to);

                    // the interior just added touches the target: close now
                    bool must_close = false;
                    if (_query.induced && s.closing && length >= 1) {
                        for (auto wv : _host.neighbours_by_index(x))
                            if (hidx(wv) == *target)
                                must_close = true;
                    }

                    for (auto yv : _host.neighbours_by_index(x)) {
                        auto y = hidx(yv);
                        if (target && y == *target) {
                            if (length + 1 < s.min_length || length + 1 > s.max_length)
                                continue;
                            path.push_back(y);
                            _paths.emplace(e, path);
                            bool ok = place(step_index + 1);
                            if (! ok)
                                _paths.erase(e);
                            path.pop_back();
                            if (ok || _exhausted)
                                return ok;
                            continue;
                        }
                        if (must_close || _owner[y] != -1 || ! _allowed[y])
                            continue;

                        bool touches = false;
                        // end the path here with a new branch vertex
                        if (! s.closing && length + 1 >= s.min_length && length + 1 <= s.max_length) {
                            auto pin = _query.pinned.find(s.to);
                            bool pin_ok = pin == _query.pinned.end() ? ! _reserved[y] : hidx(pin->second) == y;
                            vector<Edge> forced;
                            if (pin_ok && _host.neighbours_by_index(y).size() >= _base.degree(s.to)
                                    && (! _query.induced || induced_ok(y, x, std::nullopt, s.to, e, forced, touches))) {
                                path.push_back(y);
                                _owner[y] = s.to;
                                _image.emplace(s.to, y);
                                _paths.emplace(e, path);
                                for (auto f : forced)
                                    _forced_direct.insert(f);
                                bool ok = place(step_index + 1);
                                if (! ok) {
                                    for (auto f : forced)
                                        _forced_direct.erase(f);
                                    _paths.erase(e);
                                    _image.erase(s.to);
                                    _owner[y] = -1;
                                }
                                path.pop_back();
                                if (ok || _exhausted)
                                    return ok;
                            }
                        }

                        // or continue through y as an interior vertex
                        if (length + 2 <= s.max_length && ! _reserved[y] && ! _forced_direct.count(e)) {
                            vector<Edge> forced;
                            if (_query.induced && ! induced_ok(y, x, target, std::nullopt, e, forced, touches))
                                continue;
                            if (_query.induced && touches && length + 2 < s.min_length)
                                continue;
                            path.push_back(y);
                            _owner[y] = -2;
                            --_free_allowed;
                            bool ok = route(step_index, path);
                            if (! ok) {
                                ++_free_allowed;
                                _owner[y] = -1;
                            }
                            path.pop_back();
                            if (ok || _exhausted)
                                return ok;
                        }
                    }
                    return false;
                }

            public:
                SubdivisionSearch(const Graph & host, const Graph & base, const SubdivisionQuery & query, Budget & budget) :
                    _host(host),
                    _base(base),
                    _query(query),
                    _budget(budget),
                    _owner(host.order(), -1),
                    _allowed(host.order(), 1),
                    _reserved(host.order(), 0)
                {
                    if (query.allowed) {
                        std::fill(_allowed.begin(), _allowed.end(), 0);
                        for (auto v : *query.allowed)
                            if (host.has_vertex(v))
                                _allowed[hidx(v)] = 1;
                    }
                    _free_allowed = std::count(_allowed.begin(), _allowed.end(), 1);
                    for (auto & [b, h] : query.pinned) {
                        if (! base.has_vertex(b) || ! host.has_vertex(h))
                            throw GraphError{"pinned vertex outside base or host"};
                        _reserved[hidx(h)] = 1;
                    }

                    if (! query.pinned.empty())
                        _root = query.pinned.begin()->first;
                    else {
                        _root = base.vertices().front();
                        for (auto v : base.vertices())
                            if (base.degree(v) > base.degree(_root))
                                _root = v;
                    }

                    // breadth-first schedule over the base
                    set<Vertex> placed{_root};
                    set<Edge> scheduled;
                    vector<Vertex> queue{_root};
                    for (std::size_t head = 0; head < queue.size(); ++head) {
                        auto u = queue[head];
                        for (auto w : base.neighbours(u)) {
                            auto e = make_edge(u, w);
                            if (! scheduled.insert(e).second)
                                continue;
                            bool closing = placed.count(w);
                            if (! closing) {
                                placed.insert(w);
                                queue.push_back(w);
                            }
                            _steps.push_back(Step{u, w, closing, length_of(query.min_length, e, 1),
                                    length_of(query.max_length, e, std::numeric_limits<int>::max() / 2)});
                        }
                    }
                    if (placed.size() != base.order())
                        throw GraphError{"subdivision search needs a connected base"};
                    for (auto & s : _steps)
                        _pending_interior += std::max(0, s.min_length - 1);
                }

                auto run() -> SearchStatus
                {
                    if (_base.order() > _host.order())
                        return SearchStatus::None;
                    vector<std::size_t> roots;
                    if (auto pin = _query.pinned.find(_root); pin != _query.pinned.end())
                        roots.push_back(hidx(pin->second));
                    else
                        for (std::size_t i = 0; i < _host.order(); ++i)
                            if (! _reserved[i])
                                roots.push_back(i);

                    for (auto r : roots) {
                        if (! _allowed[r] || _host.neighbours_by_index(r).size() < _base.degree(_root))
                            continue;
                        _owner[r] = _root;
                        _image.emplace(_root, r);
                        --_free_allowed;
                        if (place(0))
                            return SearchStatus::Found;
                        ++_free_allowed;
                        _image.erase(_root);
                        _owner[r] = -1;
                        if (_exhausted)
                            return SearchStatus::Exhausted;
                    }
                    return SearchStatus::None;
                }

                auto embedding() const -> SubdivisionEmbedding
                {
                    SubdivisionEmbedding result{_host, SubdivisionCert{_base, {}, {}}, _query.induced};
                    for (auto & [b, h] : _image)
                        result.cert.branch_map.emplace(b, _host.vertices()[h]);
                    for (auto & [e, p] : _paths) {
                        vector<Vertex> path;
                        for (auto h : p)
                            path.push_back(_host.vertices()[h]);
                        if (_host.vertices()[p.front()] != result.cert.branch_map.at(e.first))
                            std::reverse(path.begin(), path.end());
                        result.cert.path_map.emplace(e, std::move(path));
                    }
                    return result;
                }
        };

        auto SubdivisionSearch::place(std::size_t step_index) -> bool
        {
            if (step_index == _steps.size())
                return true;
            if (long(unplaced_count() + _pending_interior) > _free_allowed)
                return false;
            auto & s = _steps[step_index];
            std::size_t need = std::max(0, s.min_length - 1);
            vector<std::size_t> path{_image.at(s.from)};
            if (! s.closing)
                --_free_allowed;
            _pending_interior -= need;
            bool ok = route(step_index, path);
            if (! ok) {
                _pending_interior += need;
                if (! s.closing)
                    ++_free_allowed;
            }
            return ok;
        }
    }

    auto find_subdivision(const Graph & host, const Graph & base, const SubdivisionQuery & query, Budget & budget)
        -> SearchResult<SubdivisionEmbedding>
    {
        SearchResult<SubdivisionEmbedding> result;
        if (base.empty())
            throw GraphError{"subdivision search needs a nonempty base"};
        SubdivisionSearch search{host, base, query, budget};
        result.status = search.run();
        if (result.found())
            result.value = search.embedding();
        return result;
    }

    auto find_induced_subdivision(const Graph & host, const Graph & base, Budget & budget,
            const map<Edge, int> & min_length, bool induced) -> SearchResult<SubdivisionEmbedding>
    {
        SubdivisionQuery query;
        query.induced = induced;
        query.min_length = min_length;
        return find_subdivision(host, base, query, budget);
    }
}
