/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/minors.hh>
#include <pathforge/width.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

using std::map;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace pathforge
{
    auto PathDecomposition::width() const -> int
    {
        int result = -1;
        for (auto & b : bags)
            result = std::max(result, int(b.size()) - 1);
        return result;
    }

    auto validate_path_decomposition(const Graph & g, const PathDecomposition & pd) -> vector<string>
    {
        vector<string> problems;
        map<Vertex, std::pair<std::size_t, std::size_t>> span;
        map<Vertex, std::size_t> occurrences;
        for (std::size_t i = 0; i < pd.bags.size(); ++i)
            for (auto v : pd.bags[i]) {
                if (! g.has_vertex(v)) {
                    problems.push_back("bag " + to_string(i) + " holds unknown vertex " + to_string(v));
                    continue;
                }
                auto [it, fresh] = span.emplace(v, std::pair{i, i});
                if (! fresh)
                    it->second.second = i;
                ++occurrences[v];
            }
        for (auto v : g.vertices()) {
            auto it = span.find(v);
            if (it == span.end())
                problems.push_back("vertex " + to_string(v) + " is in no bag");
            else if (it->second.second - it->second.first + 1 != occurrences[v])
                problems.push_back("bags holding vertex " + to_string(v) + " are not contiguous");
        }
        for (auto [u, v] : g.edges()) {
            bool covered = false;
            for (auto & b : pd.bags)
                if (std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v)) {
                    covered = true;
                    break;
                }
            if (! covered)
                problems.push_back("edge " + to_string(u) + "-" + to_string(v) + " is in no bag");
        }
        return problems;
    }

    namespace
    {
        // Vertex separation number of one connected component by DP over
        // subsets S of the vertices placed first:
        //   f(S) = max(|boundary(S)|, min_{v in S} f(S - v)),
        // where boundary(S) holds the members of S with a neighbour outside.
        auto component_exact(const Graph & g, const VertexSet & component) -> PathDecomposition
        {
            auto n = component.size();
            vector<std::uint32_t> adjacency(n, 0);
            for (std::size_t i = 0; i < n; ++i)
                for (auto w : g.neighbours(component[i])) {
                    auto j = std::lower_bound(component.begin(), component.end(), w) - component.begin();
                    adjacency[i] |= std::uint32_t{1} << j;
                }

            auto boundary = [&] (std::uint32_t s) {
                std::uint32_t result = 0;
                for (auto rest = s; rest; rest &= rest - 1) {
                    int i = std::countr_zero(rest);
                    if (adjacency[i] & ~s)
                        result |= std::uint32_t{1} << i;
                }
                return result;
            };

            std::size_t states = std::size_t{1} << n;
            vector<std::uint8_t> best(states, 0), last(states, 0);
            for (std::size_t s = 1; s < states; ++s) {
                std::uint8_t choice_value = 0xff, choice = 0;
                for (auto rest = std::uint32_t(s); rest; rest &= rest - 1) {
                    int v = std::countr_zero(rest);
                    auto value = best[s & ~(std::size_t{1} << v)];
                    if (value < choice_value) {
                        choice_value = value;
                        choice = std::uint8_t(v);
                    }
                }
                auto here = std::uint8_t(std::popcount(boundary(std::uint32_t(s))));
                best[s] = std::max(here, choice_value);
                last[s] = choice;
            }

            vector<int> order;
            for (auto s = std::uint32_t(states - 1); s; s &= ~(std::uint32_t{1} << last[s]))
                order.push_back(last[s]);
            std::reverse(order.begin(), order.end());

            PathDecomposition pd;
            std::uint32_t placed = 0;
            for (int v : order) {
                vector<Vertex> bag{component[v]};
                for (auto rest = boundary(placed); rest; rest &= rest - 1)
                    bag.push_back(component[std::countr_zero(rest)]);
                pd.bags.push_back(make_vertex_set(std::move(bag)));
                placed |= std::uint32_t{1} << v;
            }
            return pd;
        }
    }

    namespace
    {
        auto order_to_decomposition(const VertexSet & component, const vector<int> & order,
                const std::function<std::uint64_t (std::uint64_t)> & boundary) -> PathDecomposition
        {
            PathDecomposition pd;
            std::uint64_t placed = 0;
            for (int v : order) {
                vector<Vertex> bag{component[v]};
                for (auto rest = boundary(placed); rest; rest &= rest - 1)
                    bag.push_back(component[std::countr_zero(rest)]);
                pd.bags.push_back(make_vertex_set(std::move(bag)));
                placed |= std::uint64_t{1} << v;
            }
            return pd;
        }

        // Depth-first over prefixes whose boundary stays within width,
        // remembering prefixes already known to fail. A vertex whose
        // neighbours are all placed never hurts, so it goes first.
        class SeparationSearch
        {
            private:
                vector<std::uint64_t> _adjacency;
                std::uint64_t _full;
                int _width = 0;
                std::unordered_set<std::uint64_t> _failed;
                vector<int> _order;

                auto extend(std::uint64_t s) -> bool
                {
                    if (s == _full)
                        return true;
                    if (_failed.count(s))
                        return false;
                    for (auto rest = _full & ~s; rest; rest &= rest - 1) {
                        int v = std::countr_zero(rest);
                        if ((_adjacency[v] & ~s) == 0) {
                            _order.push_back(v);
                            if (extend(s | (std::uint64_t{1} << v)))
                                return true;
                            _order.pop_back();
                            _failed.insert(s);
                            return false;
                        }
                    }
                    for (auto rest = _full & ~s; rest; rest &= rest - 1) {
                        int v = std::countr_zero(rest);
                        auto t = s | (std::uint64_t{1} << v);
                        if (std::popcount(boundary(t)) > _width)
                            continue;
                        _order.push_back(v);
                        if (extend(t))
                            return true;
                        _order.pop_back();
                    }
                    _failed.insert(s);
                    return false;
                }

            public:
                explicit SeparationSearch(vector<std::uint64_t> adjacency) :
                    _adjacency(std::move(adjacency)),
                    _full(_adjacency.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << _adjacency.size()) - 1)
                {
                }

                auto boundary(std::uint64_t s) const -> std::uint64_t
                {
                    std::uint64_t result = 0;
                    for (auto rest = s; rest; rest &= rest - 1) {
                        int i = std::countr_zero(rest);
                        if (_adjacency[i] & ~s)
                            result |= std::uint64_t{1} << i;
                    }
                    return result;
                }

                auto run() -> vector<int>
                {
                    for (_width = 0; ; ++_width) {
                        _failed.clear();
                        _order.clear();
                        if (extend(0))
                            return _order;
                    }
                }
        };

        auto component_search(const Graph & g, const VertexSet & component) -> PathDecomposition
        {
            vector<std::uint64_t> adjacency(component.size(), 0);
            for (std::size_t i = 0; i < component.size(); ++i)
                for (auto w : g.neighbours(component[i])) {
                    auto j = std::lower_bound(component.begin(), component.end(), w) - component.begin();
                    adjacency[i] |= std::uint64_t{1} << j;
                }
            SeparationSearch search{std::move(adjacency)};
            auto order = search.run();
            return order_to_decomposition(component, order, [&] (std::uint64_t s) { return search.boundary(s); });
        }

        auto run_components(const Graph & g, std::size_t limit, bool table) -> WidthResult
        {
            auto components = connected_components(g);
            for (auto & c : components)
                if (c.size() > limit)
                    throw SizeLimitError{"component with " + to_string(c.size()) + " vertices exceeds the exact solver bound of "
                        + to_string(limit)};

            WidthResult result;
            for (auto & c : components) {
                auto pd = table && c.size() <= table_dp_limit ? component_exact(g, c) : component_search(g, c);
                result.decomposition.bags.insert(result.decomposition.bags.end(), pd.bags.begin(), pd.bags.end());
            }
            result.width = result.decomposition.width();
            return result;
        }
    }

    auto pathwidth_exact(const Graph & g, std::size_t max_component_order) -> WidthResult
    {
        return run_components(g, std::min(max_component_order, search_limit), true);
    }

    auto pathwidth_by_search(const Graph & g) -> WidthResult
    {
        return run_components(g, search_limit, false);
    }

    auto pathwidth_lower_bound_by_minor(const Graph & g, const MinorModel & model, int pattern_pathwidth) -> int
    {
        if (! (model.host == g))
            throw GraphError{"model host differs from the graph"};
        auto problems = validate_model(model);
        if (! problems.empty())
            throw GraphError{"invalid minor model: " + problems.front().detail};
        return pattern_pathwidth;
    }

    namespace
    {
        auto certify(const Graph & h, std::size_t exact_bound) -> optional<std::pair<WidthResult, string>>
        {
            if (is_forest(h))
                return std::pair{tree_pathwidth(h), string{"tree"}};
            for (auto & c : connected_components(h))
                if (c.size() > exact_bound)
                    return std::nullopt;
            return std::pair{pathwidth_exact(h, exact_bound), string{"exact"}};
        }

        // Spanning forest grown breadth-first from root; nobody exceeds
        // degree 3.
        auto capped_bfs_forest(const Graph & g, Vertex root) -> Graph
        {
            GraphBuilder builder;
            map<Vertex, int> degree;
            std::set<Vertex> seen;
            auto grow = [&] (Vertex start) {
                vector<Vertex> queue{start};
                seen.insert(start);
                builder.add_vertex(start);
                for (std::size_t head = 0; head < queue.size(); ++head) {
                    Vertex v = queue[head];
                    for (auto w : g.neighbours(v)) {
                        if (degree[v] >= 3)
                            break;
                        if (seen.count(w))
                            continue;
                        seen.insert(w);
                        builder.add_edge(v, w);
                        ++degree[v];
                        ++degree[w];
                        queue.push_back(w);
                    }
                }
            };
            grow(root);
            for (auto v : g.vertices())
                if (! seen.count(v))
                    grow(v);
            return builder.build();
        }
    }

    auto find_deg3_subgraph(const Graph & g, int k, Budget & budget, std::size_t exact_bound) -> Deg3Result
    {
        Deg3Result result;
        if (g.order() < std::size_t(std::max(k + 1, 0)) || (k >= 1 && g.size() == 0)) {
            result.status = SearchStatus::None;
            return result;
        }

        auto accept = [&] (const Graph & h, std::pair<WidthResult, string> && certified) {
            result.status = SearchStatus::Found;
            result.subgraph = h;
            result.width = std::move(certified.first);
            result.method = std::move(certified.second);
            return result;
        };

        if (auto whole = certify(g, exact_bound)) {
            if (whole->first.width < k) {
                result.status = SearchStatus::None;
                return result;
            }
            if (g.max_degree() <= 3)
                return accept(g, std::move(*whole));
        }

        for (auto root : g.vertices()) {
            if (! budget.spend(g.order() + g.size()))
                return result;
            auto forest = capped_bfs_forest(g, root);
            auto certified = certify(forest, exact_bound);
            if (certified && certified->first.width >= k)
                return accept(forest, std::move(*certified));
        }

        if (g.order() > exact_bound)
            return result;

        // random pruning of the surplus edges at high-degree vertices
        std::mt19937_64 rng{0x9e3779b97f4a7c15ull};
        while (budget.spend(g.order() * g.order() + 1)) {
            auto edges = g.edges();
            std::shuffle(edges.begin(), edges.end(), rng);
            map<Vertex, int> degree;
            vector<Edge> kept;
            for (auto e : edges)
                if (degree[e.first] < 3 && degree[e.second] < 3) {
                    ++degree[e.first];
                    ++degree[e.second];
                    kept.push_back(e);
                }
            auto h = Graph::from_edges(g.vertices(), kept);
            auto certified = certify(h, exact_bound);
            if (certified && certified->first.width >= k)
                return accept(h, std::move(*certified));
        }
        return result;
    }
}
