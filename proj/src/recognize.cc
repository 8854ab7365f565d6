/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/patterns.hh>

#include <algorithm>
#include <set>

using std::optional;
using std::string;
using std::vector;

namespace pathforge
{
    namespace
    {
        const vector<std::pair<Shape, string>> shape_names{
            {Shape::Complete, "complete"},
            {Shape::CompleteBipartite, "complete-bipartite"},
            {Shape::Claw, "claw"},
            {Shape::Fork, "fork"},
            {Shape::SemiFork, "semi-fork"},
            {Shape::Net, "net"},
            {Shape::Tripod, "tripod"},
            {Shape::SemiTripod, "semi-tripod"}};

        // Walks from start away from previous until the path ends; start is
        // included.
        auto walk(const Graph & g, Vertex previous, Vertex start) -> vector<Vertex>
        {
            vector<Vertex> result{start};
            Vertex here = start;
            while (true) {
                optional<Vertex> next;
                for (auto w : g.neighbours(here))
                    if (w != previous)
                        next = w;
                if (! next || g.degree(here) != 2)
                    return result;
                previous = here;
                here = *next;
                result.push_back(here);
            }
        }

        auto as_path(const Graph & g) -> optional<vector<Vertex>>
        {
            if (g.empty() || ! is_tree(g) || g.max_degree() > 2)
                return std::nullopt;
            Vertex end = g.vertices().front();
            for (auto v : g.vertices())
                if (g.degree(v) <= 1) {
                    end = v;
                    break;
                }
            vector<Vertex> result{end};
            Vertex previous = end;
            for (auto w : g.neighbours(end)) {
                auto rest = walk(g, previous, w);
                result.insert(result.end(), rest.begin(), rest.end());
            }
            return result;
        }

        auto strict_fork(const Graph & g) -> optional<vector<vector<Vertex>>>
        {
            if (g.empty() || ! is_tree(g))
                return std::nullopt;
            vector<Vertex> centres;
            for (auto v : g.vertices()) {
                if (g.degree(v) > 3)
                    return std::nullopt;
                if (g.degree(v) == 3)
                    centres.push_back(v);
            }
            if (centres.size() != 1)
                return std::nullopt;
            vector<vector<Vertex>> parts{{centres[0]}};
            for (auto w : g.neighbours(centres[0]))
                parts.push_back(walk(g, centres[0], w));
            return parts;
        }

        auto strict_semi_fork(const Graph & g) -> optional<vector<vector<Vertex>>>
        {
            if (g.empty() || ! is_connected(g) || g.size() != g.order() || g.max_degree() > 3)
                return std::nullopt;

            // peel leaves until only the cycle remains
            std::map<Vertex, std::size_t> degree;
            vector<Vertex> leaves;
            for (auto v : g.vertices()) {
                degree[v] = g.degree(v);
                if (degree[v] == 1)
                    leaves.push_back(v);
            }
            std::set<Vertex> peeled;
            while (! leaves.empty()) {
                auto v = leaves.back();
                leaves.pop_back();
                peeled.insert(v);
                for (auto w : g.neighbours(v))
                    if (! peeled.count(w) && --degree[w] == 1)
                        leaves.push_back(w);
            }
            vector<Vertex> cycle;
            for (auto v : g.vertices())
                if (! peeled.count(v))
                    cycle.push_back(v);
            if (cycle.size() != 3)
                return std::nullopt;
            for (auto v : g.vertices())
                if (peeled.count(v) && g.degree(v) > 2)
                    return std::nullopt;

            vector<vector<Vertex>> parts{cycle};
            for (auto t : cycle) {
                vector<Vertex> pendant{t};
                for (auto w : g.neighbours(t))
                    if (peeled.count(w)) {
                        auto rest = walk(g, t, w);
                        pendant.insert(pendant.end(), rest.begin(), rest.end());
                    }
                parts.push_back(std::move(pendant));
            }
            return parts;
        }

        auto single(const Graph & g, Shape shape, Strictness strictness) -> Recognition
        {
            Recognition r;
            bool inclusive = strictness == Strictness::Inclusive;
            auto accept_path = [&] () {
                if (auto p = as_path(g); p && inclusive) {
                    r.matches = true;
                    r.kind = "path";
                    r.parts = {*p};
                }
            };

            switch (shape) {
                case Shape::Fork:
                    if (auto parts = strict_fork(g)) {
                        r = {true, "fork", *parts};
                        return r;
                    }
                    accept_path();
                    return r;

                case Shape::SemiFork:
                    if (auto parts = strict_semi_fork(g)) {
                        r = {true, "semi-fork", *parts};
                        return r;
                    }
                    accept_path();
                    return r;

                case Shape::Net:
                    if (auto parts = strict_semi_fork(g); parts && g.order() == 6) {
                        bool unit = true;
                        for (std::size_t i = 1; i < 4; ++i)
                            unit = unit && (*parts)[i].size() == 2;
                        if (unit)
                            r = {true, "net", *parts};
                    }
                    return r;

                default:
                    return r;
            }
        }
    }

    auto parse_shape(const string & s) -> optional<Shape>
    {
        for (auto & [shape, name] : shape_names)
            if (name == s)
                return shape;
        return std::nullopt;
    }

    auto to_string(Shape shape) -> string
    {
        for (auto & [s, name] : shape_names)
            if (s == shape)
                return name;
        return "unknown";
    }

    auto parse_strictness(const string & s) -> optional<Strictness>
    {
        if (s == "strict")
            return Strictness::Strict;
        if (s == "inclusive")
            return Strictness::Inclusive;
        return std::nullopt;
    }

    auto to_string(Strictness s) -> string
    {
        return s == Strictness::Strict ? "strict" : "inclusive";
    }

    auto recognize(const Graph & g, Shape shape, Strictness strictness) -> Recognition
    {
        Recognition r;
        if (g.empty())
            return r;

        switch (shape) {
            case Shape::Complete:
                if (g.size() * 2 == g.order() * (g.order() - 1))
                    r = {true, "complete", {g.vertices()}};
                return r;

            case Shape::CompleteBipartite: {
                auto first = g.vertices().front();
                auto nbrs = g.neighbours(first);
                VertexSet b(nbrs.begin(), nbrs.end());
                vector<Vertex> a;
                for (auto v : g.vertices())
                    if (! std::binary_search(b.begin(), b.end(), v))
                        a.push_back(v);
                if (b.empty() && strictness == Strictness::Strict)
                    return r;
                if (g.size() != a.size() * b.size())
                    return r;
                for (auto u : a)
                    for (auto v : b)
                        if (! g.adjacent(u, v))
                            return r;
                r = {true, "complete-bipartite", {a, b}};
                return r;
            }

            case Shape::Claw:
                if (g.order() == 4 && g.size() == 3 && g.max_degree() == 3)
                    r = {true, "claw", {{}}};
                if (r.matches)
                    for (auto v : g.vertices()) {
                        if (g.degree(v) == 3)
                            r.parts[0].push_back(v);
                        else
                            r.parts.push_back({v});
                    }
                return r;

            case Shape::Tripod:
            case Shape::SemiTripod: {
                auto inner = shape == Shape::Tripod ? Shape::Fork : Shape::SemiFork;
                r = {true, shape == Shape::Tripod ? "tripod" : "semi-tripod", {}};
                for (auto & c : connected_components(g)) {
                    auto part = single(induced_subgraph(g, c), inner, strictness);
                    if (! part.matches)
                        return Recognition{};
                    r.parts.insert(r.parts.end(), part.parts.begin(), part.parts.end());
                }
                return r;
            }

            default:
                return single(g, shape, strictness);
        }
    }
}
