/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <doctest.h>

#include "../oracles.hh"

#include <pathforge/generators.hh>
#include <pathforge/patterns.hh>

#include <functional>
#include <random>
#include <set>

using namespace pathforge;

namespace
{
    auto search(const Graph & host, const Graph & pattern, std::uint64_t limit = 50'000'000) -> SearchResult<Embedding>
    {
        Budget b{limit};
        return find_induced_subgraph(host, pattern, b);
    }

    // Plain backtracking with adjacency checks against every earlier choice.
    auto isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.order() != b.order() || a.size() != b.size())
            return false;
        auto aa = oracle::adjacency_matrix(a), ba = oracle::adjacency_matrix(b);
        auto n = a.order();
        std::vector<std::size_t> image(n);
        std::vector<char> used(n, 0);
        std::function<bool (std::size_t)> place = [&] (std::size_t i) -> bool {
            if (i == n)
                return true;
            for (std::size_t j = 0; j < n; ++j) {
                if (used[j])
                    continue;
                bool ok = true;
                for (std::size_t p = 0; p < i && ok; ++p)
                    ok = aa[i][p] == ba[j][image[p]];
                if (! ok)
                    continue;
                used[j] = 1;
                image[i] = j;
                if (place(i + 1))
                    return true;
                used[j] = 0;
            }
            return false;
        };
        return place(0);
    }

    auto shuffled(std::mt19937_64 & rng, const Graph & g) -> Graph
    {
        std::vector<Vertex> names(g.vertices().begin(), g.vertices().end());
        std::shuffle(names.begin(), names.end(), rng);
        std::map<Vertex, Vertex> to;
        for (std::size_t i = 0; i < names.size(); ++i)
            to[g.vertices()[i]] = names[i];
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            edges.push_back(make_edge(to[u], to[v]));
        return Graph::from_edges(g.vertices(), edges);
    }
}

TEST_SUITE("patterns")
{
    TEST_CASE("induced subgraph search examples")
    {
        auto k4 = search(complete_graph(4), complete_graph(3));
        REQUIRE(k4.found());
        CHECK(validate_embedding(k4.value).empty());
        CHECK(search(cycle_graph(6), complete_graph(3)).status == SearchStatus::None);
        CHECK(search(net_graph(), claw_graph()).status == SearchStatus::None);
        CHECK(search(net_graph(), complete_graph(3)).found());
        CHECK(search(complete_graph(12), complete_bipartite_graph(2, 2)).status == SearchStatus::None);
    }

    TEST_CASE("budget exhaustion is not a negative answer")
    {
        auto r = search(hat_tree(2).graph, complete_binary_tree(5).graph(), 10);
        CHECK(r.status == SearchStatus::Exhausted);
    }

    TEST_CASE("induced subgraph search against brute force")
    {
        std::mt19937_64 rng(53);
        for (int i = 0; i < 300; ++i) {
            auto host = oracle::random_graph(rng, 1 + int(rng() % 10), 0.2 + 0.1 * double(i % 5));
            auto pattern = oracle::random_graph(rng, 1 + int(rng() % 5), 0.5);
            auto r = search(host, pattern);
            REQUIRE(r.status != SearchStatus::Exhausted);
            CHECK(r.found() == oracle::has_induced_subgraph(host, pattern));
            if (r.found())
                CHECK(validate_embedding(r.value).empty());
        }
    }

    TEST_CASE("induced subdivision search")
    {
        Budget b1{10'000'000};
        auto t2 = complete_binary_tree(2).graph();
        auto s = find_induced_subdivision(subdivide_uniform(t2, 2).graph, t2, b1);
        REQUIRE(s.found());
        CHECK(validate_subdivision_embedding(s.value).empty());
        CHECK(validate_subdivision(s.value.host, s.value.cert, EmbeddingMode::Induced).empty());

        Budget b2{10'000'000};
        auto c8 = find_induced_subdivision(cycle_graph(8), complete_binary_tree(1).graph(), b2);
        REQUIRE(c8.found());
        CHECK(validate_subdivision_embedding(c8.value).empty());

        Budget b3{100'000'000};
        auto hat = find_induced_subdivision(hat_tree(1).graph, complete_binary_tree(5).graph(), b3);
        CHECK(hat.status == SearchStatus::None);

        // C_5 holds a path but no induced cycle-free claw subdivision
        Budget b4{10'000'000};
        CHECK(find_induced_subdivision(cycle_graph(5), claw_graph(), b4).status == SearchStatus::None);

        // a triangle holds a subdivided P_3 only as a non-induced subgraph
        Budget b5{10'000'000}, b6{10'000'000};
        CHECK(find_induced_subdivision(complete_graph(3), path_graph(3), b5).status == SearchStatus::None);
        CHECK(find_induced_subdivision(complete_graph(3), path_graph(3), b6, {}, false).found());
    }

    TEST_CASE("minimum lengths are honoured")
    {
        Budget b{10'000'000};
        auto base = path_graph(2);
        auto r = find_induced_subdivision(path_graph(6), base, b, {{{0, 1}, 4}});
        REQUIRE(r.found());
        CHECK(r.value.cert.path_map.at({0, 1}).size() >= 5);
        Budget b2{10'000'000};
        CHECK(find_induced_subdivision(path_graph(4), base, b2, {{{0, 1}, 4}}).status == SearchStatus::None);
    }

    TEST_CASE("recognizer examples")
    {
        auto claw = recognize(claw_graph(), Shape::Fork, Strictness::Strict);
        CHECK(claw.matches);
        REQUIRE(claw.parts.size() == 4);
        for (std::size_t i = 1; i < 4; ++i)
            CHECK(claw.parts[i].size() == 1);

        CHECK(recognize(complete_graph(3), Shape::SemiFork, Strictness::Strict).matches);
        CHECK(! recognize(path_graph(4), Shape::Fork, Strictness::Strict).matches);
        CHECK(recognize(path_graph(4), Shape::Fork, Strictness::Inclusive).matches);
        CHECK(recognize(path_graph(4), Shape::SemiFork, Strictness::Inclusive).matches);
        CHECK(! recognize(path_graph(4), Shape::SemiFork, Strictness::Strict).matches);

        CHECK(recognize(net_graph(), Shape::Net, Strictness::Strict).matches);
        CHECK(recognize(net_graph(), Shape::SemiFork, Strictness::Strict).matches);
        CHECK(! recognize(semi_fork_graph(1, 1, 0), Shape::Net, Strictness::Strict).matches);
        CHECK(recognize(claw_graph(), Shape::Claw, Strictness::Strict).matches);
        CHECK(! recognize(fork_graph(2, 1, 1), Shape::Claw, Strictness::Strict).matches);

        CHECK(recognize(complete_graph(5), Shape::Complete, Strictness::Strict).matches);
        CHECK(! recognize(cycle_graph(4), Shape::Complete, Strictness::Strict).matches);
        auto k33 = recognize(complete_bipartite_graph(3, 3), Shape::CompleteBipartite, Strictness::Strict);
        CHECK(k33.matches);
        CHECK(k33.parts.size() == 2);
        CHECK(recognize(cycle_graph(4), Shape::CompleteBipartite, Strictness::Strict).matches);
        CHECK(! recognize(cycle_graph(5), Shape::CompleteBipartite, Strictness::Strict).matches);

        auto tripod = disjoint_union(claw_graph(), fork_graph(1, 2, 3));
        CHECK(recognize(tripod, Shape::Tripod, Strictness::Strict).matches);
        CHECK(! recognize(disjoint_union(claw_graph(), path_graph(3)), Shape::Tripod, Strictness::Strict).matches);
        CHECK(recognize(disjoint_union(claw_graph(), path_graph(3)), Shape::Tripod, Strictness::Inclusive).matches);
        auto semi = disjoint_union(net_graph(), complete_graph(3));
        CHECK(recognize(semi, Shape::SemiTripod, Strictness::Strict).matches);
        CHECK(! recognize(semi, Shape::Tripod, Strictness::Inclusive).matches);

        for (auto shape : {Shape::Complete, Shape::Fork, Shape::SemiTripod})
            CHECK(parse_shape(to_string(shape)) == shape);
        CHECK(! parse_shape("wheel"));
    }

    TEST_CASE("strict forks are exactly claw subdivisions")
    {
        for (int a = 1; a <= 7; ++a)
            for (int b = 1; a + b <= 8; ++b)
                for (int c = 1; a + b + c <= 9; ++c) {
                    auto r = recognize(fork_graph(a, b, c), Shape::Fork, Strictness::Strict);
                    REQUIRE(r.matches);
                    std::multiset<std::size_t> arms{r.parts[1].size(), r.parts[2].size(), r.parts[3].size()};
                    CHECK(arms == std::multiset<std::size_t>{std::size_t(a), std::size_t(b), std::size_t(c)});
                }

        std::mt19937_64 rng(59);
        for (int i = 0; i < 500; ++i) {
            auto g = oracle::random_graph(rng, 1 + int(rng() % 10), 0.15 + 0.05 * double(i % 4));
            int branch = 0;
            bool small = true;
            for (auto v : g.vertices()) {
                branch += g.degree(v) == 3;
                small = small && g.degree(v) <= 3;
            }
            bool expected = is_tree(g) && small && branch == 1;
            CHECK(recognize(g, Shape::Fork, Strictness::Strict).matches == expected);
        }
    }

    TEST_CASE("strict semi-forks are exactly line graphs of forks")
    {
        auto is_line_of_fork = [] (const Graph & g) -> bool {
            int n = int(g.order());
            for (int a = 1; a <= n; ++a)
                for (int b = a; a + b <= n; ++b) {
                    int c = n - a - b;
                    if (c >= b && isomorphic(g, line_graph(fork_graph(a, b, c)).graph))
                        return true;
                }
            return false;
        };

        std::mt19937_64 rng(61);
        std::vector<Graph> cases;
        for (int a = 0; a <= 7; ++a)
            for (int b = 0; a + b <= 7; ++b)
                for (int c = 0; a + b + c <= 7; ++c) {
                    auto g = shuffled(rng, semi_fork_graph(a, b, c));
                    cases.push_back(g);
                    auto edges = g.edges();
                    edges.erase(edges.begin() + std::ptrdiff_t(rng() % edges.size()));
                    cases.push_back(Graph::from_edges(g.vertices(), edges));
                }
        for (int i = 0; i < 300; ++i)
            cases.push_back(oracle::random_graph(rng, 3 + int(rng() % 8), 0.3));

        int positives = 0;
        for (auto & g : cases) {
            bool expected = is_line_of_fork(g);
            positives += expected;
            CHECK(recognize(g, Shape::SemiFork, Strictness::Strict).matches == expected);
        }
        CHECK(positives >= 120);
    }

    TEST_CASE("hat trees forbid triangles and four-cycles")
    {
        for (int k : {1, 2}) {
            auto g = hat_tree(k).graph;
            CHECK(search(g, complete_graph(3)).status == SearchStatus::None);
            CHECK(search(g, complete_bipartite_graph(2, 2)).status == SearchStatus::None);
        }
    }

    TEST_CASE("ramsey detection")
    {
        Budget b1{10'000'000};
        auto k5 = ramsey_detect(complete_graph(5), 3, b1);
        CHECK(k5.status == SearchStatus::Found);
        CHECK(k5.kind == "complete");
        CHECK(validate_embedding(k5.embedding).empty());

        Budget b2{10'000'000};
        auto t3 = ramsey_detect(k_ary_tree(3).graph(), 3, b2);
        CHECK(t3.status == SearchStatus::Found);
        CHECK(t3.kind == "kary-tree");
        CHECK(validate_embedding(t3.embedding).empty());

        Budget b3{10'000'000};
        auto k33 = ramsey_detect(complete_bipartite_graph(3, 4), 3, b3);
        CHECK(k33.kind == "complete-bipartite");

        Budget b4{10'000'000};
        CHECK(ramsey_detect(cycle_graph(7), 3, b4).status == SearchStatus::None);
    }
}
