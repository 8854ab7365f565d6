/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <doctest.h>

#include "../oracles.hh"

#include <pathforge/generators.hh>
#include <pathforge/minors.hh>
#include <pathforge/width.hh>

#include <random>

using namespace pathforge;

namespace
{
    auto valid(const Graph & g, const WidthResult & r) -> bool
    {
        return validate_path_decomposition(g, r.decomposition).empty() && r.decomposition.width() == r.width;
    }

    // Model of the base inside the host: each branch vertex plus the inner
    // vertices of the paths to its children.
    auto model_from(const Graph & host, const SubdivisionCert & cert, const RootedTree & base) -> MinorModel
    {
        MinorModel m{base.graph(), host, {}, false};
        for (auto v : base.graph().vertices()) {
            VertexSet set{cert.branch_map.at(v)};
            for (auto c : base.children(v)) {
                auto & path = cert.path_map.at(make_edge(v, c));
                for (std::size_t j = 1; j + 1 < path.size(); ++j)
                    set.push_back(path[j]);
            }
            m.branch_sets[v] = make_vertex_set(set);
        }
        return m;
    }
}

TEST_SUITE("width")
{
    TEST_CASE("exact pathwidth on small families")
    {
        CHECK(pathwidth_exact(path_graph(5)).width == 1);
        CHECK(pathwidth_exact(complete_graph(4)).width == 3);
        CHECK(pathwidth_exact(complete_binary_tree(3).graph()).width == 2);
        CHECK(pathwidth_exact(Graph{}).width == -1);
        CHECK(pathwidth_exact(path_graph(1)).width == 0);
        CHECK(pathwidth_exact(cycle_graph(9)).width == 2);
        CHECK(pathwidth_exact(complete_bipartite_graph(3, 3)).width == 3);
        for (auto g : {path_graph(5), complete_graph(4), complete_binary_tree(3).graph(), cycle_graph(9)})
            CHECK(valid(g, pathwidth_exact(g)));
    }

    TEST_CASE("size bound is per component")
    {
        CHECK_THROWS_AS(pathwidth_exact(cycle_graph(23)), SizeLimitError);
        auto two = disjoint_union(cycle_graph(20), cycle_graph(20));
        CHECK(pathwidth_exact(two).width == 2);
        CHECK(pathwidth_exact(cycle_graph(30), 40).width == 2);
        CHECK_THROWS_AS(pathwidth_exact(cycle_graph(70), 100), SizeLimitError);
        CHECK(pathwidth_exact(complete_binary_tree(4).graph(), 64).width == 2);
    }

    TEST_CASE("exact pathwidth against the permutation oracle")
    {
        std::mt19937_64 rng(31);
        for (int i = 0; i < 150; ++i) {
            auto g = oracle::random_graph(rng, 1 + int(rng() % 8), 0.15 + 0.1 * double(i % 5));
            auto r = pathwidth_exact(g);
            CHECK(r.width == oracle::pathwidth(g));
            CHECK(valid(g, r));
        }
    }

    TEST_CASE("memoised search agrees with the subset table")
    {
        std::mt19937_64 rng(37);
        for (int i = 0; i < 150; ++i) {
            auto g = oracle::random_graph(rng, 1 + int(rng() % 15), 0.1 + 0.08 * double(i % 6));
            auto a = pathwidth_exact(g), b = pathwidth_by_search(g);
            CHECK(a.width == b.width);
            CHECK(valid(g, b));
        }
        for (int h = 1; h <= 5; ++h) {
            auto t = complete_binary_tree(h).graph();
            auto r = pathwidth_by_search(t);
            CHECK(r.width == (h + 1) / 2);
            CHECK(valid(t, r));
        }
    }

    TEST_CASE("tree pathwidth")
    {
        for (int h = 1; h <= 8; ++h) {
            auto t = complete_binary_tree(h).graph();
            auto r = tree_pathwidth(t);
            CHECK(r.width == (h + 1) / 2);
            CHECK(valid(t, r));
            if (h <= 4)
                CHECK(pathwidth_exact(t, 64).width == r.width);
        }
        CHECK(tree_pathwidth(star_graph(9)).width == 1);
        CHECK(tree_pathwidth(path_graph(1)).width == 0);
        CHECK_THROWS_AS(tree_pathwidth(cycle_graph(4)), GraphError);

        std::mt19937_64 rng(41);
        for (int i = 0; i < 500; ++i) {
            auto t = oracle::random_tree(rng, 1 + int(rng() % 20));
            auto a = tree_pathwidth(t), b = pathwidth_exact(t);
            CHECK(a.width == b.width);
            CHECK(valid(t, a));
        }
        auto forest = disjoint_union(complete_binary_tree(4).graph(), path_graph(3));
        CHECK(tree_pathwidth(forest).width == 2);
    }

    TEST_CASE("subdivision never lowers pathwidth")
    {
        std::mt19937_64 rng(43);
        for (int i = 0; i < 100; ++i) {
            int n = 2 + int(rng() % 9);
            auto g = oracle::random_graph(rng, n, 0.35);
            std::map<Edge, int> lengths;
            int room = 22 - n;
            for (auto e : g.edges()) {
                int l = room > 0 ? 1 + int(rng() % 2) : 1;
                room -= l - 1;
                lengths[e] = l;
            }
            auto s = subdivide(g, lengths);
            CHECK(pathwidth_exact(s.graph).width >= pathwidth_exact(g).width);
        }
    }

    TEST_CASE("lower bounds from minor models")
    {
        auto h = hat_tree(2);
        auto m = model_from(h.graph, h.cert, h.base);
        CHECK(pathwidth_lower_bound_by_minor(h.graph, m, 2) == 2);

        auto t2 = complete_binary_tree(2).graph();
        CHECK(pathwidth_lower_bound_by_minor(t2, identity_model(t2), 1) == 1);

        // K_3 minor in C_5
        MinorModel k3{complete_graph(3), cycle_graph(5), {{0, {0}}, {1, {1}}, {2, {2, 3, 4}}}, false};
        CHECK(pathwidth_lower_bound_by_minor(cycle_graph(5), k3, 2) == 2);
        CHECK(pathwidth_exact(cycle_graph(5)).width >= 2);

        MinorModel bad{complete_graph(3), path_graph(3), {{0, {0}}, {1, {1}}, {2, {2}}}, false};
        CHECK_THROWS_AS(pathwidth_lower_bound_by_minor(path_graph(3), bad, 2), GraphError);
    }

    TEST_CASE("degree three subgraphs")
    {
        Budget b1{2'000'000};
        auto t6 = complete_binary_tree(6).graph();
        auto r = find_deg3_subgraph(t6, 3, b1);
        REQUIRE(r.status == SearchStatus::Found);
        CHECK(r.subgraph.max_degree() <= 3);
        CHECK(r.width.width >= 3);
        CHECK(r.subgraph.size() == t6.size());

        Budget b2{2'000'000};
        auto k5 = find_deg3_subgraph(complete_graph(5), 1, b2);
        REQUIRE(k5.status == SearchStatus::Found);
        CHECK(k5.subgraph.max_degree() <= 3);
        CHECK(k5.subgraph.size() >= 1);

        Budget b3{2'000'000};
        CHECK(find_deg3_subgraph(cycle_graph(4), 3, b3).status != SearchStatus::Found);

        std::mt19937_64 rng(47);
        for (int i = 0; i < 30; ++i) {
            auto g = oracle::random_graph(rng, 4 + int(rng() % 8), 0.5);
            Budget b{200'000};
            auto d = find_deg3_subgraph(g, 2, b);
            if (d.status == SearchStatus::Found) {
                CHECK(d.subgraph.max_degree() <= 3);
                CHECK(oracle::pathwidth(d.subgraph) >= 2);
                for (auto [u, v] : d.subgraph.edges())
                    CHECK(g.adjacent(u, v));
            }
        }
    }
}
