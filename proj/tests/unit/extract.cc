/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <doctest.h>

#include "../checks.hh"
#include "../oracles.hh"

#include <pathforge/extract.hh>
#include <pathforge/generators.hh>

#include <random>

using namespace pathforge;

namespace
{
    auto wattle_edges_induced(const WattleCertificate & w) -> bool
    {
        auto sub = induced_subgraph(w.host, w.image_vertices());
        auto edges = w.image_edges();
        std::sort(edges.begin(), edges.end());
        return sub.edges() == edges;
    }

    auto colouring_of(const RootedTree & t, std::mt19937_64 & rng) -> TwoColoring
    {
        TwoColoring c{t, {}};
        for (auto v : t.graph().vertices())
            c.colour[v] = rng() % 2 ? Colour::Red : Colour::Blue;
        return c;
    }

    auto internal_non_root(int k) -> VertexSet
    {
        VertexSet x;
        for (int v = 1; v < (1 << k) - 1; ++v)
            x.push_back(v);
        return x;
    }
}

TEST_SUITE("extract")
{
    TEST_CASE("clean fork on a spider")
    {
        // centre 0, middles 1, 2, 3, ends 4, 5, 6
        auto g = Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
        ForkParts parts{{1}, {2}, {3}, {0}, 4, 5, 6};
        CHECK(check_fork_parts(g, parts).empty());
        auto f = clean_fork(g, parts);
        CHECK(! f.semi);
        CHECK(validate_subdivision_embedding(f.embedding).empty());
        auto image = induced_subgraph(g, f.embedding.cert.image_vertices());
        CHECK(recognize(image, Shape::Fork, Strictness::Strict).matches);
        for (auto v : {4, 5, 6})
            CHECK(image.degree(v) == 1);
    }

    TEST_CASE("clean fork through a triangle gives a semi-fork")
    {
        // S = triangle 0, 1, 2; A, B, C = paths 3-4, 5-6, 7; ends 8, 9, 10
        auto g = Graph::from_edges(11, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 8}, {1, 5}, {5, 6}, {6, 9},
                {2, 7}, {7, 10}});
        ForkParts parts{{3, 4}, {5, 6}, {7}, {0, 1, 2}, 8, 9, 10};
        REQUIRE(check_fork_parts(g, parts).empty());
        auto f = clean_fork(g, parts);
        CHECK(f.semi);
        CHECK(validate_subdivision_embedding(f.embedding).empty());
        auto image = induced_subgraph(g, f.embedding.cert.image_vertices());
        CHECK(recognize(image, Shape::SemiFork, Strictness::Strict).matches);
        for (auto v : {8, 9, 10})
            CHECK(image.degree(v) == 1);
    }

    TEST_CASE("clean fork with long legs and extra clutter")
    {
        // legs 0-1-2-3-a, 0-4-5-b, 0-6-c with chords inside A and a pendant in S
        auto g = Graph::from_edges(12, {{0, 1}, {1, 2}, {2, 3}, {3, 7}, {1, 3}, {0, 4}, {4, 5}, {5, 8},
                {0, 6}, {6, 9}, {0, 10}, {10, 11}, {11, 4}});
        ForkParts parts{{1, 2, 3}, {4, 5}, {6}, {0, 10, 11}, 7, 8, 9};
        REQUIRE(check_fork_parts(g, parts).empty());
        auto f = clean_fork(g, parts);
        CHECK(validate_subdivision_embedding(f.embedding).empty());
        auto image = induced_subgraph(g, f.embedding.cert.image_vertices());
        CHECK(recognize(image, f.semi ? Shape::SemiFork : Shape::Fork, Strictness::Strict).matches);
        for (auto v : {7, 8, 9})
            CHECK(image.degree(v) == 1);
    }

    TEST_CASE("clean fork rejects bad parts")
    {
        auto g = Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 5}});
        ForkParts parts{{1}, {2}, {3}, {0}, 4, 5, 6};
        CHECK(! check_fork_parts(g, parts).empty());
        CHECK_THROWS_AS(clean_fork(g, parts), GraphError);
    }

    TEST_CASE("height parameters")
    {
        CHECK(mono_height(0) == 0);
        CHECK(mono_height(1) == 3);
        CHECK(mono_height(2) == 7);
        CHECK(composed_height(1) == 12);
        CHECK(composed_height(2) == 28);
        for (int k = 0; k <= 20; ++k)
            CHECK(composed_height(k) == 4 * mono_height(k));
    }

    TEST_CASE("minor to wattle on identity models")
    {
        auto t0 = complete_binary_tree(0).graph();
        auto w0 = minor_to_wattle(identity_model(t0), 0);
        CHECK(w0.image_vertices().size() == 1);

        auto t4 = complete_binary_tree(4).graph();
        auto w1 = minor_to_wattle(identity_model(t4), 1);
        CHECK(validate_wattle(w1, EmbeddingMode::Induced).empty());
        auto path = induced_subgraph(t4, w1.image_vertices());
        CHECK(path.max_degree() == 2);
        CHECK(is_tree(path));
        for (auto leaf : w1.base.graph().vertices())
            if (w1.base.graph().degree(leaf) == 1)
                CHECK(complete_binary_tree(4).depth(w1.branch_map.at(leaf)[0]) == 4);
        CHECK(w1.image_vertices() == make_vertex_set(complete_binary_tree(4).path(w1.branch_map.at(1)[0], w1.branch_map.at(2)[0])));

        auto t8 = complete_binary_tree(8).graph();
        auto w2 = minor_to_wattle(identity_model(t8), 2);
        CHECK(validate_wattle(w2, EmbeddingMode::Induced).empty());
        CHECK(w2.triangles.empty());
        CHECK(wattle_edges_induced(w2));
    }

    TEST_CASE("minor to wattle on a wattle host")
    {
        // an induced model of T_8 in its own wattle: triangles become branch sets
        auto w = wattle(8, {}, internal_non_root(8));
        MinorModel m{w.base.graph(), w.host, {}, true};
        for (auto & [b, img] : w.branch_map)
            m.branch_sets[b] = make_vertex_set(img);
        for (auto & [e, path] : w.path_map)
            for (std::size_t j = 1; j + 1 < path.size(); ++j)
                m.branch_sets[e.second].push_back(path[j]);
        for (auto & [b, set] : m.branch_sets)
            set = make_vertex_set(set);
        REQUIRE(validate_model(m).empty());
        auto out = minor_to_wattle(m, 2);
        CHECK(validate_wattle(out, EmbeddingMode::Induced).empty());
        CHECK(wattle_edges_induced(out));
        CHECK(out.triangles.size() <= 3);
    }

    TEST_CASE("minor to wattle rejects invalid models")
    {
        auto t4 = complete_binary_tree(4).graph();
        auto m = identity_model(t4);
        m.branch_sets[0] = {5};
        CHECK_THROWS_AS(minor_to_wattle(m, 1), GraphError);
        CHECK_THROWS_AS(minor_to_wattle(identity_model(complete_binary_tree(3).graph()), 1), GraphError);
    }

    TEST_CASE("monochromatic subtrees")
    {
        auto t3 = complete_binary_tree(3);
        TwoColoring red{t3, {}};
        for (auto v : t3.graph().vertices())
            red.colour[v] = Colour::Red;
        auto e = monochromatic_cbt(red, 1);
        CHECK(e.colour == Colour::Red);
        CHECK(validate_vertical(e, &red).empty());
        CHECK(oracle::vertical_ok(e, red, 1));

        auto e0 = monochromatic_cbt(red, 0);
        CHECK(e0.cert.base.order() == 1);

        CHECK_THROWS_AS(monochromatic_cbt(red, 2), GraphError);

        std::mt19937_64 rng(89);
        auto t7 = complete_binary_tree(7);
        for (int i = 0; i < 200; ++i) {
            auto c = colouring_of(t7, rng);
            auto m = monochromatic_cbt(c, 2);
            CHECK(validate_vertical(m, &c).empty());
            CHECK(oracle::vertical_ok(m, c, 2));
        }
    }

    TEST_CASE("wattle to subgraph")
    {
        auto plain = wattle(3, {}, {});
        auto x = wattle_to_subgraph(plain, 1);
        CHECK(! x.is_line_graph());
        CHECK(validate_extraction(x).empty());
        CHECK(oracle::extraction_kinds(x, 1) == 1);

        // every internal non-root vertex is a triangle, so the red class wins
        auto w7 = wattle(7, {}, internal_non_root(7));
        auto lg = wattle_to_subgraph(w7, 2);
        CHECK(lg.is_line_graph());
        CHECK(validate_extraction(lg).empty());
        CHECK(oracle::extraction_kinds(lg, 2) == 1);
        CHECK(oracle::line_graph_ok(std::get<LineGraphEmbedding>(lg.result), 2));

        auto all = wattle(3, {}, internal_non_root(3));
        auto a = wattle_to_subgraph(all, 1);
        CHECK(validate_extraction(a).empty());
        CHECK(oracle::extraction_kinds(a, 1) == 1);

        CHECK_THROWS_AS(wattle_to_subgraph(wattle(6, {}, {}), 2), GraphError);
    }

    TEST_CASE("composed extraction")
    {
        auto t12 = complete_binary_tree(12).graph();
        auto x = induced_minor_to_induced_subgraph(identity_model(t12), 1);
        CHECK(validate_extraction(x).empty());
        CHECK(oracle::extraction_kinds(x, 1) == 1);

        auto bad = identity_model(t12);
        bad.branch_sets[0] = {1};
        CHECK_THROWS_AS(induced_minor_to_induced_subgraph(bad, 1), GraphError);
    }

    TEST_CASE("bounded degree pipeline")
    {
        auto s = subdivide_uniform(complete_binary_tree(12).graph(), 2).graph;
        Budget b1{200'000'000};
        auto r = bounded_degree_pipeline(s, 1, 3, b1);
        REQUIRE(r.success);
        REQUIRE(r.model);
        CHECK(r.model->induced);
        CHECK(validate_model(*r.model).empty());
        CHECK(oracle::model_ok(*r.model));
        CHECK(r.model->pattern.order() == 3);

        Budget b2{50'000'000};
        auto p = bounded_degree_pipeline(path_graph(10), 2, 3, b2);
        CHECK(! p.success);
        CHECK(! p.failed_stage.empty());

        Budget b3{1000};
        auto over = bounded_degree_pipeline(star_graph(5), 1, 3, b3);
        CHECK(over.failed_stage == "input");
    }

    TEST_CASE("degree recurrence is monotone")
    {
        for (double delta : {0.0, 0.5, 1.0, 2.0})
            for (int d : {2, 3, 4}) {
                double previous = 0;
                for (double x = 2; x < 1e6; x *= 1.7) {
                    double y = degree_recurrence(x, delta, d);
                    CHECK(y > previous);
                    CHECK(y >= x);
                    previous = y;
                }
            }
        auto chain = degree_recurrence_chain(1, 1.0, 2);
        CHECK(chain.front() == 7);
        for (std::size_t i = 1; i < chain.size(); ++i)
            CHECK(chain[i] > chain[i - 1]);
    }

    TEST_CASE("minor free pipeline")
    {
        auto t3 = k_ary_tree(3).graph();
        Budget b1{100'000'000};
        auto r = minor_free_pipeline(t3, 3, 5, b1);
        REQUIRE(r.success);
        CHECK(validate_model(*r.model).empty());
        CHECK(r.model->induced);

        auto k5 = disjoint_union(complete_graph(5), path_graph(3));
        Budget b2{100'000'000};
        auto w = minor_free_pipeline(k5, 2, 5, b2);
        CHECK(! w.success);
        CHECK(w.witness_kind.find("K_5") != std::string::npos);

        // subdivided 2-ary tree of height 2 with a pendant path on every vertex
        auto base = k_ary_tree(2).graph();
        auto s = subdivide_uniform(base, 2).graph;
        GraphBuilder builder;
        for (auto [u, v] : s.edges())
            builder.add_edge(u, v);
        Vertex next = s.next_free_id();
        for (auto v : base.vertices()) {
            builder.add_edge(v, next);
            builder.add_edge(next, next + 1);
            next += 2;
        }
        auto decorated = builder.build();
        Budget b3{100'000'000};
        auto d = minor_free_pipeline(decorated, 2, 5, b3);
        REQUIRE(d.success);
        CHECK(validate_model(*d.model).empty());
        CHECK(oracle::model_ok(*d.model));
        CHECK(d.model->pattern.order() == 7);
    }

    TEST_CASE("decision procedure")
    {
        auto yes = decide_bounded_pathwidth({complete_graph(3), complete_bipartite_graph(3, 3), claw_graph(), net_graph()},
                Strictness::Inclusive);
        CHECK(yes.bounded);
        CHECK(yes.witnesses.size() == 4);
        CHECK(yes.missing.empty());
        CHECK(decide_bounded_pathwidth({complete_graph(3), complete_bipartite_graph(3, 3), claw_graph(), net_graph()},
                    Strictness::Strict).bounded);

        auto c5 = decide_bounded_pathwidth({cycle_graph(5)}, Strictness::Inclusive);
        CHECK(! c5.bounded);
        CHECK(c5.missing.size() == 4);

        auto none = decide_bounded_pathwidth({}, Strictness::Inclusive);
        CHECK(! none.bounded);
        CHECK(none.missing.size() == 4);

        // K_2 alone: bounded only when paths count as degenerate tripods
        CHECK(decide_bounded_pathwidth({complete_graph(2)}, Strictness::Inclusive).bounded);
        CHECK(decide_bounded_pathwidth({complete_graph(2)}).bounded);
        CHECK(! decide_bounded_pathwidth({complete_graph(2)}, Strictness::Strict).bounded);

        std::mt19937_64 rng(97);
        std::vector<Graph> pool{complete_graph(3), complete_graph(4), complete_bipartite_graph(2, 3), claw_graph(),
                fork_graph(1, 2, 2), net_graph(), semi_fork_graph(0, 1, 2), cycle_graph(5), path_graph(4),
                complete_binary_tree(2).graph()};
        for (int i = 0; i < 200; ++i) {
            std::vector<Graph> s;
            for (auto & g : pool)
                if (rng() % 3 == 0)
                    s.push_back(g);
            for (auto strict : {Strictness::Strict, Strictness::Inclusive}) {
                bool before = decide_bounded_pathwidth(s, strict).bounded;
                auto more = s;
                more.push_back(pool[rng() % pool.size()]);
                if (before)
                    CHECK(decide_bounded_pathwidth(more, strict).bounded);
            }
        }
    }
}
