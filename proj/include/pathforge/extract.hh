/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PATHFORGE_EXTRACT_HH
#define PATHFORGE_EXTRACT_HH 1

#include <pathforge/budget.hh>
#include <pathforge/generators.hh>
#include <pathforge/graph.hh>
#include <pathforge/minors.hh>
#include <pathforge/patterns.hh>
#include <pathforge/width.hh>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pathforge
{
    struct ForkParts
    {
        VertexSet a_side, b_side, c_side, s;
        Vertex a, b, c;
    };

    // Empty when the parts satisfy the cleaning hypotheses inside g.
    auto check_fork_parts(const Graph & g, const ForkParts & parts) -> std::vector<std::string>;

    struct CleanFork
    {
        bool semi = false;
        // base is the claw (centre 0, leaves 1, 2, 3 on a, b, c) or the net
        // (triangle 0, 1, 2, pendants 3, 4, 5 on a, b, c)
        SubdivisionEmbedding embedding;
    };

    // An induced fork or semi-fork of g whose degree-one vertices are a, b
    // and c. Throws GraphError on bad parts, or if none is found.
    auto clean_fork(const Graph & g, const ForkParts & parts) -> CleanFork;

    // Height parameters: the wattle height reached from T_{4k}, and the
    // height needed for a monochromatic T_k.
    auto mono_height(int k) -> int;                 // (k^2 + 5k) / 2
    auto composed_height(int k) -> int;             // 2k^2 + 10k

    // m must be a valid induced model of a complete binary tree (heap
    // numbering) of height at least 4k. The certificate's host is m.host.
    auto minor_to_wattle(const MinorModel & m, int k) -> WattleCertificate;

    enum class Colour
    {
        Red,
        Blue
    };

    auto to_string(Colour) -> std::string;

    struct TwoColoring
    {
        RootedTree target;
        std::map<Vertex, Colour> colour;
    };

    struct VerticalEmbedding
    {
        RootedTree host_tree;
        SubdivisionCert cert;       // base is T_k with heap numbering
        Vertex root_image = -1;
        Colour colour = Colour::Red;
    };

    // Subgraph validity, verticality, and when colouring is given the
    // colour of every original vertex.
    auto validate_vertical(const VerticalEmbedding & e, const TwoColoring * colouring = nullptr) -> std::vector<std::string>;

    // The target must be a complete binary tree of height >= mono_height(k)
    // in heap numbering.
    auto monochromatic_cbt(const TwoColoring & colouring, int k) -> VerticalEmbedding;

    // A subdivided T_k, F, with its edges mapped to host vertices so that
    // host[image] is the line graph of F.
    struct LineGraphEmbedding
    {
        Graph host;
        Subdivided tree;
        std::map<Edge, Vertex> edge_image;

        auto image() const -> VertexSet;
    };

    auto validate_line_graph_embedding(const LineGraphEmbedding & e) -> std::vector<std::string>;

    struct WattleExtraction
    {
        std::variant<SubdivisionEmbedding, LineGraphEmbedding> result;
        VerticalEmbedding tree;       // the monochromatic tree in the wattle base

        auto is_line_graph() const -> bool { return result.index() == 1; }
    };

    // The wattle's base must have height >= mono_height(k).
    auto wattle_to_subgraph(const WattleCertificate & w, int k) -> WattleExtraction;

    auto validate_extraction(const WattleExtraction & x) -> std::vector<std::string>;

    // m is an induced model of T_h, h >= composed_height(k).
    auto induced_minor_to_induced_subgraph(const MinorModel & m, int k) -> WattleExtraction;

    struct StageLog
    {
        std::string stage;
        bool ok = false;
        std::string detail;
    };

    struct BoundedDegreeOptions
    {
        // pathwidth asked of each max-degree-3 subgraph; -1 means pw(T_k^+)
        int stage_target = -1;
        std::size_t exact_bound = 16;
    };

    struct PipelineReport
    {
        bool success = false;
        bool exhausted = false;
        std::string failed_stage;
        std::vector<StageLog> stages;
        std::optional<MinorModel> model;        // induced model in the input graph
        std::string witness_kind;               // minor-free pipeline: K_n / K_{n,n} witness
    };

    auto bounded_degree_pipeline(const Graph & g, int k, int max_degree, Budget & budget,
            const BoundedDegreeOptions & options = {}) -> PipelineReport;

    // g(i) from g(i + 1): (2 x^2 log^delta(x) + 1)(Delta^2 + 1) - 1, natural
    // logarithm.
    auto degree_recurrence(double next, double delta, int max_degree) -> double;

    // g(Delta^4 + 1), ..., g(0), stopping early at infinity.
    auto degree_recurrence_chain(int k, double delta, int max_degree) -> std::vector<double>;

    // tree_height -1 means k.
    auto minor_free_pipeline(const Graph & g, int k, int n, Budget & budget, int tree_height = -1) -> PipelineReport;

    struct Decision
    {
        bool bounded = false;
        std::map<std::string, std::size_t> witnesses;   // category -> index into the set
        std::vector<std::string> missing;
    };

    // Inclusive by default: paths count as degenerate tripods and
    // semi-tripods, so {K_2} bounds path-width as it should.
    auto decide_bounded_pathwidth(const std::vector<Graph> & graphs,
            Strictness strictness = Strictness::Inclusive) -> Decision;
}

#endif
