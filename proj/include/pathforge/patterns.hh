/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PATHFORGE_PATTERNS_HH
#define PATHFORGE_PATTERNS_HH 1

#include <pathforge/budget.hh>
#include <pathforge/generators.hh>
#include <pathforge/graph.hh>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pathforge
{
    struct Embedding
    {
        Graph pattern;
        Graph host;
        std::map<Vertex, Vertex> map;
        bool induced = true;

        auto image() const -> VertexSet;
    };

    auto validate_embedding(const Embedding & e) -> std::vector<std::string>;

    // Backtracking over pattern vertices by descending degree, candidates by
    // ascending identifier, with bitset domains. A None result is exhaustive.
    auto find_induced_subgraph(const Graph & host, const Graph & pattern, Budget & budget,
            bool induced = true) -> SearchResult<Embedding>;

    struct SubdivisionEmbedding
    {
        Graph host;
        SubdivisionCert cert;
        bool induced = true;
    };

    auto validate_subdivision_embedding(const SubdivisionEmbedding & e) -> std::vector<std::string>;

    struct SubdivisionQuery
    {
        bool induced = true;
        std::map<Vertex, Vertex> pinned;        // base vertex -> forced image
        std::map<Edge, int> min_length;         // default 1
        std::map<Edge, int> max_length;         // default unbounded
        std::optional<VertexSet> allowed;       // host vertices usable at all
    };

    // Places branch vertices in breadth-first order over the base and routes
    // each base edge as a path by depth-first search, checking the induced
    // condition incrementally. The base must be connected.
    auto find_subdivision(const Graph & host, const Graph & base, const SubdivisionQuery & query,
            Budget & budget) -> SearchResult<SubdivisionEmbedding>;

    auto find_induced_subdivision(const Graph & host, const Graph & base, Budget & budget,
            const std::map<Edge, int> & min_length = {}, bool induced = true) -> SearchResult<SubdivisionEmbedding>;

    enum class Shape
    {
        Complete,
        CompleteBipartite,
        Claw,
        Fork,
        SemiFork,
        Net,
        Tripod,
        SemiTripod
    };

    enum class Strictness
    {
        Strict,
        Inclusive
    };

    auto parse_shape(const std::string &) -> std::optional<Shape>;
    auto to_string(Shape) -> std::string;
    auto parse_strictness(const std::string &) -> std::optional<Strictness>;
    auto to_string(Strictness) -> std::string;

    // For a fork: parts[0] = {centre}, then one arm each, listed from the
    // centre outwards. For a semi-fork: parts[0] = the triangle, then one
    // pendant path per triangle vertex starting at that vertex. Complete:
    // one part. Complete bipartite: the two sides. Tripods and semi-tripods
    // list the witnesses per component in order.
    struct Recognition
    {
        bool matches = false;
        std::string kind;
        std::vector<std::vector<Vertex>> parts;
    };

    auto recognize(const Graph & g, Shape shape, Strictness strictness) -> Recognition;

    struct RamseyResult
    {
        SearchStatus status = SearchStatus::None;
        std::string kind;       // "complete", "complete-bipartite" or "kary-tree"
        Embedding embedding;
    };

    // Looks for K_n, then K_{n,n}, then the h-ary tree of height h, each as an
    // induced subgraph; h is tree_height, or n when that is -1.
    auto ramsey_detect(const Graph & g, int n, Budget & budget, int tree_height = -1) -> RamseyResult;
}

#endif
