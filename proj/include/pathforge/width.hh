/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PATHFORGE_WIDTH_HH
#define PATHFORGE_WIDTH_HH 1

#include <pathforge/budget.hh>
#include <pathforge/graph.hh>

#include <cstddef>
#include <string>
#include <vector>

namespace pathforge
{
    struct MinorModel;

    struct PathDecomposition
    {
        std::vector<VertexSet> bags;

        // Largest bag size minus one; -1 for no bags.
        auto width() const -> int;
    };

    // Empty when every vertex is covered, every edge sits in some bag, and
    // each vertex occupies a contiguous run of bags.
    auto validate_path_decomposition(const Graph & g, const PathDecomposition & pd) -> std::vector<std::string>;

    struct WidthResult
    {
        int width = -1;
        PathDecomposition decomposition;
    };

    class SizeLimitError : public GraphError
    {
        public:
            using GraphError::GraphError;
    };

    inline constexpr std::size_t default_exact_bound = 22;
    inline constexpr std::size_t table_dp_limit = 22;
    inline constexpr std::size_t search_limit = 64;

    // Vertex separation per connected component: a full subset table up to
    // table_dp_limit vertices, a memoised search with increasing width above
    // that. Throws SizeLimitError when a component exceeds
    // max_component_order or search_limit.
    auto pathwidth_exact(const Graph & g, std::size_t max_component_order = default_exact_bound) -> WidthResult;

    // The memoised search alone, for any component of at most search_limit
    // vertices. Exposed so that it can be checked against the table.
    auto pathwidth_by_search(const Graph & g) -> WidthResult;

    // Exact pathwidth of a forest by the branch recursion (a vertex with three
    // branches of width >= k forces width k + 1). Throws GraphError if g has a
    // cycle.
    auto tree_pathwidth(const Graph & g) -> WidthResult;

    // Returns pattern_pathwidth as a lower bound for pw(g) after checking that
    // model is a valid minor model inside g. Throws GraphError otherwise.
    auto pathwidth_lower_bound_by_minor(const Graph & g, const MinorModel & model, int pattern_pathwidth) -> int;

    struct Deg3Result
    {
        // Found: subgraph certified. None: no subgraph of g can reach the
        // target. Exhausted: the search gave up, which proves nothing.
        SearchStatus status = SearchStatus::Exhausted;
        Graph subgraph;
        WidthResult width;
        std::string method;     // "exact" or "tree": how width was certified
    };

    // Best-effort search for a subgraph of maximum degree <= 3 with pathwidth
    // at least k. Every reported width is computed exactly.
    auto find_deg3_subgraph(const Graph & g, int k, Budget & budget,
            std::size_t exact_bound = default_exact_bound) -> Deg3Result;
}

#endif
