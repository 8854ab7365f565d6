/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PATHFORGE_MINORS_HH
#define PATHFORGE_MINORS_HH 1

#include <pathforge/budget.hh>
#include <pathforge/graph.hh>

#include <map>
#include <string>
#include <vector>

namespace pathforge
{
    struct MinorModel
    {
        Graph pattern;
        Graph host;
        std::map<Vertex, VertexSet> branch_sets;
        bool induced = false;

        // host vertex -> pattern vertex, for vertices in some branch set
        auto owners() const -> std::map<Vertex, Vertex>;
    };

    struct ModelProblem
    {
        // "missing", "empty", "unknown-vertex", "disconnected", "overlap",
        // "non-adjacent" or "induced"
        std::string condition;
        Vertex u = -1, v = -1;
        std::string detail;
    };

    // Checks connectivity of each branch set, disjointness, an edge between
    // the sets of every pattern edge, and when induced no edge between the
    // sets of a pattern non-edge. Reports every violation.
    auto validate_model(const MinorModel & m) -> std::vector<ModelProblem>;

    auto identity_model(const Graph & g, bool induced = true) -> MinorModel;

    // Largest distance, inside host[set], from the best centre of set.
    auto branch_set_radius(const Graph & host, const VertexSet & set) -> int;

    enum class SparsifiableCase
    {
        No = 0,
        LowDegree = 1,          // degree at most 2
        QuietNeighbours = 2,    // degree 3, every neighbour of degree at most 2
        Triangle = 3            // degree 3, one quiet neighbour, the other two a triangle with v
    };

    auto sparsifiable_case(const Graph & g, Vertex v) -> SparsifiableCase;
    auto is_sparsifiable(const Graph & g, Vertex v) -> bool;
    auto is_sparsifiable_graph(const Graph & g) -> bool;

    class PreconditionError : public GraphError
    {
        public:
            using GraphError::GraphError;
    };

    // Host edges ab with a in X_u, b in X_v, u != v both in h and uv not an
    // edge of h. Sorted ascending.
    auto violating_edges(const MinorModel & plus_model, const Graph & h) -> std::vector<Edge>;

    struct RepairResult
    {
        MinorModel model;                       // induced model of h
        std::size_t iterations = 0;
        std::vector<std::size_t> history;       // violating edge count before each move, then the final 0
    };

    // plus_model is a model of H+ inside a sparsifiable host; h is an induced
    // subgraph of H+ whose vertices all have degree >= 3 in H+. Applies local
    // moves until no violating edge is left. Throws PreconditionError for bad
    // input and GraphError if no decreasing move exists.
    auto repair_to_induced_model(const MinorModel & plus_model, const Graph & h) -> RepairResult;

    // Exhaustive within budget. Connected patterns of maximum degree 3 go
    // through a topological minor search; everything else through branch set
    // growth with an increasing size cap.
    auto find_minor_model(const Graph & g, const Graph & pattern, Budget & budget,
            bool induced = false) -> SearchResult<MinorModel>;

    struct Distance5Partition
    {
        std::vector<VertexSet> classes;
    };

    // Vertices in ascending order take the smallest class not used within
    // distance 4.
    auto distance5_partition(const Graph & g) -> Distance5Partition;

    auto pairwise_distance_at_least(const Graph & g, const VertexSet & s, int d) -> bool;

    struct BallContraction
    {
        Graph graph;
        MinorModel model;       // pattern = graph, host = the input graph
        VertexSet centres;
    };

    // Contracts the radius-2 ball around each centre into the centre. Throws
    // GraphError unless the centres are pairwise at distance >= 5.
    auto ball_contract(const Graph & g, const VertexSet & centres) -> BallContraction;

    struct Restriction
    {
        VertexSet kept;
        MinorModel model;       // h_sub inside g[kept]
    };

    // Picks S so that g[S] has h_sub as a minor and every centre in S is
    // sparsifiable in g[S]. Throws GraphError naming the centre on failure.
    auto sparsifiable_restriction(const Graph & g, const BallContraction & contraction,
            const Graph & h_sub) -> Restriction;
}

#endif
