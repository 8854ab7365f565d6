/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PATHFORGE_GRAPH_HH
#define PATHFORGE_GRAPH_HH 1

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pathforge
{
    using Vertex = int;
    using VertexSet = std::vector<Vertex>;        // always sorted, no duplicates
    using Edge = std::pair<Vertex, Vertex>;       // first < second

    inline constexpr std::size_t no_index = std::numeric_limits<std::size_t>::max();

    class GraphError : public std::runtime_error
    {
        public:
            explicit GraphError(const std::string & message) :
                std::runtime_error(message)
            {
            }
    };

    auto make_edge(Vertex u, Vertex v) -> Edge;
    auto make_vertex_set(std::vector<Vertex> vertices) -> VertexSet;

    // Simple undirected graph over opaque, stable vertex identifiers. Values
    // are immutable once built; vertices are stored in ascending order and
    // every adjacency list is sorted.
    class Graph
    {
        private:
            VertexSet _vertices;
            std::vector<std::vector<Vertex>> _adjacency;
            std::size_t _size = 0;

            friend class GraphBuilder;

        public:
            Graph() = default;

            // Throws GraphError on self-loops, duplicate vertices or edges
            // whose endpoints are not listed.
            static auto from_edges(std::vector<Vertex> vertices, const std::vector<Edge> & edges) -> Graph;

            // Vertices 0 .. n-1 with the given edges.
            static auto from_edges(std::size_t n, const std::vector<Edge> & edges) -> Graph;

            auto order() const -> std::size_t { return _vertices.size(); }
            auto size() const -> std::size_t { return _size; }
            auto empty() const -> bool { return _vertices.empty(); }
            auto vertices() const -> const VertexSet & { return _vertices; }

            auto index_of(Vertex v) const -> std::size_t;
            auto has_vertex(Vertex v) const -> bool { return index_of(v) != no_index; }

            // Throws GraphError for unknown vertices.
            auto neighbours(Vertex v) const -> std::span<const Vertex>;
            auto neighbours_by_index(std::size_t i) const -> std::span<const Vertex> { return _adjacency[i]; }
            auto degree(Vertex v) const -> std::size_t { return neighbours(v).size(); }
            auto adjacent(Vertex u, Vertex v) const -> bool;

            auto edges() const -> std::vector<Edge>;
            auto max_degree() const -> std::size_t;
            auto next_free_id() const -> Vertex { return _vertices.empty() ? 0 : _vertices.back() + 1; }

            auto operator==(const Graph &) const -> bool = default;
    };

    // Accumulates vertices and edges; duplicate edges are merged.
    class GraphBuilder
    {
        private:
            std::vector<Vertex> _vertices;
            std::vector<Edge> _edges;

        public:
            auto add_vertex(Vertex v) -> GraphBuilder &;
            auto add_edge(Vertex u, Vertex v) -> GraphBuilder &;
            auto add_path(std::span<const Vertex> path) -> GraphBuilder &;
            auto build() const -> Graph;
    };

    struct Layering
    {
        Vertex root = 0;
        std::vector<VertexSet> layers;

        // Layer index of v, or -1 when v is not covered.
        auto layer_of(Vertex v) const -> int;
    };

    // Tree with a designated root. Children are kept in ascending identifier
    // order; for binary trees the first child is the left child.
    class RootedTree
    {
        private:
            Graph _graph;
            Vertex _root = 0;
            std::vector<Vertex> _parent;               // by index; root maps to itself
            std::vector<int> _depth;
            std::vector<std::vector<Vertex>> _children;
            std::vector<int> _entry, _exit;            // DFS interval labels

        public:
            RootedTree() = default;

            // Throws GraphError if the graph is not a tree or root is absent.
            RootedTree(Graph graph, Vertex root);

            auto graph() const -> const Graph & { return _graph; }
            auto root() const -> Vertex { return _root; }
            auto order() const -> std::size_t { return _graph.order(); }

            auto parent(Vertex v) const -> std::optional<Vertex>;
            auto children(Vertex v) const -> std::span<const Vertex>;
            auto depth(Vertex v) const -> int;
            auto height() const -> int;

            // True when u lies on the path from v to the root (u == v included).
            auto is_ancestor(Vertex u, Vertex v) const -> bool;

            auto left_child(Vertex v) const -> std::optional<Vertex>;
            auto right_child(Vertex v) const -> std::optional<Vertex>;

            // Unique tree path from u to v, both ends included.
            auto path(Vertex u, Vertex v) const -> std::vector<Vertex>;

            // v and all its descendants, ascending.
            auto subtree(Vertex v) const -> VertexSet;

            // Vertices at depth d below v (d = 0 gives {v}), ascending.
            auto descendants_at_depth(Vertex v, int d) const -> VertexSet;
    };

    // Distances from source by graph index; -1 marks unreachable vertices.
    // A non-negative radius stops the search at that distance.
    auto distances_from(const Graph & g, Vertex source, int radius = -1) -> std::vector<int>;

    // Throws GraphError for an unknown root, and also when require_connected
    // is set and the graph has vertices outside the root's component.
    auto bfs_layering(const Graph & g, Vertex root, bool require_connected = false) -> Layering;

    // Length of a shortest cycle; nullopt for forests.
    auto girth(const Graph & g) -> std::optional<int>;

    struct LineGraph
    {
        Graph graph;                 // vertex i stands for edge_of[i]
        std::vector<Edge> edge_of;
    };

    auto line_graph(const Graph & g) -> LineGraph;

    auto induced_subgraph(const Graph & g, std::span<const Vertex> s) -> Graph;
    auto remove_vertices(const Graph & g, std::span<const Vertex> s) -> Graph;

    struct Contraction
    {
        Graph graph;
        std::vector<Vertex> part_vertex;   // new vertex for parts[i]
    };

    // Each part collapses onto its representative (the part minimum unless
    // representatives are given; a representative must belong to its part).
    // Throws GraphError on overlapping or disconnected parts.
    auto contract_sets(const Graph & g, const std::vector<VertexSet> & parts,
            const std::vector<Vertex> & representatives = {}) -> Contraction;

    auto is_connected(const Graph & g) -> bool;
    auto connected_components(const Graph & g) -> std::vector<VertexSet>;
    auto is_connected_subset(const Graph & g, std::span<const Vertex> s) -> bool;
    auto is_forest(const Graph & g) -> bool;
    auto is_tree(const Graph & g) -> bool;

    // Shortest path (fewest vertices) from any vertex of sources to any vertex
    // of targets, staying inside allowed when it is non-empty. Ties resolve
    // towards lower identifiers. Empty when no such path exists.
    auto shortest_path(const Graph & g, std::span<const Vertex> sources, std::span<const Vertex> targets,
            std::span<const Vertex> allowed = {}) -> std::vector<Vertex>;

    // Relabels vertices to 0 .. n-1 in ascending order.
    struct Compaction
    {
        Graph graph;
        std::map<Vertex, Vertex> renamed;
    };

    auto compact(const Graph & g) -> Compaction;

    auto to_string(const Graph & g) -> std::string;
    using std::to_string;
}

#endif
