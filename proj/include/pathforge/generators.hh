/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PATHFORGE_GENERATORS_HH
#define PATHFORGE_GENERATORS_HH 1

#include <pathforge/graph.hh>

#include <map>
#include <string>
#include <vector>

namespace pathforge
{
    // A subdivision of base inside some host: each base vertex has a host
    // image and each base edge (u, v), u < v, a host path running from the
    // image of u to the image of v.
    struct SubdivisionCert
    {
        Graph base;
        std::map<Vertex, Vertex> branch_map;
        std::map<Edge, std::vector<Vertex>> path_map;

        auto original_vertices() const -> VertexSet;
        auto image_vertices() const -> VertexSet;
        auto image_edges() const -> std::vector<Edge>;
    };

    enum class EmbeddingMode
    {
        Subgraph,   // image edges exist in the host
        Induced,    // host restricted to the image has exactly the image edges
        Exact       // additionally the image covers the whole host
    };

    // Empty when the certificate is valid for host under mode; otherwise one
    // line per problem.
    auto validate_subdivision(const Graph & host, const SubdivisionCert & cert, EmbeddingMode mode) -> std::vector<std::string>;

    // Complete binary tree of height k; vertex i has children 2i+1 and 2i+2.
    auto complete_binary_tree(int k) -> RootedTree;

    // T_{k+1} with an extra leaf 2^{k+2} - 1 on the root.
    auto binary_tree_plus(int k) -> RootedTree;

    // The copy of T_k inside binary_tree_plus(k): vertices 0 .. 2^{k+1} - 2.
    auto binary_tree_plus_core(int k) -> VertexSet;

    // Rooted tree of height k where every non-leaf has k children; vertices
    // numbered in breadth-first order from the root 0.
    auto k_ary_tree(int k) -> RootedTree;

    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto complete_graph(int n) -> Graph;
    auto complete_bipartite_graph(int a, int b) -> Graph;
    auto star_graph(int leaves) -> Graph;
    auto claw_graph() -> Graph;
    auto net_graph() -> Graph;

    // Claw subdivision with the given arm lengths (each >= 1), centre 0.
    auto fork_graph(int a, int b, int c) -> Graph;

    // Triangle 0, 1, 2 with pendant paths of the given lengths (each >= 0).
    auto semi_fork_graph(int a, int b, int c) -> Graph;

    // Disjoint union, the second graph shifted past the first's identifiers.
    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

    struct Subdivided
    {
        Graph graph;
        SubdivisionCert cert;
    };

    // Every base edge gets a path with lengths[e] edges (missing entries are an
    // error unless lengths is empty, which means length 1 everywhere).
    // Original vertices keep their identifiers; new vertices follow
    // base.next_free_id() in edge order.
    auto subdivide(const Graph & base, const std::map<Edge, int> & lengths) -> Subdivided;
    auto subdivide_uniform(const Graph & base, int length) -> Subdivided;

    struct NetReplacement
    {
        Graph graph;
        Vertex x, y, z;     // new triangle
        Vertex a, b, c;     // old neighbours, ascending; x~a, y~b, z~c
    };

    // Throws GraphError unless v has degree exactly 3.
    auto net_graph_replacement(const Graph & g, Vertex v) -> NetReplacement;

    // A subdivided T_k with net-graph replacements at the base vertices in
    // triangles. branch_map gives one host vertex per base vertex, three for a
    // triangle vertex; path_map runs between the attachment vertices of the
    // two ends, so a triangle vertex is the end of exactly one incident path.
    struct WattleCertificate
    {
        RootedTree base;
        VertexSet triangles;
        Graph host;
        std::map<Vertex, std::vector<Vertex>> branch_map;
        std::map<Edge, std::vector<Vertex>> path_map;

        auto image_vertices() const -> VertexSet;
        auto image_edges() const -> std::vector<Edge>;

        // The end of path_map[{u, w}] lying in u's image.
        auto attachment(Vertex u, Vertex w) const -> Vertex;
    };

    // Checks the certificate against its own host. Exact requires the image to
    // be the whole host; Induced only that host[image] has the wattle edges.
    auto validate_wattle(const WattleCertificate & w, EmbeddingMode mode) -> std::vector<std::string>;

    // Throws GraphError if triangles holds the root, a leaf, or a non-vertex.
    // The host is relabelled to 0 .. n-1.
    auto wattle(int k, const std::map<Edge, int> & lengths, const VertexSet & triangles) -> WattleCertificate;

    struct HatTree
    {
        Graph graph;
        RootedTree base;              // T_{2k}
        VertexSet branch_vertices;    // X, identifiers equal to base identifiers
        Layering layering;
        SubdivisionCert cert;         // the T_{2k} subdivision inside graph
    };

    // Base vertex v sits on layer 3 * preorder(v); every branch vertex is
    // joined to the rest of its layer.
    auto hat_tree(int k) -> HatTree;
}

#endif
