/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/extract.hh>

#include <algorithm>
#include <bit>
#include <set>

using std::map;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace pathforge
{
    auto to_string(Colour c) -> string
    {
        return c == Colour::Red ? "red" : "blue";
    }

    auto validate_vertical(const VerticalEmbedding & e, const TwoColoring * colouring) -> vector<string>
    {
        auto problems = validate_subdivision(e.host_tree.graph(), e.cert, EmbeddingMode::Subgraph);
        if (! problems.empty())
            return problems;
        auto root = e.cert.branch_map.find(0);
        if (root == e.cert.branch_map.end() || root->second != e.root_image)
            problems.push_back("root image differs from the image of the base root");
        for (auto v : e.cert.image_vertices())
            if (! e.host_tree.is_ancestor(e.root_image, v))
                problems.push_back("image vertex " + to_string(v) + " is not below the root image");
        if (colouring)
            for (auto & [b, h] : e.cert.branch_map) {
                auto c = colouring->colour.find(h);
                if (c == colouring->colour.end())
                    problems.push_back("vertex " + to_string(h) + " has no colour");
                else if (c->second != e.colour)
                    problems.push_back("original vertex " + to_string(h) + " is not " + to_string(e.colour));
            }
        return problems;
    }

    namespace
    {
        auto other(Colour c) -> Colour
        {
            return c == Colour::Red ? Colour::Blue : Colour::Red;
        }

        // Heap position of i inside a tree hung one level lower, on the
        // given side of a new root.
        auto lift(Vertex i, bool right) -> Vertex
        {
            int d = std::bit_width(unsigned(i + 1)) - 1;
            Vertex offset = i + 1 - (1 << d);
            return (1 << (d + 1)) - 1 + offset + (right ? (1 << d) : 0);
        }

        struct Partial
        {
            map<Vertex, Vertex> branch;
            map<Edge, vector<Vertex>> paths;
            Colour colour;
            Vertex root;
        };

        class Mono
        {
            private:
                const TwoColoring & _c;
                const RootedTree & _t;
                map<std::pair<Vertex, int>, Partial> _memo;

                auto colour_of(Vertex v) const -> Colour { return _c.colour.at(v); }

                auto join(Vertex root, const Partial & left, const Partial & right, Colour colour) const -> Partial
                {
                    Partial p{{{0, root}}, {}, colour, root};
                    for (auto [side, sub] : {std::pair{false, &left}, std::pair{true, &right}}) {
                        for (auto & [i, h] : sub->branch)
                            p.branch[lift(i, side)] = h;
                        for (auto & [e, path] : sub->paths)
                            p.paths[make_edge(lift(e.first, side), lift(e.second, side))] = path;
                        p.paths[make_edge(0, side ? 2 : 1)] = _t.path(root, sub->root);
                    }
                    return p;
                }

                // The plain T_k hanging from y.
                auto plain(Vertex y, int k, Colour colour) const -> Partial
                {
                    Partial p{{{0, y}}, {}, colour, y};
                    for (Vertex i = 1; i < (Vertex{1} << (k + 1)) - 1; ++i) {
                        Vertex parent = (i - 1) / 2;
                        auto kids = _t.children(p.branch.at(parent));
                        p.branch[i] = kids[(i - 1) % 2];
                        p.paths[make_edge(parent, i)] = {p.branch.at(parent), p.branch.at(i)};
                    }
                    return p;
                }

            public:
                Mono(const TwoColoring & c) :
                    _c(c),
                    _t(c.target)
                {
                }

                auto build(Vertex x, int k) -> const Partial &
                {
                    if (auto it = _memo.find({x, k}); it != _memo.end())
                        return it->second;

                    Partial result;
                    if (k == 0)
                        result = Partial{{{0, x}}, {}, colour_of(x), x};
                    else {
                        auto rho = colour_of(x);
                        auto kids = _t.children(x);
                        Vertex sides[2] = {kids[0], kids[1]};

                        // trees of colour rho on each side, leftmost first
                        std::optional<Vertex> rho_tree[2];
                        for (int side = 0; side < 2; ++side)
                            for (auto z : _t.descendants_at_depth(sides[side], k + 1))
                                if (build(z, k - 1).colour == rho) {
                                    rho_tree[side] = z;
                                    break;
                                }

                        if (rho_tree[0] && rho_tree[1])
                            result = join(x, build(*rho_tree[0], k - 1), build(*rho_tree[1], k - 1), rho);
                        else {
                            // every tree on this side has the other colour
                            Vertex side = rho_tree[0] ? sides[1] : sides[0];
                            auto sigma = other(rho);
                            std::optional<Vertex> apex;
                            for (int d = 0; d <= k && ! apex; ++d)
                                for (auto y : _t.descendants_at_depth(side, d))
                                    if (colour_of(y) == sigma) {
                                        apex = y;
                                        break;
                                    }
                            if (apex) {
                                int below = k + 1 - (_t.depth(*apex) - _t.depth(side));
                                auto apex_kids = _t.children(*apex);
                                Vertex l = _t.descendants_at_depth(apex_kids[0], below - 1).front();
                                Vertex r = _t.descendants_at_depth(apex_kids[1], below - 1).front();
                                result = join(*apex, build(l, k - 1), build(r, k - 1), sigma);
                            }
                            else
                                result = plain(side, k, rho);
                        }
                    }
                    return _memo.emplace(std::pair{x, k}, std::move(result)).first->second;
                }
        };

        auto is_complete_binary(const RootedTree & t) -> bool
        {
            int h = t.height();
            for (auto v : t.graph().vertices()) {
                auto n = t.children(v).size();
                if (n != 0 && n != 2)
                    return false;
                if (n == 0 && t.depth(v) != h)
                    return false;
            }
            return true;
        }
    }

    auto monochromatic_cbt(const TwoColoring & colouring, int k) -> VerticalEmbedding
    {
        if (k < 0)
            throw GraphError{"k must be non-negative"};
        auto & t = colouring.target;
        if (! is_complete_binary(t))
            throw GraphError{"colouring target is not a complete binary tree"};
        if (t.height() < mono_height(k))
            throw GraphError{"tree height " + to_string(t.height()) + " is below " + to_string(mono_height(k))};
        for (auto v : t.graph().vertices())
            if (! colouring.colour.count(v))
                throw GraphError{"vertex " + to_string(v) + " has no colour"};

        Mono mono{colouring};
        auto & p = mono.build(t.root(), k);
        VerticalEmbedding e{t, SubdivisionCert{complete_binary_tree(k).graph(), p.branch, p.paths}, p.root, p.colour};
        if (auto problems = validate_vertical(e, &colouring); ! problems.empty())
            throw GraphError{"internal error: monochromatic tree fails validation: " + problems.front()};
        return e;
    }

    auto LineGraphEmbedding::image() const -> VertexSet
    {
        vector<Vertex> result;
        for (auto & [e, h] : edge_image)
            result.push_back(h);
        return make_vertex_set(std::move(result));
    }

    auto validate_line_graph_embedding(const LineGraphEmbedding & e) -> vector<string>
    {
        auto problems = validate_subdivision(e.tree.graph, e.tree.cert, EmbeddingMode::Exact);
        auto edges = e.tree.graph.edges();
        if (edges.size() != e.edge_image.size())
            problems.push_back("edge map size differs from the tree's edge count");
        set<Vertex> used;
        for (auto f : edges) {
            auto it = e.edge_image.find(f);
            if (it == e.edge_image.end()) {
                problems.push_back("tree edge " + to_string(f.first) + "-" + to_string(f.second) + " has no image");
                continue;
            }
            if (! e.host.has_vertex(it->second))
                problems.push_back("image " + to_string(it->second) + " is not a host vertex");
            else if (! used.insert(it->second).second)
                problems.push_back("host vertex " + to_string(it->second) + " used twice");
        }
        if (! problems.empty())
            return problems;
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                auto [a, b] = edges[i];
                auto [c, d] = edges[j];
                bool share = a == c || a == d || b == c || b == d;
                bool adjacent = e.host.adjacent(e.edge_image.at(edges[i]), e.edge_image.at(edges[j]));
                if (share != adjacent)
                    problems.push_back("tree edges " + to_string(a) + "-" + to_string(b) + " and " + to_string(c) + "-"
                            + to_string(d) + (share ? " meet but their images are not adjacent" : " are apart but their images are adjacent"));
            }
        return problems;
    }

    namespace
    {
        // Host vertices along a path of wattle base vertices, from the
        // attachment at the first towards the second to the attachment at
        // the last towards the one before.
        auto trace(const WattleCertificate & w, const vector<Vertex> & base_path) -> vector<Vertex>
        {
            vector<Vertex> result;
            for (std::size_t t = 0; t + 1 < base_path.size(); ++t) {
                auto u = base_path[t], v = base_path[t + 1];
                auto segment = w.path_map.at(make_edge(u, v));
                if (segment.front() != w.attachment(u, v))
                    std::reverse(segment.begin(), segment.end());
                auto from = segment.begin();
                if (! result.empty() && result.back() == *from)
                    ++from;
                result.insert(result.end(), from, segment.end());
            }
            return result;
        }
    }

    auto wattle_to_subgraph(const WattleCertificate & w, int k) -> WattleExtraction
    {
        if (w.base.height() < mono_height(k))
            throw GraphError{"wattle height " + to_string(w.base.height()) + " is below " + to_string(mono_height(k))};

        TwoColoring colouring{w.base, {}};
        for (auto v : w.base.graph().vertices())
            colouring.colour[v] = std::binary_search(w.triangles.begin(), w.triangles.end(), v) ? Colour::Red : Colour::Blue;
        auto tree = monochromatic_cbt(colouring, k);

        auto base = complete_binary_tree(k).graph();
        map<Edge, vector<Vertex>> host_paths;
        for (auto e : base.edges())
            host_paths[e] = trace(w, tree.cert.path_map.at(e));

        // T_0 is reported as a plain single vertex in either colour
        if (tree.colour == Colour::Blue || base.order() == 1) {
            SubdivisionCert cert{base, {}, host_paths};
            for (auto & [i, b] : tree.cert.branch_map)
                cert.branch_map[i] = w.branch_map.at(b).front();
            return WattleExtraction{SubdivisionEmbedding{w.host, cert, true}, tree};
        }

        map<Edge, int> lengths;
        for (auto & [e, p] : host_paths)
            lengths[e] = int(p.size());
        LineGraphEmbedding lg{w.host, subdivide(base, lengths), {}};
        for (auto & [e, p] : host_paths) {
            auto & fpath = lg.tree.cert.path_map.at(e);
            for (std::size_t t = 0; t < p.size(); ++t)
                lg.edge_image[make_edge(fpath[t], fpath[t + 1])] = p[t];
        }
        return WattleExtraction{lg, tree};
    }

    auto validate_extraction(const WattleExtraction & x) -> vector<string>
    {
        if (auto * s = std::get_if<SubdivisionEmbedding>(&x.result))
            return validate_subdivision_embedding(*s);
        return validate_line_graph_embedding(std::get<LineGraphEmbedding>(x.result));
    }

    auto induced_minor_to_induced_subgraph(const MinorModel & m, int k) -> WattleExtraction
    {
        auto w = minor_to_wattle(m, mono_height(k));
        auto result = wattle_to_subgraph(w, k);
        if (auto problems = validate_extraction(result); ! problems.empty())
            throw GraphError{"internal error: extraction fails validation: " + problems.front()};
        return result;
    }
}
