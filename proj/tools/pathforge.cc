/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/certificate.hh>
#include <pathforge/extract.hh>
#include <pathforge/generators.hh>
#include <pathforge/io.hh>
#include <pathforge/minors.hh>
#include <pathforge/patterns.hh>
#include <pathforge/width.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace pathforge;

using nlohmann::json;
using std::string;
using std::vector;

namespace
{
    enum ExitCode
    {
        Success = 0,
        Negative = 1,
        Exhausted = 2,
        InputError = 3
    };

    // An input problem tied to a named file.
    struct FileError
    {
        string file;
        string message;
    };

    struct Options
    {
        string in, out, cert, format = "edge-list";
        std::optional<std::uint64_t> budget;
        std::uint64_t seed = 0;
        bool strict = false, inclusive = false, json = false;
        string strictness;
    };

    Options opts;

    auto graph_format() -> GraphFormat
    {
        if (opts.format == "graph6")
            return GraphFormat::Graph6;
        if (opts.format == "edge-list")
            return GraphFormat::EdgeList;
        throw FileError{"--format", "unknown format '" + opts.format + "'"};
    }

    auto make_budget() -> Budget
    {
        if (opts.budget)
            return Budget{*opts.budget};
        if (auto env = std::getenv("PATHFORGE_BUDGET"); env && *env) {
            char * end = nullptr;
            auto value = std::strtoull(env, &end, 10);
            if (*end || *env == '-')
                throw FileError{"PATHFORGE_BUDGET", "not a step count: '" + string(env) + "'"};
            return Budget{value};
        }
        return Budget::unlimited();
    }

    auto strictness(Strictness fallback = Strictness::Strict) -> Strictness
    {
        if (! opts.strictness.empty()) {
            auto s = parse_strictness(opts.strictness);
            if (! s)
                throw FileError{"--strictness", "expected strict or inclusive"};
            return *s;
        }
        if (opts.strict)
            return Strictness::Strict;
        return opts.inclusive ? Strictness::Inclusive : fallback;
    }

    auto read_graph_file(const string & path) -> Graph
    {
        try {
            if (path.empty() || path == "-")
                return read_graph(std::cin, graph_format());
            std::ifstream in{path};
            if (! in)
                throw FileError{path, "cannot open"};
            return read_graph(in, graph_format());
        }
        catch (const ParseError & e) {
            throw FileError{path.empty() ? "<stdin>" : path, e.what()};
        }
    }

    auto input_graph() -> Graph { return read_graph_file(opts.in); }

    auto parse_int(const string & s, const string & what) -> int
    {
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used == s.size())
                return v;
        }
        catch (const std::logic_error &) {
        }
        throw FileError{what, "not an integer: '" + s + "'"};
    }

    // A pattern is either a file or one of the built-in names below.
    auto pattern_graph(const string & spec) -> Graph
    {
        auto colon = spec.find(':');
        string name = spec.substr(0, colon);
        auto arg = [&] (int index) {
            if (colon == string::npos)
                throw FileError{spec, "pattern needs a parameter"};
            auto rest = spec.substr(colon + 1);
            auto comma = rest.find(',');
            if (index == 0)
                return parse_int(rest.substr(0, comma), spec);
            if (comma == string::npos)
                throw FileError{spec, "pattern needs two parameters"};
            return parse_int(rest.substr(comma + 1), spec);
        };
        if (name == "cbt")
            return complete_binary_tree(arg(0)).graph();
        if (name == "cbt-plus")
            return binary_tree_plus(arg(0)).graph();
        if (name == "cbt-plus-core") {
            auto plus = binary_tree_plus(arg(0));
            auto core = binary_tree_plus_core(arg(0));
            return induced_subgraph(plus.graph(), core);
        }
        if (name == "kary")
            return k_ary_tree(arg(0)).graph();
        if (name == "path")
            return path_graph(arg(0));
        if (name == "cycle")
            return cycle_graph(arg(0));
        if (name == "complete")
            return complete_graph(arg(0));
        if (name == "biclique")
            return complete_bipartite_graph(arg(0), arg(1));
        if (name == "star")
            return star_graph(arg(0));
        if (name == "claw")
            return claw_graph();
        if (name == "net")
            return net_graph();
        return read_graph_file(spec);
    }

    auto open_out(const string & path) -> std::ofstream
    {
        std::ofstream out{path};
        if (! out)
            throw FileError{path, "cannot write"};
        return out;
    }

    auto emit_graph(const Graph & g) -> void
    {
        auto text = write_graph(compact(g).graph, graph_format());
        if (opts.out.empty() || opts.out == "-")
            std::cout << text;
        else
            open_out(opts.out) << text;
    }

    auto emit_certificate(const CertificateFile & c, const string & path) -> void
    {
        if (path.empty())
            return;
        if (path == "-")
            write_certificate(std::cout, c);
        else {
            auto out = open_out(path);
            write_certificate(out, c);
        }
    }

    auto read_certificate_file(const string & path) -> CertificateFile
    {
        std::ifstream in{path};
        if (! in)
            throw FileError{path, "cannot open"};
        try {
            return parse_certificate(in);
        }
        catch (const ParseError & e) {
            throw FileError{path, e.what()};
        }
    }

    auto read_model(const string & path, const Graph & pattern, const Graph & host) -> MinorModel
    {
        auto c = read_certificate_file(path);
        try {
            if (c.hash_of("pattern") != content_hash(pattern))
                throw FileError{path, "pattern graph does not match the certificate hash"};
            if (c.hash_of("host") != content_hash(host))
                throw FileError{path, "host graph does not match the certificate hash"};
            return read_minor_model(c, pattern, host);
        }
        catch (const ParseError & e) {
            throw FileError{path, e.what()};
        }
        catch (const GraphError & e) {
            throw FileError{path, e.what()};
        }
    }

    // Report printed as text or JSON.
    struct Report
    {
        json data = json::object();
        vector<string> lines;

        auto line(const string & s) -> void { lines.push_back(s); }
    };

    auto status_word(SearchStatus s) -> string
    {
        switch (s) {
            case SearchStatus::Found: return "found";
            case SearchStatus::None: return "none";
            case SearchStatus::Exhausted: return "exhausted";
        }
        return "?";
    }

    auto status_code(SearchStatus s) -> int
    {
        switch (s) {
            case SearchStatus::Found: return Success;
            case SearchStatus::None: return Negative;
            case SearchStatus::Exhausted: return Exhausted;
        }
        return Negative;
    }

    auto join(const vector<Vertex> & vs) -> string
    {
        string out;
        for (auto v : vs)
            out += (out.empty() ? "" : " ") + std::to_string(v);
        return out;
    }

    auto parse_list(const string & text, const string & what) -> vector<Vertex>
    {
        vector<Vertex> out;
        string spaced = text;
        for (auto & ch : spaced)
            if (ch == ',')
                ch = ' ';
        std::istringstream in{spaced};
        for (string t; in >> t; )
            out.push_back(parse_int(t, what));
        return out;
    }

    auto compact_model(const MinorModel & m) -> MinorModel
    {
        auto c = compact(m.pattern);
        MinorModel out{c.graph, m.host, {}, m.induced};
        for (auto & [p, xs] : m.branch_sets)
            out.branch_sets[c.renamed.at(p)] = xs;
        return out;
    }

    auto model_json(const MinorModel & m) -> json
    {
        json sets = json::object();
        for (auto & [p, xs] : m.branch_sets)
            sets[std::to_string(p)] = xs;
        return sets;
    }

    auto pipeline_report(Report & r, const PipelineReport & p) -> int
    {
        json stages = json::array();
        for (auto & s : p.stages) {
            stages.push_back({{"stage", s.stage}, {"ok", s.ok}, {"detail", s.detail}});
            r.line((s.ok ? "ok     " : "failed ") + s.stage + (s.detail.empty() ? "" : ": " + s.detail));
        }
        r.data["stages"] = stages;
        r.data["success"] = p.success;
        r.data["exhausted"] = p.exhausted;
        if (! p.failed_stage.empty())
            r.data["failed_stage"] = p.failed_stage;
        if (! p.witness_kind.empty()) {
            r.data["witness"] = p.witness_kind;
            r.line("witness " + p.witness_kind);
        }
        if (p.model) {
            r.data["model"] = model_json(*p.model);
            emit_certificate(certificate_for(*p.model), opts.out);
        }
        r.line(p.success ? "success" : p.exhausted ? "exhausted" : "failed");
        return p.success ? Success : p.exhausted ? Exhausted : Negative;
    }

    using Handler = std::function<int (Report &)>;

    struct Cli
    {
        CLI::App app{"Path-width obstruction toolkit"};
        Handler chosen;
        vector<string> files;
        string pattern, model, target, wattle_file, parts_file, colouring_file, shape, triangles, centres, mode = "induced";
        int k = 1, n = 3, length = 1, max_length = 0, vertex = 0, height = 3, max_degree = 3, cls = -1, stage_target = -1;
        int max_order = int(default_exact_bound);
        double red_probability = 0.5;
        bool has_n = false;

        auto sub(CLI::App * parent, const string & name, const string & about, Handler h) -> CLI::App *
        {
            auto s = parent->add_subcommand(name, about);
            s->callback([this, h] { chosen = h; });
            return s;
        }

        Cli();
    };

    auto gen_handlers(Cli & c, CLI::App * gen) -> void
    {
        auto s = gen->add_subcommand("cbt", "complete binary tree T_k");
        s->add_option("k", c.k, "height")->required();
        s->callback([&c] { c.chosen = [&c] (Report &) { emit_graph(complete_binary_tree(c.k).graph()); return int(Success); }; });

        s = gen->add_subcommand("cbt-plus", "T_{k+1} with an extra leaf on the root");
        s->add_option("k", c.k, "height")->required();
        s->callback([&c] { c.chosen = [&c] (Report &) { emit_graph(binary_tree_plus(c.k).graph()); return int(Success); }; });

        s = gen->add_subcommand("kary", "complete k-ary tree of height k");
        s->add_option("k", c.k, "arity and height")->required();
        s->callback([&c] { c.chosen = [&c] (Report &) { emit_graph(k_ary_tree(c.k).graph()); return int(Success); }; });

        s = gen->add_subcommand("subdivide", "subdivide every edge of the input graph");
        s->add_option("length", c.length, "edges per subdivided path")->default_val(1);
        s->add_option("--max-length", c.max_length, "random lengths in 1 .. max-length drawn from --seed");
        s->add_option("--cert", opts.cert, "write a subdivision certificate");
        s->callback([&c] { c.chosen = [&c] (Report &) {
            auto base = compact(input_graph()).graph;
            std::map<Edge, int> lengths;
            std::mt19937_64 rng{opts.seed};
            for (auto & e : base.edges()) {
                if (c.max_length > 0)
                    lengths[e] = 1 + int(rng() % std::uint64_t(c.max_length));
                else
                    lengths[e] = c.length;
            }
            auto s = subdivide(base, lengths);
            emit_graph(s.graph);
            emit_certificate(certificate_for(SubdivisionEmbedding{s.graph, s.cert, true}), opts.cert);
            return int(Success);
        }; });

        s = gen->add_subcommand("linegraph", "line graph of the input graph");
        s->callback([&c] { c.chosen = [] (Report &) { emit_graph(line_graph(input_graph()).graph); return int(Success); }; });

        s = gen->add_subcommand("net-replace", "replace a degree-3 vertex by a triangle");
        s->add_option("vertex", c.vertex, "vertex to replace")->required();
        s->callback([&c] { c.chosen = [&c] (Report &) { emit_graph(net_graph_replacement(input_graph(), c.vertex).graph); return int(Success); }; });

        s = gen->add_subcommand("wattle", "subdivided T_k with triangles at chosen vertices");
        s->add_option("k", c.k, "height")->required();
        s->add_option("--length", c.length, "edges per base path")->default_val(1);
        s->add_option("--triangles", c.triangles, "comma separated base vertices");
        s->add_option("--cert", opts.cert, "write a wattle certificate");
        s->callback([&c] { c.chosen = [&c] (Report &) {
            std::map<Edge, int> lengths;
            for (auto & e : complete_binary_tree(c.k).graph().edges())
                lengths[e] = c.length;
            auto w = wattle(c.k, lengths, make_vertex_set(parse_list(c.triangles, "--triangles")));
            emit_graph(w.host);
            emit_certificate(certificate_for(w), opts.cert);
            return int(Success);
        }; });

        s = gen->add_subcommand("hat", "hat tree built on T_2k");
        s->add_option("k", c.k, "parameter")->required();
        s->add_option("--cert", opts.cert, "write the T_2k subdivision certificate");
        s->callback([&c] { c.chosen = [&c] (Report &) {
            auto h = hat_tree(c.k);
            emit_graph(h.graph);
            emit_certificate(certificate_for(SubdivisionEmbedding{h.graph, h.cert, false}), opts.cert);
            return int(Success);
        }; });
    }

    Cli::Cli()
    {
        app.require_subcommand(1);
        app.fallthrough();
        app.add_option("--in", opts.in, "input graph (default standard input)");
        app.add_option("--out", opts.out, "output graph or certificate");
        app.add_option("--format", opts.format, "edge-list or graph6")->default_val("edge-list");
        app.add_option("--budget", opts.budget, "search step budget (default PATHFORGE_BUDGET)");
        app.add_option("--seed", opts.seed, "random seed")->default_val(0);
        app.add_flag("--strict", opts.strict, "strict recognizers (default)");
        app.add_flag("--inclusive", opts.inclusive, "inclusive recognizers");
        app.add_option("--strictness", opts.strictness, "strict or inclusive");
        app.add_flag("--json", opts.json, "machine-readable report");

        auto gen = app.add_subcommand("gen", "generate graphs");
        gen->require_subcommand(1);
        gen_handlers(*this, gen);

        auto width = app.add_subcommand("width", "path-width");
        width->require_subcommand(1);
        auto s = width->add_subcommand("exact", "exact path-width by vertex separation");
        s->add_option("--max-order", max_order, "largest component handled");
        s->callback([this] { chosen = [this] (Report & r) {
            auto g = input_graph();
            auto w = pathwidth_exact(g, std::size_t(max_order));
            r.data["width"] = w.width;
            r.line(std::to_string(w.width));
            emit_certificate(certificate_for(g, w.decomposition), opts.out);
            return int(Success);
        }; });
        s = width->add_subcommand("tree", "path-width of a forest");
        s->callback([this] { chosen = [] (Report & r) {
            auto g = input_graph();
            auto w = tree_pathwidth(g);
            r.data["width"] = w.width;
            r.line(std::to_string(w.width));
            emit_certificate(certificate_for(g, w.decomposition), opts.out);
            return int(Success);
        }; });
        s = width->add_subcommand("lower", "lower bound from a minor of known path-width");
        s->add_option("--pattern", pattern, "pattern file or name")->required();
        s->callback([this] { chosen = [this] (Report & r) {
            auto g = input_graph();
            auto p = pattern_graph(pattern);
            auto budget = make_budget();
            auto found = find_minor_model(g, p, budget, false);
            r.data["status"] = status_word(found.status);
            if (! found.found()) {
                r.line(status_word(found.status));
                return status_code(found.status);
            }
            auto bound = pathwidth_lower_bound_by_minor(g, found.value, pathwidth_exact(p).width);
            r.data["lower_bound"] = bound;
            r.line(std::to_string(bound));
            emit_certificate(certificate_for(found.value), opts.out);
            return int(Success);
        }; });

        auto find = app.add_subcommand("find", "pattern containment");
        find->require_subcommand(1);
        for (auto name : {"induced", "subdivision", "minor", "induced-minor"}) {
            auto f = find->add_subcommand(name, string("find an ") + name + " copy of the pattern");
            f->add_option("--pattern", pattern, "pattern file or name")->required();
            if (string(name) == "subdivision")
                f->add_option("--mode", mode, "induced or subgraph")->default_val("induced");
            string kind = name;
            f->callback([this, kind] { chosen = [this, kind] (Report & r) {
                auto g = input_graph();
                auto p = pattern_graph(pattern);
                auto budget = make_budget();
                SearchStatus status;
                if (kind == "induced") {
                    auto res = find_induced_subgraph(g, p, budget);
                    status = res.status;
                    if (res.found()) {
                        json map = json::object();
                        for (auto & [a, b] : res.value.map)
                            map[std::to_string(a)] = b;
                        r.data["map"] = map;
                        emit_certificate(certificate_for(res.value), opts.out);
                    }
                }
                else if (kind == "subdivision") {
                    if (mode != "induced" && mode != "subgraph")
                        throw FileError{"--mode", "expected induced or subgraph"};
                    auto res = find_induced_subdivision(g, p, budget, {}, mode == "induced");
                    status = res.status;
                    if (res.found()) {
                        r.data["branch"] = res.value.cert.branch_map;
                        emit_certificate(certificate_for(res.value), opts.out);
                    }
                }
                else {
                    auto res = find_minor_model(g, p, budget, kind == "induced-minor");
                    status = res.status;
                    if (res.found()) {
                        r.data["model"] = model_json(res.value);
                        emit_certificate(certificate_for(res.value), opts.out);
                    }
                }
                r.data["status"] = status_word(status);
                r.data["steps"] = budget.used();
                r.line(status_word(status));
                return status_code(status);
            }; });
        }

        s = app.add_subcommand("recognize", "shape recognizers");
        s->add_option("--shape", shape, "complete, complete-bipartite, claw, fork, semi-fork, net, tripod, semi-tripod")->required();
        s->add_option("--n", n, "look for an induced K_n or K_{n,n} instead")->each([this] (const string &) { has_n = true; });
        s->callback([this] { chosen = [this] (Report & r) {
            auto sh = parse_shape(shape);
            if (! sh)
                throw FileError{"--shape", "unknown shape '" + shape + "'"};
            auto g = input_graph();
            if (has_n) {
                Graph target;
                if (*sh == Shape::Complete)
                    target = complete_graph(n);
                else if (*sh == Shape::CompleteBipartite)
                    target = complete_bipartite_graph(n, n);
                else
                    throw FileError{"--n", "only complete and complete-bipartite take --n"};
                auto budget = make_budget();
                auto res = find_induced_subgraph(g, target, budget);
                auto word = res.found() ? string("present") : res.status == SearchStatus::None ? "absent" : "exhausted";
                r.data["result"] = word;
                r.line(word);
                return status_code(res.status);
            }
            auto rec = recognize(g, *sh, strictness());
            r.data["matches"] = rec.matches;
            r.data["kind"] = rec.kind;
            r.data["parts"] = rec.parts;
            r.line(rec.matches ? "match " + rec.kind : "no match");
            return rec.matches ? int(Success) : int(Negative);
        }; });

        auto model_cmd = app.add_subcommand("model", "minor models");
        model_cmd->require_subcommand(1);
        s = model_cmd->add_subcommand("validate", "check a model certificate against --in");
        s->add_option("--model", model, "model certificate")->required();
        s->add_option("--pattern", pattern, "pattern file or name")->required();
        s->callback([this] { chosen = [this] (Report & r) {
            auto g = input_graph();
            auto m = read_model(model, pattern_graph(pattern), g);
            auto problems = validate_model(m);
            json list = json::array();
            for (auto & p : problems) {
                list.push_back({{"condition", p.condition}, {"detail", p.detail}});
                r.line(p.condition + ": " + p.detail);
            }
            r.data["valid"] = problems.empty();
            r.data["problems"] = list;
            r.line(problems.empty() ? "valid" : "invalid");
            return problems.empty() ? int(Success) : int(Negative);
        }; });
        s = model_cmd->add_subcommand("repair", "turn a model of H+ into an induced model of H");
        s->add_option("--model", model, "model certificate of the plus pattern")->required();
        s->add_option("--pattern", pattern, "plus pattern file or name")->required();
        s->add_option("--target", target, "target pattern file or name")->required();
        s->callback([this] { chosen = [this] (Report & r) {
            auto g = input_graph();
            auto m = read_model(model, pattern_graph(pattern), g);
            auto res = repair_to_induced_model(m, pattern_graph(target));
            r.data["iterations"] = res.iterations;
            r.data["history"] = res.history;
            r.line("iterations " + std::to_string(res.iterations));
            emit_certificate(certificate_for(res.model), opts.out);
            return int(Success);
        }; });

        s = app.add_subcommand("partition", "distance-5 colour classes");
        s->callback([this] { chosen = [] (Report & r) {
            auto g = input_graph();
            auto p = distance5_partition(g);
            r.data["classes"] = p.classes;
            r.line("classes " + std::to_string(p.classes.size()));
            for (std::size_t i = 0; i < p.classes.size(); ++i)
                r.line("class " + std::to_string(i) + ": " + join(p.classes[i]));
            emit_certificate(certificate_for(g, p), opts.out);
            return int(Success);
        }; });

        s = app.add_subcommand("contract-balls", "contract radius-2 balls around centres");
        s->add_option("--centres", centres, "comma separated centres");
        s->add_option("--class", cls, "use this class of the distance-5 partition");
        s->add_option("--cert", opts.cert, "write the minor model certificate");
        s->callback([this] { chosen = [this] (Report & r) {
            auto g = input_graph();
            VertexSet cs;
            if (cls >= 0) {
                auto p = distance5_partition(g);
                if (std::size_t(cls) >= p.classes.size())
                    throw FileError{"--class", "only " + std::to_string(p.classes.size()) + " classes"};
                cs = p.classes[cls];
            }
            else
                cs = make_vertex_set(parse_list(centres, "--centres"));
            auto b = ball_contract(g, cs);
            auto m = compact_model(b.model);
            emit_graph(m.pattern);
            emit_certificate(certificate_for(m), opts.cert);
            r.data["order"] = b.graph.order();
            r.data["centres"] = b.centres;
            return int(Success);
        }; });

        auto extract = app.add_subcommand("extract", "extraction steps");
        extract->require_subcommand(1);
        s = extract->add_subcommand("clean-fork", "induced fork or semi-fork on three ends");
        s->add_option("--parts", parts_file, "file with a_side, b_side, c_side, s, a, b, c lines")->required();
        s->callback([this] { chosen = [this] (Report & r) {
            auto g = input_graph();
            std::ifstream in{parts_file};
            if (! in)
                throw FileError{parts_file, "cannot open"};
            ForkParts parts{};
            int line_no = 0;
            for (string line; std::getline(in, line); ) {
                ++line_no;
                auto colon = line.find(':');
                if (line.empty() || line[0] == '#')
                    continue;
                if (colon == string::npos)
                    throw FileError{parts_file, "line " + std::to_string(line_no) + ": expected 'name: vertices'"};
                auto key = line.substr(0, colon);
                auto vs = parse_list(line.substr(colon + 1), parts_file);
                auto one = [&] {
                    if (vs.size() != 1)
                        throw FileError{parts_file, "line " + std::to_string(line_no) + ": expected one vertex"};
                    return vs[0];
                };
                if (key == "a_side") parts.a_side = make_vertex_set(vs);
                else if (key == "b_side") parts.b_side = make_vertex_set(vs);
                else if (key == "c_side") parts.c_side = make_vertex_set(vs);
                else if (key == "s") parts.s = make_vertex_set(vs);
                else if (key == "a") parts.a = one();
                else if (key == "b") parts.b = one();
                else if (key == "c") parts.c = one();
                else
                    throw FileError{parts_file, "line " + std::to_string(line_no) + ": unknown part '" + key + "'"};
            }
            auto problems = check_fork_parts(g, parts);
            if (! problems.empty())
                throw FileError{parts_file, problems.front()};
            auto f = clean_fork(g, parts);
            r.data["kind"] = f.semi ? "semi-fork" : "fork";
            r.line(f.semi ? "semi-fork" : "fork");
            emit_certificate(certificate_for(f.embedding), opts.out);
            return int(Success);
        }; });

        s = extract->add_subcommand("wattle", "wattle from a model of the height-composed tree");
        s->add_option("--model", model, "model certificate")->required();
        s->add_option("--pattern", pattern, "pattern file or name")->required();
        s->add_option("--k", k, "parameter")->required();
        s->callback([this] { chosen = [this] (Report & r) {
            auto g = input_graph();
            auto w = minor_to_wattle(read_model(model, pattern_graph(pattern), g), k);
            r.data["height"] = w.base.height();
            r.data["triangles"] = w.triangles;
            r.line("wattle of height " + std::to_string(w.base.height()) + " with " + std::to_string(w.triangles.size()) + " triangles");
            emit_certificate(certificate_for(w), opts.out);
            return int(Success);
        }; });

        s = extract->add_subcommand("mono-cbt", "monochromatic subdivided T_k in a coloured T_height");
        s->add_option("--k", k, "target height")->required();
        s->add_option("--height", height, "height of the coloured tree")->required();
        s->add_option("--colouring", colouring_file, "lines 'v red|blue'; random from --seed otherwise");
        s->add_option("--red-probability", red_probability, "chance of red in random colourings")->default_val(0.5);
        s->callback([this] { chosen = [this] (Report & r) {
            TwoColoring col{complete_binary_tree(height), {}};
            if (! colouring_file.empty()) {
                std::ifstream in{colouring_file};
                if (! in)
                    throw FileError{colouring_file, "cannot open"};
                int line_no = 0;
                for (string line; std::getline(in, line); ) {
                    ++line_no;
                    std::istringstream ls{line};
                    string v, c;
                    if (! (ls >> v) || v[0] == '#')
                        continue;
                    if (! (ls >> c) || (c != "red" && c != "blue"))
                        throw FileError{colouring_file, "line " + std::to_string(line_no) + ": expected 'v red|blue'"};
                    col.colour[parse_int(v, colouring_file)] = c == "red" ? Colour::Red : Colour::Blue;
                }
            }
            else {
                std::mt19937_64 rng{opts.seed};
                std::bernoulli_distribution red{red_probability};
                for (auto v : col.target.graph().vertices())
                    col.colour[v] = red(rng) ? Colour::Red : Colour::Blue;
            }
            auto e = monochromatic_cbt(col, k);
            auto problems = validate_vertical(e, &col);
            if (! problems.empty())
                throw GraphError{"internal: " + problems.front()};
            r.data["colour"] = to_string(e.colour);
            r.data["root_image"] = e.root_image;
            r.line(to_string(e.colour) + " T_" + std::to_string(k) + " rooted at " + std::to_string(e.root_image));
            emit_certificate(certificate_for(SubdivisionEmbedding{e.host_tree.graph(), e.cert, true}), opts.out);
            return int(Success);
        }; });

        s = extract->add_subcommand("to-subgraph", "induced subdivision or line graph from a wattle");
        s->add_option("--wattle", wattle_file, "wattle certificate")->required();
        s->add_option("--k", k, "target height")->required();
        s->callback([this] { chosen = [this] (Report & r) {
            auto g = input_graph();
            auto c = read_certificate_file(wattle_file);
            WattleCertificate w;
            try {
                if (c.hash_of("host") != content_hash(g))
                    throw FileError{wattle_file, "host graph does not match the certificate hash"};
                w = read_wattle(c, g);
            }
            catch (const ParseError & e) {
                throw FileError{wattle_file, e.what()};
            }
            if (auto problems = validate_wattle(w, EmbeddingMode::Induced); ! problems.empty())
                throw FileError{wattle_file, problems.front()};
            auto x = wattle_to_subgraph(w, k);
            r.data["kind"] = x.is_line_graph() ? "line-graph" : "subdivision";
            r.line(x.is_line_graph() ? "line-graph" : "subdivision");
            if (x.is_line_graph())
                emit_certificate(certificate_for(std::get<LineGraphEmbedding>(x.result)), opts.out);
            else
                emit_certificate(certificate_for(std::get<SubdivisionEmbedding>(x.result)), opts.out);
            return int(Success);
        }; });

        s = extract->add_subcommand("pipeline-deg", "bounded-degree pipeline");
        s->add_option("--k", k, "target height")->required();
        s->add_option("--max-degree", max_degree, "degree bound of the input")->required();
        s->add_option("--stage-target", stage_target, "path-width asked of each stage");
        s->callback([this] { chosen = [this] (Report & r) {
            auto g = input_graph();
            auto budget = make_budget();
            BoundedDegreeOptions o;
            o.stage_target = stage_target;
            return pipeline_report(r, bounded_degree_pipeline(g, k, max_degree, budget, o));
        }; });

        s = extract->add_subcommand("pipeline-minorfree", "pipeline for K_n-minor-free inputs");
        s->add_option("--k", k, "target height")->required();
        s->add_option("--n", n, "clique and biclique size")->required();
        s->callback([this] { chosen = [this] (Report & r) {
            auto g = input_graph();
            auto budget = make_budget();
            return pipeline_report(r, minor_free_pipeline(g, k, n, budget));
        }; });

        s = app.add_subcommand("decide", "does a finite forbidden set bound path-width");
        s->add_option("graphs", files, "graph files")->required();
        s->callback([this] { chosen = [this] (Report & r) {
            vector<Graph> gs;
            for (auto & f : files)
                gs.push_back(read_graph_file(f));
            auto d = decide_bounded_pathwidth(gs, strictness(Strictness::Inclusive));
            r.data["bounded"] = d.bounded;
            r.data["witnesses"] = d.witnesses;
            r.data["missing"] = d.missing;
            for (auto & [cat, i] : d.witnesses)
                r.line(cat + ": " + files[i]);
            for (auto & m : d.missing)
                r.line("missing " + m);
            r.line(d.bounded ? "bounded" : "unbounded");
            return d.bounded ? int(Success) : int(Negative);
        }; });

        s = app.add_subcommand("verify", "re-validate a certificate");
        s->add_option("certificate", target, "certificate file")->required();
        s->add_option("graphs", files, "graph files the certificate refers to");
        s->callback([this] { chosen = [this] (Report & r) {
            auto c = read_certificate_file(target);
            vector<Graph> gs;
            for (auto & f : files)
                gs.push_back(read_graph_file(f));
            if (files.empty() || ! opts.in.empty())
                gs.push_back(input_graph());
            auto problems = verify_certificate(c, gs);
            r.data["kind"] = c.kind;
            r.data["valid"] = problems.empty();
            r.data["problems"] = problems;
            for (auto & p : problems)
                r.line(p);
            r.line(problems.empty() ? "valid" : "invalid");
            return problems.empty() ? int(Success) : int(Negative);
        }; });
    }
}

auto main(int argc, char * argv[]) -> int
{
    Cli cli;
    try {
        cli.app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return cli.app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return cli.app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        cli.app.exit(e);
        return InputError;
    }

    auto fail = [] (int code, const string & message) {
        std::cerr << "pathforge: " << message << '\n';
        if (opts.json)
            std::cout << json{{"exit", code}, {"error", message}}.dump(2) << '\n';
        return code;
    };

    Report report;
    int code = InputError;
    try {
        if (opts.strict && opts.inclusive)
            throw FileError{"--strict", "conflicts with --inclusive"};
        code = cli.chosen(report);
    }
    catch (const FileError & e) {
        return fail(InputError, e.file + ": " + e.message);
    }
    catch (const SizeLimitError & e) {
        return fail(Exhausted, e.what());
    }
    catch (const GraphError & e) {
        return fail(InputError, e.what());
    }

    if (opts.json) {
        report.data["exit"] = code;
        std::cout << report.data.dump(2) << '\n';
    }
    else
        for (auto & l : report.lines)
            std::cout << l << '\n';
    return code;
}
