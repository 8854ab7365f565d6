/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/extract.hh>

#include <cmath>
#include <limits>

using std::string;
using std::to_string;
using std::vector;

namespace pathforge
{
    auto degree_recurrence(double next, double delta, int max_degree) -> double
    {
        double d2 = double(max_degree) * double(max_degree);
        double log_term = next > 1.0 ? std::pow(std::log(next), delta) : 0.0;
        return (2.0 * next * next * log_term + 1.0) * (d2 + 1.0) - 1.0;
    }

    auto degree_recurrence_chain(int k, double delta, int max_degree) -> vector<double>
    {
        // g(Delta^4 + 1) = |V(T_k^+)| - 1 = 2^{k+2} - 1
        vector<double> chain{std::ldexp(1.0, k + 2) - 1.0};
        long steps = long(std::pow(double(max_degree), 4.0)) + 1;
        for (long i = 0; i < steps && std::isfinite(chain.back()); ++i)
            chain.push_back(degree_recurrence(chain.back(), delta, max_degree));
        return chain;
    }

    auto bounded_degree_pipeline(const Graph & g, int k, int max_degree, Budget & budget,
            const BoundedDegreeOptions & options) -> PipelineReport
    {
        PipelineReport report;
        auto log = [&] (const string & stage, bool ok, const string & detail) {
            report.stages.push_back(StageLog{stage, ok, detail});
            if (! ok && report.failed_stage.empty())
                report.failed_stage = stage;
            return ok;
        };

        if (k < 1)
            throw GraphError{"pipeline needs k >= 1"};
        if (int(g.max_degree()) > max_degree) {
            log("input", false, "maximum degree " + to_string(g.max_degree()) + " exceeds " + to_string(max_degree));
            return report;
        }

        auto plus = binary_tree_plus(k);
        int target = options.stage_target >= 0 ? options.stage_target : tree_pathwidth(plus.graph()).width;

        auto partition = distance5_partition(g);
        log("partition", true, to_string(partition.classes.size()) + " distance-5 classes");

        Graph current = g;
        for (std::size_t i = 0; i < partition.classes.size(); ++i) {
            string stage = "class " + to_string(i);
            vector<Vertex> live;
            for (auto v : partition.classes[i])
                if (current.has_vertex(v))
                    live.push_back(v);
            if (live.empty()) {
                log(stage, true, "no surviving vertices");
                continue;
            }

            auto contraction = ball_contract(current, make_vertex_set(live));
            auto deg3 = find_deg3_subgraph(contraction.graph, target, budget, options.exact_bound);
            if (deg3.status != SearchStatus::Found) {
                report.exhausted = deg3.status == SearchStatus::Exhausted;
                log(stage, false, report.exhausted ? "budget exhausted looking for a max-degree-3 subgraph"
                        : "contracted graph has pathwidth below " + to_string(target));
                return report;
            }

            Restriction restriction;
            try {
                restriction = sparsifiable_restriction(current, contraction, deg3.subgraph);
            }
            catch (const GraphError & e) {
                log(stage, false, string{"restriction failed: "} + e.what());
                return report;
            }
            current = induced_subgraph(current, restriction.kept);
            log(stage, true, to_string(current.order()) + " vertices kept, certified pathwidth >= "
                    + to_string(deg3.width.width) + " (" + deg3.method + ")");
        }

        if (! is_sparsifiable_graph(current)) {
            log("sparsifiable", false, "restricted graph is not sparsifiable");
            return report;
        }
        log("sparsifiable", true, to_string(current.order()) + " vertices");

        auto minor = find_minor_model(current, plus.graph(), budget);
        if (! minor.found()) {
            report.exhausted = minor.status == SearchStatus::Exhausted;
            log("plus-minor", false, report.exhausted ? "budget exhausted" : "no T_k^+ minor in the restricted graph");
            return report;
        }
        log("plus-minor", true, "found");

        auto core = induced_subgraph(plus.graph(), binary_tree_plus_core(k));
        auto repaired = repair_to_induced_model(minor.value, core);
        log("repair", true, to_string(repaired.iterations) + " moves");

        MinorModel model{core, g, repaired.model.branch_sets, true};
        if (auto problems = validate_model(model); ! problems.empty()) {
            log("validate", false, problems.front().detail);
            return report;
        }
        log("validate", true, "induced model of T_k");
        report.model = std::move(model);
        report.success = true;
        return report;
    }

    auto minor_free_pipeline(const Graph & g, int k, int n, Budget & budget, int tree_height) -> PipelineReport
    {
        PipelineReport report;
        auto log = [&] (const string & stage, bool ok, const string & detail) {
            report.stages.push_back(StageLog{stage, ok, detail});
            if (! ok && report.failed_stage.empty())
                report.failed_stage = stage;
            return ok;
        };
        if (k < 1 || n < 1)
            throw GraphError{"pipeline needs k, n >= 1"};
        int m = tree_height < 0 ? k : tree_height;
        if (m < k)
            throw GraphError{"tree height must be at least k"};

        auto clique = complete_graph(n);
        auto as_subgraph = find_induced_subgraph(g, clique, budget, false);
        if (as_subgraph.found()) {
            MinorModel witness{clique, g, {}, true};
            for (auto & [p, h] : as_subgraph.value.map)
                witness.branch_sets[p] = VertexSet{h};
            report.model = witness;
            report.witness_kind = "K_" + to_string(n) + " subgraph";
            log("spot-check", false, "input contains K_" + to_string(n));
            return report;
        }
        if (n <= 4) {
            auto as_minor = find_minor_model(g, clique, budget);
            if (as_minor.found()) {
                report.model = as_minor.value;
                report.witness_kind = "K_" + to_string(n) + " minor";
                log("spot-check", false, "input has a K_" + to_string(n) + " minor");
                return report;
            }
        }
        log("spot-check", true, "no K_" + to_string(n) + " witness");

        auto big = k_ary_tree(m).graph();
        auto tree_minor = find_minor_model(g, big, budget);
        if (! tree_minor.found()) {
            report.exhausted = tree_minor.status == SearchStatus::Exhausted;
            log("tree-minor", false, report.exhausted ? "budget exhausted" : "no minor of the height-" + to_string(m) + " tree");
            return report;
        }
        log("tree-minor", true, "found");

        vector<VertexSet> parts;
        vector<Vertex> union_of_sets;
        for (auto & [p, xs] : tree_minor.value.branch_sets) {
            parts.push_back(xs);
            union_of_sets.insert(union_of_sets.end(), xs.begin(), xs.end());
        }
        auto contracted = contract_sets(induced_subgraph(g, make_vertex_set(union_of_sets)), parts);
        std::map<Vertex, const VertexSet *> set_of_rep;
        for (std::size_t i = 0; i < parts.size(); ++i)
            set_of_rep[contracted.part_vertex[i]] = &parts[i];
        log("contract", true, to_string(contracted.graph.order()) + " vertices");

        auto found = ramsey_detect(contracted.graph, n, budget, k);
        if (found.status != SearchStatus::Found) {
            report.exhausted = found.status == SearchStatus::Exhausted;
            log("ramsey", false, report.exhausted ? "budget exhausted" : "no K_n, K_{n,n} or tree in the contracted graph");
            return report;
        }

        MinorModel model{found.embedding.pattern, g, {}, true};
        for (auto & [p, h] : found.embedding.map)
            model.branch_sets[p] = *set_of_rep.at(h);
        if (auto problems = validate_model(model); ! problems.empty()) {
            log("validate", false, problems.front().detail);
            return report;
        }
        report.model = std::move(model);
        if (found.kind != "kary-tree") {
            report.witness_kind = found.kind;
            log("ramsey", false, "found an induced " + found.kind + " minor; input is not K_n-minor-free");
            return report;
        }
        log("ramsey", true, "induced tree of height " + to_string(k));
        report.success = true;
        return report;
    }

    auto decide_bounded_pathwidth(const vector<Graph> & graphs, Strictness strictness) -> Decision
    {
        const std::pair<string, Shape> categories[] = {
            {"complete", Shape::Complete},
            {"complete-bipartite", Shape::CompleteBipartite},
            {"tripod", Shape::Tripod},
            {"semi-tripod", Shape::SemiTripod}};

        Decision d;
        for (auto & [name, shape] : categories) {
            for (std::size_t i = 0; i < graphs.size(); ++i)
                if (recognize(graphs[i], shape, strictness).matches) {
                    d.witnesses.emplace(name, i);
                    break;
                }
            if (! d.witnesses.count(name))
                d.missing.push_back(name);
        }
        d.bounded = d.missing.empty();
        return d;
    }
}
