// Command-line front end: generate graphs, run the algorithms, query the
// exact oracle, verify sets and run measurement suites.
//
// Exit codes: 0 success, 1 a requested check failed (verify), 2 input error,
// 3 resource limit, 4 internal error, 5 I/O error. Errors are reported on
// stderr as a one-line JSON object {"error": {"category": ..., "message": ...}}.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "locdom/algo_generic.hpp"
#include "locdom/algo_planar.hpp"
#include "locdom/domination.hpp"
#include "locdom/generators.hpp"
#include "locdom/graph.hpp"
#include "locdom/planarity.hpp"
#include "locdom/workbench.hpp"

namespace {

using namespace locdom;

int exit_code(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::input: return 2;
        case ErrorCategory::resource: return 3;
        case ErrorCategory::internal: return 4;
        case ErrorCategory::io: return 5;
    }
    return 4;
}

int report_error(ErrorCategory c, const std::string& message) {
    std::cerr << json{{"error", {{"category", std::string(to_string(c))}, {"message", message}}}}.dump() << '\n';
    return exit_code(c);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LabeledGraph load_graph(const std::string& path) {
    std::istringstream in(slurp(path));
    return read_edge_list(in);
}

/// Whitespace/comma separated labels, a JSON array, or a run report (its output set).
VertexSet load_set(const std::string& path) {
    const std::string text = slurp(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw InputError("bad JSON in '" + path + "': " + e.what());
        }
        if (j.is_array()) return j.get<VertexSet>();
        return j.at("output").get<VertexSet>();
    }
    std::vector<Vertex> labels;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size() || v < 0 || v > INT32_MAX) throw std::invalid_argument(tok);
                labels.push_back(static_cast<Vertex>(v));
            } catch (const std::exception&) {
                throw InputError("set file: bad label '" + tok + "'");
            }
        }
    }
    return VertexSet(std::move(labels));
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constant-round LOCAL dominating set workbench"};
    app.require_subcommand(1);

    // gen
    GeneratorSpec spec;
    std::string family = "path", gen_out = "-";
    auto* gen = app.add_subcommand("gen", "Generate a graph in edge-list format");
    gen->add_option("--family", family, "path|cycle|grid|toroidalGrid|randomPlanarTriangulation|"
                                        "projectiveCirculant|depth2Tree|gadgetGraft")
        ->required();
    gen->add_option("--seed", spec.seed, "RNG seed");
    gen->add_option("--n", spec.n, "Vertex count (path, cycle, triangulation, path/cycle host)");
    gen->add_option("--rows", spec.rows, "Grid rows");
    gen->add_option("--cols", spec.cols, "Grid columns");
    gen->add_option("--alpha", spec.alpha, "depth2Tree parameter");
    gen->add_option("--g", spec.genus, "projectiveCirculant parameter (n = 2g+6)");
    gen->add_option("--delete-prob", spec.delete_prob, "Edge deletion probability for triangulations");
    gen->add_option("--host", spec.host, "gadgetGraft host: path|cycle|grid");
    gen->add_option("--gadgets", spec.gadgets, "Number of gadgets");
    gen->add_option("--gadget", spec.gadget, "K5|circulant");
    gen->add_option("--spacing", spec.spacing, "Host distance between gadget anchors");
    gen->add_option("--bridge", spec.bridge, "Length of the path tying a gadget to its anchor");
    gen->add_flag("--shuffle", spec.shuffle, "Randomly relabel vertices");
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

    // run
    RunConfig run_cfg;
    std::string run_graph, run_out = "-", control = "linear:1";
    auto* run = app.add_subcommand("run", "Run algorithm A or B and emit a JSON report");
    run->add_option("--alg", run_cfg.algorithm, "A|B")->required()->check(CLI::IsMember({"A", "B"}));
    run->add_option("--graph", run_graph, "Edge-list file")->required();
    run->add_option("--control-fn", control, "Control function for B, linear:c");
    run->add_option("--k", run_cfg.k, "Declared uniformity radius of A (for B)");
    run->add_option("--alpha", run_cfg.alpha, "Declared ratio of A (for B)");
    run->add_option("--dim", run_cfg.dimension, "Asymptotic dimension d (reporting only)");
    run->add_option("--oracle-max-n", run_cfg.oracle_max_n, "Largest n compared against the exact optimum");
    run->add_option("-o,--output", run_out, "Report file (default stdout)");

    // oracle
    std::string oracle_graph, oracle_target;
    bool oracle_best = false, oracle_all = false;
    auto* oracle = app.add_subcommand("oracle", "Exact minimum domination of a target set");
    oracle->add_option("--graph", oracle_graph, "Edge-list file")->required();
    oracle->add_option("--target", oracle_target, "Target set file (default: all vertices)");
    oracle->add_flag("--best", oracle_best, "Also compute the best minimum dominating set");
    oracle->add_flag("--all", oracle_all, "Also enumerate every minimum dominating set");

    // verify
    std::string verify_graph, verify_set;
    bool verify_planar = false;
    auto* verify = app.add_subcommand("verify", "Check that a set dominates the graph");
    verify->add_option("--graph", verify_graph, "Edge-list file")->required();
    verify->add_option("--set", verify_set, "Set file, JSON array or run report")->required();
    verify->add_flag("--planar", verify_planar, "Also report planarity of the graph");

    // measure
    std::string suite_path, measure_out = "-", measure_json;
    int jobs = 0;
    auto* measure = app.add_subcommand("measure", "Run a suite and write a CSV table");
    measure->add_option("--suite", suite_path, "Suite JSON file")->required();
    measure->add_option("-o,--output", measure_out, "CSV output (default stdout)");
    measure->add_option("--json", measure_json, "Also write full reports and aggregates as JSON");
    measure->add_option("--jobs", jobs, "Concurrent cells (overrides the suite)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error(ErrorCategory::input, e.what());
    }

    try {
        if (*gen) {
            spec.family = parse_family(family);
            std::ostringstream os;
            os << "# " << describe(spec) << '\n';
            write_edge_list(os, generate(spec));
            write_text(gen_out, os.str());
        } else if (*run) {
            run_cfg.control = ControlFunction::parse(control);
            LabeledGraph g = load_graph(run_graph);
            RunReport report = run_algorithm(g, run_graph, run_cfg);
            write_text(run_out, json(report).dump(2) + "\n");
        } else if (*oracle) {
            LabeledGraph g = load_graph(oracle_graph);
            VertexSet target = oracle_target.empty() ? VertexSet::range(g.size()) : load_set(oracle_target);
            require_members(g, target);
            VertexSet witness = minimum_dominating_set(g, target);
            json out{{"n", g.size()}, {"target_size", target.size()}, {"mds_size", witness.size()}, {"witness", witness}};
            if (oracle_best) out["best"] = best_minimum_dominating_set(g, target);
            if (oracle_all) {
                auto all = all_minimum_dominating_sets(g, target);
                out["count"] = all.size();
                out["all"] = all;
            }
            std::cout << out.dump(2) << '\n';
        } else if (*verify) {
            LabeledGraph g = load_graph(verify_graph);
            VertexSet set = load_set(verify_set);
            require_members(g, set);
            const bool dominating = verify_domination(g, set, VertexSet::range(g.size()));
            json out{{"n", g.size()}, {"set_size", set.size()}, {"dominating", dominating}};
            if (verify_planar) out["planar"] = is_planar(g);
            std::cout << out.dump() << '\n';
            return dominating ? 0 : 1;
        } else if (*measure) {
            Suite suite;
            try {
                suite = json::parse(slurp(suite_path)).get<Suite>();
            } catch (const json::exception& e) {
                throw InputError("bad suite file '" + suite_path + "': " + e.what());
            }
            if (jobs > 0) suite.jobs = jobs;
            ExperimentResult result = experiment(suite);
            std::ostringstream csv;
            write_csv(csv, result);
            write_text(measure_out, csv.str());
            if (!measure_json.empty()) write_text(measure_json, json(result).dump(2) + "\n");
            std::cerr << json(result.aggregates).dump() << '\n';
        }
    } catch (const Error& e) {
        return report_error(e.category(), e.what());
    } catch (const json::exception& e) {
        return report_error(ErrorCategory::input, e.what());
    } catch (const std::exception& e) {
        return report_error(ErrorCategory::internal, e.what());
    }
    return 0;
}
