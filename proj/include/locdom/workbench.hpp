#pragma once

// Experiment harness: single runs with oracle comparison, run reports in
// JSON, and seeded suites producing CSV tables.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "locdom/algo_generic.hpp"
#include "locdom/algo_planar.hpp"
#include "locdom/domination.hpp"
#include "locdom/generators.hpp"
#include "locdom/graph.hpp"

namespace locdom {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Lower bound for graphs beyond the exact oracle.

/// Greedy set of vertices pairwise at distance >= 3, scanned in label order.
/// No vertex dominates two of them, so its size bounds MDS(G) from below.
inline VertexSet distance3_packing(const LabeledGraph& g) {
    std::vector<char> blocked(g.size(), 0);
    std::vector<Vertex> picked;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (blocked[v]) continue;
        picked.push_back(static_cast<Vertex>(v));
        auto dist = distances(g, static_cast<Vertex>(v), 2);
        for (std::size_t w = 0; w < g.size(); ++w)
            if (dist[w] != kUnreachable) blocked[w] = 1;
    }
    return VertexSet(std::move(picked));
}

// ---------------------------------------------------------------------------
// Single runs.

struct RunConfig {
    std::string algorithm = "A";  ///< "A" or "B"
    ControlFunction control;
    int k = kPlanarUniformity;
    double alpha = kPlanarRatio;
    int dimension = 2;
    /// Graphs up to this size are compared against the exact optimum.
    std::size_t oracle_max_n = 30;
    DominationOptions oracle;
};

inline BConfig make_b_config(const RunConfig& cfg) {
    BConfig b;
    b.sub = planar_uniform_algorithm({cfg.oracle, {}});
    b.sub.k = cfg.k;
    b.sub.alpha = cfg.alpha;
    b.control = cfg.control;
    b.dimension = cfg.dimension;
    b.oracle = cfg.oracle;
    return b;
}

struct RunReport {
    std::string graph;
    std::size_t n = 0;
    std::size_t m = 0;
    std::string algorithm;
    json config;
    VertexSet output;
    bool dominating = false;
    std::optional<std::size_t> optimum;
    std::string optimum_kind = "none";  ///< "exact", "lower_bound" or "none"
    std::optional<double> ratio;
    std::string ratio_kind = "none";  ///< "exact", "upper_bound" or "none"
    double claimed_ratio = 0;
    std::optional<ErrorSetReport> errors;
    std::optional<VertexSet> repair;
    RoundLedger ledger;
    double wall_clock_ms = 0;
};

inline json config_json(const RunConfig& cfg) {
    json j{{"algorithm", cfg.algorithm}, {"oracle_max_n", cfg.oracle_max_n}};
    if (cfg.algorithm == "B") {
        BConfig b = make_b_config(cfg);
        j["control_fn"] = cfg.control.to_string();
        j["k"] = cfg.k;
        j["alpha"] = cfg.alpha;
        j["dim"] = cfg.dimension;
        j["rounds_of_A"] = b.sub.rounds;
        j["T"] = b.error_radius();
        j["class"] = b.predicate.name;
    }
    return j;
}

inline RunReport run_algorithm(const LabeledGraph& g, std::string descriptor, const RunConfig& cfg) {
    if (cfg.algorithm != "A" && cfg.algorithm != "B")
        throw InputError("unknown algorithm '" + cfg.algorithm + "' (expected A or B)");
    RunReport r;
    r.graph = std::move(descriptor);
    r.n = g.size();
    r.m = g.edge_count();
    r.algorithm = cfg.algorithm;
    r.config = config_json(cfg);

    const auto start = std::chrono::steady_clock::now();
    if (cfg.algorithm == "A") {
        auto run = algorithm_a(g, {cfg.oracle, {}});
        r.output = std::move(run.output);
        r.ledger = run.ledger;
        r.claimed_ratio = kPlanarRatio;
    } else {
        BConfig b = make_b_config(cfg);
        auto run = algorithm_b(g, b);
        r.output = std::move(run.output);
        r.ledger = run.ledger;
        r.errors = std::move(run.errors);
        r.repair = std::move(run.repair);
        r.claimed_ratio = b.claimed_ratio();
    }
    r.wall_clock_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.dominating = verify_domination(g, r.output, VertexSet::range(g.size()));

    if (g.size() <= cfg.oracle_max_n) {
        r.optimum = mds_size(g, VertexSet::range(g.size()), cfg.oracle);
        r.optimum_kind = "exact";
    } else {
        r.optimum = distance3_packing(g).size();
        r.optimum_kind = "lower_bound";
    }
    if (*r.optimum > 0) {
        r.ratio = static_cast<double>(r.output.size()) / static_cast<double>(*r.optimum);
        r.ratio_kind = r.optimum_kind == "exact" ? "exact" : "upper_bound";
    }
    return r;
}

/// Re-checks a (possibly deserialized) report against its graph.
inline bool verify_report(const LabeledGraph& g, const RunReport& r) {
    if (r.n != g.size() || r.m != g.edge_count()) return false;
    if (!verify_domination(g, r.output, VertexSet::range(g.size()))) return false;
    if (r.ratio && r.optimum && *r.optimum > 0 &&
        std::abs(*r.ratio - static_cast<double>(r.output.size()) / static_cast<double>(*r.optimum)) > 1e-12)
        return false;
    if (r.repair && !r.repair->is_subset_of(r.output)) return false;
    if (r.errors && r.ledger.total() != r.errors->radius + r.errors->delta + 2) return false;
    return true;
}

// ---------------------------------------------------------------------------
// JSON.

inline void to_json(json& j, const VertexSet& s) { j = s.members(); }
inline void from_json(const json& j, VertexSet& s) { s = VertexSet(j.get<std::vector<Vertex>>()); }

inline void to_json(json& j, const RoundLedger& l) {
    j = json{{"view_collection", l.view_collection},
             {"algorithm_run", l.algorithm_run},
             {"repair", l.repair},
             {"total", l.total()}};
}
inline void from_json(const json& j, RoundLedger& l) {
    l.view_collection = j.at("view_collection").get<int>();
    l.algorithm_run = j.at("algorithm_run").get<int>();
    l.repair = j.at("repair").get<int>();
    if (j.contains("total") && j.at("total").get<int>() != l.total())
        throw InputError("round ledger total does not match its phases");
}

inline void to_json(json& j, const ErrorSetReport& e) {
    json comps = json::array();
    for (const auto& c : e.components) comps.push_back({{"vertices", c.vertices}, {"weak_diameter", c.weak_diameter}});
    j = json{{"T", e.radius}, {"X", e.errors}, {"delta", e.delta}, {"components", comps}};
}
inline void from_json(const json& j, ErrorSetReport& e) {
    e.radius = j.at("T").get<int>();
    e.errors = j.at("X").get<VertexSet>();
    e.delta = j.at("delta").get<int>();
    e.components.clear();
    for (const auto& c : j.at("components"))
        e.components.push_back({c.at("vertices").get<VertexSet>(), c.at("weak_diameter").get<int>()});
}

inline void to_json(json& j, const RunReport& r) {
    j = json{{"graph", {{"descriptor", r.graph}, {"n", r.n}, {"m", r.m}}},
             {"algorithm", {{"id", r.algorithm}, {"config", r.config}}},
             {"output", r.output},
             {"output_size", r.output.size()},
             {"dominating", r.dominating},
             {"optimum", r.optimum ? json{{"value", *r.optimum}, {"kind", r.optimum_kind}} : json(nullptr)},
             {"ratio", r.ratio ? json{{"value", *r.ratio}, {"kind", r.ratio_kind}} : json(nullptr)},
             {"claimed_ratio", r.claimed_ratio},
             {"errors", r.errors ? json(*r.errors) : json(nullptr)},
             {"repair", r.repair ? json(*r.repair) : json(nullptr)},
             {"ledger", r.ledger},
             {"wall_clock_ms", r.wall_clock_ms}};
}

inline void from_json(const json& j, RunReport& r) {
    const auto& gj = j.at("graph");
    r.graph = gj.at("descriptor").get<std::string>();
    r.n = gj.at("n").get<std::size_t>();
    r.m = gj.at("m").get<std::size_t>();
    r.algorithm = j.at("algorithm").at("id").get<std::string>();
    r.config = j.at("algorithm").at("config");
    r.output = j.at("output").get<VertexSet>();
    if (j.at("output_size").get<std::size_t>() != r.output.size())
        throw InputError("report output_size disagrees with its output set");
    r.dominating = j.at("dominating").get<bool>();
    r.optimum.reset();
    r.optimum_kind = "none";
    if (!j.at("optimum").is_null()) {
        r.optimum = j.at("optimum").at("value").get<std::size_t>();
        r.optimum_kind = j.at("optimum").at("kind").get<std::string>();
    }
    r.ratio.reset();
    r.ratio_kind = "none";
    if (!j.at("ratio").is_null()) {
        r.ratio = j.at("ratio").at("value").get<double>();
        r.ratio_kind = j.at("ratio").at("kind").get<std::string>();
    }
    r.claimed_ratio = j.at("claimed_ratio").get<double>();
    r.errors.reset();
    if (!j.at("errors").is_null()) r.errors = j.at("errors").get<ErrorSetReport>();
    r.repair.reset();
    if (!j.at("repair").is_null()) r.repair = j.at("repair").get<VertexSet>();
    r.ledger = j.at("ledger").get<RoundLedger>();
    r.wall_clock_ms = j.value("wall_clock_ms", 0.0);
}

inline void to_json(json& j, const GeneratorSpec& s) {
    j = json{{"family", std::string(family_name(s.family))}, {"seed", s.seed}};
    switch (s.family) {
        case Family::path:
        case Family::cycle: j["n"] = s.n; break;
        case Family::grid:
        case Family::toroidal_grid:
            j["rows"] = s.rows;
            j["cols"] = s.cols;
            break;
        case Family::random_planar_triangulation:
            j["n"] = s.n;
            j["delete_prob"] = s.delete_prob;
            break;
        case Family::projective_circulant: j["g"] = s.genus; break;
        case Family::depth2_tree: j["alpha"] = s.alpha; break;
        case Family::gadget_graft:
            j["host"] = s.host;
            if (s.host == "grid") {
                j["rows"] = s.rows;
                j["cols"] = s.cols;
            } else {
                j["n"] = s.n;
            }
            j["gadgets"] = s.gadgets;
            j["gadget"] = s.gadget;
            j["g"] = s.genus;
            j["spacing"] = s.spacing;
            j["bridge"] = s.bridge;
            break;
    }
    if (s.shuffle) j["shuffle"] = true;
}

inline void from_json(const json& j, GeneratorSpec& s) {
    s = GeneratorSpec{};
    s.family = parse_family(j.at("family").get<std::string>());
    s.n = j.value("n", 0);
    s.rows = j.value("rows", 0);
    s.cols = j.value("cols", 0);
    s.alpha = j.value("alpha", 0);
    s.genus = j.value("g", 1);
    s.delete_prob = j.value("delete_prob", 0.0);
    s.host = j.value("host", std::string("path"));
    s.gadgets = j.value("gadgets", 0);
    s.gadget = j.value("gadget", std::string("K5"));
    s.spacing = j.value("spacing", 0);
    s.bridge = j.value("bridge", 1);
    s.shuffle = j.value("shuffle", false);
    s.seed = j.value("seed", std::uint64_t{0});
}

// ---------------------------------------------------------------------------
// Suites.

struct SuiteGraph {
    GeneratorSpec spec;
    int replicas = 1;  ///< instances with seeds spec.seed, spec.seed+1, ...
};

/// Random subsets S checked against |A(G) ∩ S| <= alpha * MDS(G, N^k[S]) on
/// every A row whose graph the exact oracle can handle.
struct UniformityFuzz {
    int samples_per_graph = 0;
    int k = kPlanarUniformity;
    double alpha = kPlanarRatio;
    std::uint64_t seed = 1;
};

struct Suite {
    std::string name = "suite";
    std::vector<SuiteGraph> graphs;
    std::vector<std::string> algorithms{"A"};
    RunConfig config;
    UniformityFuzz fuzz;
    int jobs = 1;
};

inline void from_json(const json& j, Suite& s) {
    s = Suite{};
    s.name = j.value("name", std::string("suite"));
    for (const auto& gj : j.at("graphs")) {
        SuiteGraph sg;
        sg.spec = gj.get<GeneratorSpec>();
        sg.replicas = gj.value("replicas", 1);
        if (sg.replicas < 1) throw InputError("replicas must be >= 1");
        s.graphs.push_back(sg);
    }
    if (j.contains("algorithms")) s.algorithms = j.at("algorithms").get<std::vector<std::string>>();
    s.config.oracle_max_n = j.value("oracle_max_n", s.config.oracle_max_n);
    if (j.contains("b_config")) {
        const auto& b = j.at("b_config");
        s.config.control = ControlFunction::parse(b.value("control_fn", std::string("linear:1")));
        s.config.k = b.value("k", s.config.k);
        s.config.alpha = b.value("alpha", s.config.alpha);
        s.config.dimension = b.value("dim", s.config.dimension);
    }
    if (j.contains("uniformity")) {
        const auto& u = j.at("uniformity");
        s.fuzz.samples_per_graph = u.value("samples_per_graph", 0);
        s.fuzz.k = u.value("k", s.fuzz.k);
        s.fuzz.alpha = u.value("alpha", s.fuzz.alpha);
        s.fuzz.seed = u.value("seed", s.fuzz.seed);
    }
    s.jobs = j.value("jobs", 1);
    for (const auto& a : s.algorithms)
        if (a != "A" && a != "B") throw InputError("unknown algorithm '" + a + "' in suite");
}

struct ExperimentRow {
    std::size_t cell = 0;
    std::string graph;
    std::string family;
    std::optional<int> genus_bound;
    std::string algorithm;
    std::string status = "ok";  ///< "ok" or the error category
    std::string message;
    std::optional<RunReport> report;
    int rounds_expected = 0;
    int fuzz_samples = 0;
    int fuzz_violations = 0;
};

struct AlgorithmAggregate {
    std::string algorithm;
    std::size_t rows = 0;
    std::size_t failures = 0;
    std::size_t non_dominating = 0;
    std::size_t ledger_mismatches = 0;
    std::size_t exact_rows = 0;
    double max_ratio = 0;
    double mean_ratio = 0;
    std::size_t bounded_rows = 0;
    double max_ratio_upper_bound = 0;
    int fuzz_samples = 0;
    int fuzz_violations = 0;
};

struct ExperimentResult {
    std::string suite;
    std::vector<ExperimentRow> rows;
    std::vector<AlgorithmAggregate> aggregates;
};

namespace detail {

inline int uniformity_violations(const LabeledGraph& g, const VertexSet& output, const UniformityFuzz& fuzz,
                                 std::uint64_t seed, const DominationOptions& opts, int& samples) {
    std::mt19937_64 rng(seed);
    int violations = 0;
    for (int i = 0; i < fuzz.samples_per_graph; ++i) {
        const double p = uniform_unit(rng);
        std::vector<Vertex> s;
        for (std::size_t v = 0; v < g.size(); ++v)
            if (uniform_unit(rng) < p) s.push_back(static_cast<Vertex>(v));
        ++samples;
        if (!check_uniformity(g, output, VertexSet(std::move(s)), fuzz.k, fuzz.alpha, opts).holds) ++violations;
    }
    return violations;
}

inline ExperimentRow run_cell(const Suite& suite, std::size_t cell, const GeneratorSpec& spec,
                              const std::string& algorithm) {
    ExperimentRow row;
    row.cell = cell;
    row.graph = describe(spec);
    row.family = std::string(family_name(spec.family));
    row.genus_bound = genus_upper_bound(spec);
    row.algorithm = algorithm;
    try {
        LabeledGraph g = generate(spec);
        RunConfig cfg = suite.config;
        cfg.algorithm = algorithm;
        RunReport r = run_algorithm(g, row.graph, cfg);
        row.rounds_expected = algorithm == "A" ? kPlanarRounds : r.errors->radius + r.errors->delta + 2;
        if (algorithm == "A" && suite.fuzz.samples_per_graph > 0 && g.size() <= cfg.oracle_max_n)
            row.fuzz_violations = uniformity_violations(g, r.output, suite.fuzz, suite.fuzz.seed + cell, cfg.oracle,
                                                        row.fuzz_samples);
        row.report = std::move(r);
    } catch (const Error& e) {
        row.status = std::string(to_string(e.category()));
        row.message = e.what();
    } catch (const std::exception& e) {
        row.status = "internal";
        row.message = e.what();
    }
    return row;
}

}  // namespace detail

/// Runs every (graph instance, algorithm) cell. Errors are recorded in their
/// row; row order follows the suite regardless of `jobs`.
inline ExperimentResult experiment(const Suite& suite) {
    struct Cell {
        GeneratorSpec spec;
        std::string algorithm;
    };
    std::vector<Cell> cells;
    for (const auto& sg : suite.graphs)
        for (int rep = 0; rep < sg.replicas; ++rep) {
            GeneratorSpec spec = sg.spec;
            spec.seed = sg.spec.seed + static_cast<std::uint64_t>(rep);
            for (const auto& alg : suite.algorithms) cells.push_back({spec, alg});
        }

    ExperimentResult result;
    result.suite = suite.name;
    result.rows.resize(cells.size());
    const std::size_t jobs = static_cast<std::size_t>(std::max(1, suite.jobs));
    for (std::size_t begin = 0; begin < cells.size(); begin += jobs) {
        std::vector<std::future<ExperimentRow>> batch;
        for (std::size_t i = begin; i < std::min(cells.size(), begin + jobs); ++i)
            batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, [&, i] {
                return detail::run_cell(suite, i, cells[i].spec, cells[i].algorithm);
            }));
        for (std::size_t i = 0; i < batch.size(); ++i) result.rows[begin + i] = batch[i].get();
    }

    for (const auto& alg : suite.algorithms) {
        AlgorithmAggregate a;
        a.algorithm = alg;
        double sum = 0;
        for (const auto& row : result.rows) {
            if (row.algorithm != alg) continue;
            ++a.rows;
            a.fuzz_samples += row.fuzz_samples;
            a.fuzz_violations += row.fuzz_violations;
            if (!row.report) {
                ++a.failures;
                continue;
            }
            const RunReport& r = *row.report;
            if (!r.dominating) ++a.non_dominating;
            if (r.ledger.total() != row.rounds_expected) ++a.ledger_mismatches;
            if (!r.ratio) continue;
            if (r.ratio_kind == "exact") {
                ++a.exact_rows;
                sum += *r.ratio;
                a.max_ratio = std::max(a.max_ratio, *r.ratio);
            } else {
                ++a.bounded_rows;
                a.max_ratio_upper_bound = std::max(a.max_ratio_upper_bound, *r.ratio);
            }
        }
        a.mean_ratio = a.exact_rows ? sum / static_cast<double>(a.exact_rows) : 0.0;
        result.aggregates.push_back(a);
    }
    return result;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string fixed6(double x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << x;
    return os.str();
}

}  // namespace detail

inline constexpr std::string_view kCsvHeader =
    "suite,cell,graph,family,genus_bound,n,m,algorithm,status,output_size,dominating,optimum,optimum_kind,ratio,"
    "ratio_kind,T,errors,delta,repair_size,rounds,rounds_expected,fuzz_samples,fuzz_violations,message";

/// One line per row. Wall-clock time is left out so equal seeds give equal bytes.
inline void write_csv(std::ostream& out, const ExperimentResult& result) {
    using detail::csv_field;
    out << kCsvHeader << '\n';
    for (const auto& row : result.rows) {
        std::vector<std::string> f;
        f.push_back(csv_field(result.suite));
        f.push_back(std::to_string(row.cell));
        f.push_back(csv_field(row.graph));
        f.push_back(row.family);
        f.push_back(row.genus_bound ? std::to_string(*row.genus_bound) : "");
        if (row.report) {
            const RunReport& r = *row.report;
            f.push_back(std::to_string(r.n));
            f.push_back(std::to_string(r.m));
            f.push_back(row.algorithm);
            f.push_back(row.status);
            f.push_back(std::to_string(r.output.size()));
            f.push_back(r.dominating ? "1" : "0");
            f.push_back(r.optimum ? std::to_string(*r.optimum) : "");
            f.push_back(r.optimum_kind);
            f.push_back(r.ratio ? detail::fixed6(*r.ratio) : "");
            f.push_back(r.ratio_kind);
            f.push_back(r.errors ? std::to_string(r.errors->radius) : "");
            f.push_back(r.errors ? std::to_string(r.errors->errors.size()) : "");
            f.push_back(r.errors ? std::to_string(r.errors->delta) : "");
            f.push_back(r.repair ? std::to_string(r.repair->size()) : "");
            f.push_back(std::to_string(r.ledger.total()));
            f.push_back(std::to_string(row.rounds_expected));
        } else {
            f.insert(f.end(), {"", "", row.algorithm, row.status, "", "", "", "", "", "", "", "", "", "", "", ""});
        }
        f.push_back(std::to_string(row.fuzz_samples));
        f.push_back(std::to_string(row.fuzz_violations));
        f.push_back(csv_field(row.message));
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
        out << '\n';
    }
}

inline void to_json(json& j, const AlgorithmAggregate& a) {
    j = json{{"algorithm", a.algorithm},
             {"rows", a.rows},
             {"failures", a.failures},
             {"non_dominating", a.non_dominating},
             {"ledger_mismatches", a.ledger_mismatches},
             {"exact_rows", a.exact_rows},
             {"max_ratio", a.max_ratio},
             {"mean_ratio", a.mean_ratio},
             {"bounded_rows", a.bounded_rows},
             {"max_ratio_upper_bound", a.max_ratio_upper_bound},
             {"fuzz_samples", a.fuzz_samples},
             {"fuzz_violations", a.fuzz_violations}};
}

inline void to_json(json& j, const ExperimentResult& result) {
    json rows = json::array();
    for (const auto& row : result.rows) {
        json r{{"cell", row.cell},       {"graph", row.graph},
               {"family", row.family},   {"algorithm", row.algorithm},
               {"status", row.status},   {"message", row.message},
               {"rounds_expected", row.rounds_expected},
               {"fuzz_samples", row.fuzz_samples}, {"fuzz_violations", row.fuzz_violations}};
        r["genus_bound"] = row.genus_bound ? json(*row.genus_bound) : json(nullptr);
        r["report"] = row.report ? json(*row.report) : json(nullptr);
        rows.push_back(std::move(r));
    }
    j = json{{"suite", result.suite}, {"rows", rows}, {"aggregates", result.aggregates}};
}

}  // namespace locdom
