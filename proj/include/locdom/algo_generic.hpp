#pragma once

// Generic error-tolerant composition. Given a k-uniform approximation A for a
// hereditary class C, every vertex checks whether its radius-T ball lies in C
// (T-errors X), keeps A's choice only outside X, and the vertices left
// undominated are covered by an exact minimum set drawn from N^2[X], solved
// independently on each component of G[N^2[X]].
//
// Also hosts the weak-diameter measurement of those components and the
// validator for bounded colorings of graph powers.

#include <algorithm>
#include <charconv>
#include <functional>
#include <string>
#include <vector>

#include "locdom/algo_planar.hpp"
#include "locdom/domination.hpp"
#include "locdom/graph.hpp"
#include "locdom/local_runtime.hpp"
#include "locdom/planarity.hpp"

namespace locdom {

/// f in T = f(2k+2) + max(k+1, r). Only the linear family x -> c*x is
/// supported; c is any non-negative integer.
class ControlFunction {
public:
    ControlFunction() = default;
    explicit ControlFunction(long long slope) : slope_(slope) {
        if (slope < 0) throw InputError("control function slope must be non-negative");
    }

    /// Parses `linear:c` or `identity` (= linear:1).
    static ControlFunction parse(std::string_view text) {
        if (text == "identity") return ControlFunction(1);
        constexpr std::string_view prefix = "linear:";
        if (text.substr(0, prefix.size()) != prefix)
            throw InputError("unknown control function '" + std::string(text) + "' (expected linear:c)");
        auto digits = text.substr(prefix.size());
        long long c = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), c);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
            throw InputError("bad control function slope in '" + std::string(text) + "'");
        return ControlFunction(c);
    }

    long long operator()(long long x) const { return slope_ * x; }
    long long slope() const noexcept { return slope_; }
    std::string to_string() const { return "linear:" + std::to_string(slope_); }

private:
    long long slope_ = 1;
};

/// A LOCAL algorithm treated as a black box together with its declared
/// uniformity radius k, ratio alpha and round complexity r.
struct UniformAlgorithm {
    std::string name;
    int k = 0;
    double alpha = 1;
    int rounds = 0;
    std::function<VertexSet(const LabeledGraph&)> run;
};

inline UniformAlgorithm planar_uniform_algorithm(PlanarOptions opts = {}) {
    return {"A", kPlanarUniformity, kPlanarRatio, kPlanarRounds,
            [opts = std::move(opts)](const LabeledGraph& g) { return algorithm_a(g, opts).output; }};
}

struct BConfig {
    UniformAlgorithm sub = planar_uniform_algorithm();
    ClassPredicate predicate = planar_class();
    ControlFunction control;
    int dimension = 2;  ///< d; only enters the reported ratio
    DominationOptions oracle;

    void validate() const {
        if (sub.k < 0 || sub.rounds < 0) throw InputError("sub-algorithm needs k >= 0 and r >= 0");
        if (dimension < 0) throw InputError("dimension must be non-negative");
        if (!sub.run || !predicate.test) throw InputError("incomplete configuration");
    }

    /// T = f(2k+2) + max(k+1, r)
    int error_radius() const {
        validate();
        long long t = control(2LL * sub.k + 2) + std::max(sub.k + 1, sub.rounds);
        if (t > 1'000'000) throw InputError("error radius T=" + std::to_string(t) + " is unreasonably large");
        return static_cast<int>(t);
    }

    /// alpha(d+1)+1
    double claimed_ratio() const { return sub.alpha * (dimension + 1) + 1; }
};

struct ErrorComponent {
    VertexSet vertices;  ///< a component of G[N^2[X]]
    int weak_diameter = 0;
};

struct ErrorSetReport {
    int radius = 0;  ///< T
    VertexSet errors;
    int delta = 0;
    std::vector<ErrorComponent> components;
};

/// Radius-T rule: true iff the vertex's ball falls outside the class.
inline LocalAlgorithm<bool> error_detection(const ClassPredicate& predicate, int radius) {
    return {"error-detection:" + predicate.name, radius,
            [predicate](const BallView& view) { return !predicate(view.ball.graph); }};
}

/// Components of G[N^2[X]] with their weak diameters in G.
inline std::vector<ErrorComponent> error_components(const LabeledGraph& g, const VertexSet& errors) {
    std::vector<ErrorComponent> out;
    if (errors.empty()) return out;
    for (auto& comp : components(g, neighborhood(g, errors, 2))) {
        int wd = weak_diameter(g, comp);
        out.push_back({std::move(comp), wd});
    }
    return out;
}

/// delta: largest weak diameter of a component of G[N^2[X]]; 0 if X is empty.
inline int measure_delta(const LabeledGraph& g, const VertexSet& errors) {
    int delta = 0;
    for (const auto& c : error_components(g, errors)) delta = std::max(delta, c.weak_diameter);
    return delta;
}

inline ErrorSetReport error_set(const LabeledGraph& g, const ClassPredicate& predicate, int radius) {
    if (radius < 0) throw InputError("error radius must be non-negative");
    auto flags = run_by_views(g, error_detection(predicate, radius));
    std::vector<Vertex> x;
    for (std::size_t v = 0; v < flags.size(); ++v)
        if (flags[v]) x.push_back(static_cast<Vertex>(v));
    ErrorSetReport report;
    report.radius = radius;
    report.errors = VertexSet(std::move(x));
    report.components = error_components(g, report.errors);
    for (const auto& c : report.components) report.delta = std::max(report.delta, c.weak_diameter);
    return report;
}

inline ErrorSetReport error_set(const LabeledGraph& g, const BConfig& cfg) {
    return error_set(g, cfg.predicate, cfg.error_radius());
}

/// Exact minimum S' ⊆ N^2[X] dominating V \ N[dominated_by], solved per
/// component of G[N^2[X]] and unioned. Requires V \ N[dominated_by] ⊆ N[X];
/// a violation is a bug in the caller and raises InternalError.
inline VertexSet repair_step(const LabeledGraph& g, const VertexSet& dominated_by, const VertexSet& errors,
                             const DominationOptions& opts = {}) {
    require_members(g, dominated_by);
    require_members(g, errors);
    const VertexSet covered = neighborhood(g, dominated_by, 1);
    const VertexSet undominated = set_difference(VertexSet::range(g.size()), covered);
    if (undominated.empty()) return {};
    if (!undominated.is_subset_of(neighborhood(g, errors, 1)))
        throw InternalError("undominated vertices outside N[X] before repair");

    std::vector<int> component_of(g.size(), -1);
    const auto comps = components(g, neighborhood(g, errors, 2));
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (Vertex v : comps[i]) component_of[v] = static_cast<int>(i);

    std::vector<std::vector<Vertex>> targets(comps.size());
    for (Vertex t : undominated) {
        const int ci = component_of[t];
        for (Vertex w : g.neighbors(t))
            if (component_of[w] != ci) throw InternalError("closed neighborhood of an undominated vertex leaves its component");
        targets[static_cast<std::size_t>(ci)].push_back(t);
    }

    VertexSet repair;
    for (auto& t : targets) {
        if (t.empty()) continue;
        repair = set_union(repair, minimum_dominating_set(g, VertexSet(std::move(t)), opts));
    }
    return repair;
}

struct GenericRun {
    VertexSet output;      ///< S ∪ S'
    VertexSet sub_output;  ///< A(G)
    VertexSet kept;        ///< S = A(G) \ X
    VertexSet repair;      ///< S'
    ErrorSetReport errors;
    RoundLedger ledger;
};

/// Error detection and the filtered run of A share T+1 rounds; the repair
/// needs delta+1 more, for T+delta+2 in total.
inline GenericRun algorithm_b(const LabeledGraph& g, const BConfig& cfg) {
    GenericRun run;
    run.errors = error_set(g, cfg);
    run.sub_output = cfg.sub.run(g);
    run.kept = set_difference(run.sub_output, run.errors.errors);
    run.repair = repair_step(g, run.kept, run.errors.errors, cfg.oracle);
    run.output = set_union(run.kept, run.repair);
    run.ledger.view_collection = run.errors.radius + 1;
    run.ledger.algorithm_run = 0;
    run.ledger.repair = run.errors.delta + 1;
    return run;
}

/// A coloring of `colored` (typically a power of `host`) whose monochromatic
/// components should have weak diameter at most `bound` in `host`.
struct BoundedColoring {
    std::vector<int> colors;  ///< indexed by label
    int num_colors = 0;
    LabeledGraph host;
    LabeledGraph colored;
    int bound = 0;
};

struct ColoringCheck {
    bool ok = true;
    int color = -1;
    VertexSet worst_component;  ///< a component of largest weak diameter
    int worst_diameter = 0;
};

inline ColoringCheck check_bounded_coloring(const BoundedColoring& c) {
    const std::size_t n = c.colored.size();
    if (c.host.size() != n) throw InputError("host and colored graph differ in vertex count");
    if (c.colors.size() != n) throw InputError("coloring is not total on V");
    for (std::size_t v = 0; v < n; ++v)
        if (c.colors[v] < 0 || c.colors[v] >= c.num_colors)
            throw InputError("color " + std::to_string(c.colors[v]) + " of vertex " + std::to_string(v) +
                             " outside 0.." + std::to_string(c.num_colors - 1));

    ColoringCheck check;
    for (int color = 0; color < c.num_colors; ++color) {
        std::vector<Vertex> cls;
        for (std::size_t v = 0; v < n; ++v)
            if (c.colors[v] == color) cls.push_back(static_cast<Vertex>(v));
        for (auto& comp : components(c.colored, VertexSet(std::move(cls)))) {
            int wd = weak_diameter(c.host, comp);
            if (check.color == -1 || wd > check.worst_diameter) {
                check.color = color;
                check.worst_diameter = wd;
                check.worst_component = std::move(comp);
            }
        }
    }
    check.ok = check.worst_diameter <= c.bound;
    return check;
}

}  // namespace locdom
