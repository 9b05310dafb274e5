#pragma once

// The 5-round planar dominating set algorithm. Every vertex u collects
// G[N^4[u]], computes the best minimum dominating set D_u of N^3[u] inside
// that ball, and nominates the smallest label of D_u ∩ N[u]. The output is
// the set of nominees. Well defined on every graph; the approximation
// guarantee is for planar inputs.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "locdom/domination.hpp"
#include "locdom/graph.hpp"
#include "locdom/local_runtime.hpp"

namespace locdom {

inline constexpr int kPlanarViewRadius = 4;
inline constexpr int kPlanarTargetRadius = 3;
inline constexpr int kPlanarRounds = 5;
inline constexpr int kPlanarUniformity = 4;
/// 2 + 12 + 288.
inline constexpr double kPlanarRatio = 302.0;

struct NominationDecision {
    VertexSet best_local_set;  ///< D_u, original labels
    Vertex nominee = -1;       ///< v_u

    friend bool operator==(const NominationDecision&, const NominationDecision&) = default;
};

struct PlanarOptions {
    DominationOptions oracle;
    /// Replaces labels in every "smallest label" comparison when non-empty
    /// (indexed by label). Used to test that only the label order matters.
    std::vector<int> rank;
};

namespace detail {

/// D_u is a function of the labeled ball and the target, so centers with the
/// same view share one exact solve. Balls are keyed by labels and edges, which
/// keeps a reused rule correct across different graphs.
class BestSetCache {
public:
    struct Key {
        std::vector<Vertex> labels;
        std::vector<Edge> edges;
        std::vector<Vertex> target;
        friend auto operator<=>(const Key&, const Key&) = default;
    };

    template <class Solve>
    VertexSet get(Key key, Solve&& solve) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = sets_.find(key); it != sets_.end()) return it->second;
        }
        VertexSet result = solve();
        std::lock_guard lock(mutex_);
        sets_.emplace(std::move(key), result);
        return result;
    }

private:
    std::mutex mutex_;
    std::map<Key, VertexSet> sets_;
};

}  // namespace detail

/// The per-vertex rule as a radius-4 local algorithm.
inline LocalAlgorithm<NominationDecision> planar_nomination(PlanarOptions opts = {}) {
    auto cache = std::make_shared<detail::BestSetCache>();
    return {"planar-nomination", kPlanarViewRadius, [opts = std::move(opts), cache](const BallView& view) {
                const Subgraph& b = view.ball;
                std::vector<Vertex> near;
                for (std::size_t i = 0; i < view.size(); ++i)
                    if (view.dist[i] <= kPlanarTargetRadius) near.push_back(static_cast<Vertex>(i));
                // The discard rule only compares vertices whose closed
                // neighborhoods the ball shows in full (distance <= 3).
                const VertexSet target(near);

                std::vector<int> local_rank;
                if (!opts.rank.empty()) {
                    local_rank.reserve(b.labels.size());
                    for (Vertex label : b.labels) local_rank.push_back(opts.rank.at(label));
                }
                const VertexSet best = cache->get({b.labels, b.graph.edges(), target.members()}, [&] {
                    return best_minimum_dominating_set(b.graph, target, target, opts.oracle, local_rank);
                });

                const Vertex c = view.center_local();
                Vertex nominee = -1;
                for (Vertex x : best) {
                    if (x != c && !b.graph.has_edge(c, x)) continue;
                    auto key = [&](Vertex v) { return local_rank.empty() ? v : local_rank[v]; };
                    if (nominee == -1 || key(x) < key(nominee)) nominee = x;
                }
                if (nominee == -1) throw InternalError("best local set does not dominate its own center");
                return NominationDecision{b.to_original(best), b.original(nominee)};
            }};
}

struct PlanarRun {
    VertexSet output;
    std::vector<NominationDecision> decisions;  ///< indexed by label
    RoundLedger ledger;
};

/// Round accounting: 4 rounds to collect the ball, 1 to notify the nominee.
inline PlanarRun collect_nominations(std::vector<NominationDecision> decisions) {
    PlanarRun run;
    std::vector<Vertex> nominees;
    nominees.reserve(decisions.size());
    for (const auto& d : decisions) nominees.push_back(d.nominee);
    run.output = VertexSet(std::move(nominees));
    run.decisions = std::move(decisions);
    run.ledger.view_collection = kPlanarViewRadius;
    run.ledger.algorithm_run = kPlanarRounds - kPlanarViewRadius;
    return run;
}

inline PlanarRun algorithm_a(const LabeledGraph& g, const PlanarOptions& opts = {}) {
    return collect_nominations(run_by_views(g, planar_nomination(opts)));
}

/// Same algorithm on the flooding executor.
inline PlanarRun algorithm_a_by_messages(const LabeledGraph& g, const PlanarOptions& opts = {}) {
    auto run = run_by_messages(g, planar_nomination(opts));
    auto out = collect_nominations(std::move(run.decisions));
    if (run.ledger.view_collection != kPlanarViewRadius) throw InternalError("unexpected view-collection rounds");
    return out;
}

/// Both sides of |A(G) ∩ S| <= alpha * MDS(G, N^k[S]).
struct UniformityCheck {
    std::size_t selected_in_s = 0;  ///< |A(G) ∩ S|
    std::size_t optimum = 0;        ///< MDS(G, N^k[S])
    double alpha = 0;
    bool holds = false;
};

/// Checks the k-uniform inequality for a given algorithm output.
inline UniformityCheck check_uniformity(const LabeledGraph& g, const VertexSet& output, const VertexSet& s, int k,
                                        double alpha, const DominationOptions& opts = {}) {
    if (k < 0) throw InputError("uniformity radius must be non-negative");
    require_members(g, output);
    UniformityCheck c;
    c.selected_in_s = set_intersection(output, s).size();
    c.optimum = mds_size(g, neighborhood(g, s, k), opts);
    c.alpha = alpha;
    c.holds = static_cast<double>(c.selected_in_s) <= alpha * static_cast<double>(c.optimum);
    return c;
}

/// Checks the inequality for the planar algorithm's own output.
inline UniformityCheck check_uniformity(const LabeledGraph& g, const VertexSet& s, int k, double alpha,
                                        const DominationOptions& opts = {}) {
    return check_uniformity(g, algorithm_a(g, {opts, {}}).output, s, k, alpha, opts);
}

}  // namespace locdom
