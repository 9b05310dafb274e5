#pragma once

// Two executors for LOCAL-model algorithms. run_by_views evaluates each rule
// on the induced ball directly; run_by_messages floods knowledge round by
// round and rebuilds the ball from what actually arrived. They must agree.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "locdom/error.hpp"
#include "locdom/graph.hpp"

namespace locdom {

/// Rounds charged to each phase of a run.
struct RoundLedger {
    int view_collection = 0;
    int algorithm_run = 0;
    int repair = 0;

    int total() const noexcept { return view_collection + algorithm_run + repair; }
    friend bool operator==(const RoundLedger&, const RoundLedger&) = default;
};

/// A deterministic per-vertex rule applied to the radius-`radius` view.
/// The rule must only depend on the view (labels included).
template <class Decision>
struct LocalAlgorithm {
    std::string name;
    int radius = 0;
    std::function<Decision(const BallView&)> rule;
};

namespace detail {

[[noreturn]] inline void rethrow_at_center(const Error& e, Vertex center) {
    std::string msg = "rule failed at center " + std::to_string(center) + ": " + e.what();
    switch (e.category()) {
        case ErrorCategory::resource: throw ResourceError(msg);
        case ErrorCategory::input: throw InputError(msg);
        case ErrorCategory::io: throw IoError(msg);
        case ErrorCategory::internal: break;
    }
    throw InternalError(msg);
}

template <class Decision>
Decision apply_rule(const LocalAlgorithm<Decision>& alg, const BallView& view) {
    try {
        return alg.rule(view);
    } catch (const Error& e) {
        rethrow_at_center(e, view.center);
    }
}

inline void require_radius(int radius) {
    if (radius < 0) throw InputError("local algorithm radius must be non-negative, got " + std::to_string(radius));
}

}  // namespace detail

/// Decision of every vertex, indexed by label.
template <class Decision>
std::vector<Decision> run_by_views(const LabeledGraph& g, const LocalAlgorithm<Decision>& alg) {
    detail::require_radius(alg.radius);
    std::vector<Decision> out;
    out.reserve(g.size());
    for (std::size_t u = 0; u < g.size(); ++u)
        out.push_back(detail::apply_rule(alg, ball(g, static_cast<Vertex>(u), alg.radius)));
    return out;
}

template <class Decision>
struct MessageRun {
    std::vector<Decision> decisions;
    RoundLedger ledger;
};

/// Synchronous flooding. Every vertex starts knowing its own adjacency list
/// (neighbor identifiers are known locally) and in each round sends everything
/// it knows to all neighbors. After t rounds a vertex holds the adjacency lists
/// of N^t[u], which is enough to rebuild G[N^t[u]] exactly.
template <class Decision>
MessageRun<Decision> run_by_messages(const LabeledGraph& g, const LocalAlgorithm<Decision>& alg) {
    detail::require_radius(alg.radius);
    using Fact = std::shared_ptr<const std::vector<Vertex>>;
    using Knowledge = std::map<Vertex, Fact>;

    const std::size_t n = g.size();
    std::vector<Knowledge> knowledge(n);
    for (std::size_t v = 0; v < n; ++v) {
        auto nbrs = g.neighbors(static_cast<Vertex>(v));
        knowledge[v].emplace(static_cast<Vertex>(v), std::make_shared<const std::vector<Vertex>>(nbrs.begin(), nbrs.end()));
    }

    for (int round = 0; round < alg.radius; ++round) {
        std::vector<Knowledge> next = knowledge;
        for (std::size_t v = 0; v < n; ++v)
            for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
                for (const auto& [label, fact] : knowledge[w]) next[v].emplace(label, fact);
        knowledge = std::move(next);
    }

    MessageRun<Decision> run;
    run.ledger.view_collection = alg.radius;
    run.decisions.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        const Knowledge& known = knowledge[v];
        // BFS over the received adjacency lists.
        std::map<Vertex, int> dist{{static_cast<Vertex>(v), 0}};
        std::vector<Vertex> frontier{static_cast<Vertex>(v)};
        for (int d = 1; d <= alg.radius; ++d) {
            std::vector<Vertex> next;
            for (Vertex x : frontier) {
                auto it = known.find(x);
                if (it == known.end()) throw InternalError("flooding lost the adjacency of " + std::to_string(x));
                for (Vertex y : *it->second)
                    if (dist.emplace(y, d).second) next.push_back(y);
            }
            frontier = std::move(next);
        }

        BallView view;
        view.center = static_cast<Vertex>(v);
        view.radius = alg.radius;
        for (const auto& [label, d] : dist) {
            view.ball.labels.push_back(label);
            view.dist.push_back(d);
        }
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < view.ball.labels.size(); ++i) {
            for (Vertex y : *known.at(view.ball.labels[i])) {
                Vertex j = view.ball.local(y);
                if (j > static_cast<Vertex>(i)) edges.push_back({static_cast<Vertex>(i), j});
            }
        }
        view.ball.graph = LabeledGraph(view.ball.labels.size(), edges);
        run.decisions.push_back(detail::apply_rule(alg, view));
    }
    return run;
}

}  // namespace locdom
