#pragma once

// Left-right planarity test (de Fraysseix–Rosenstiehl criterion, following
// Brandes' formulation). Decides planarity only; no embedding is built.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

namespace detail {

class LeftRightTest {
public:
    explicit LeftRightTest(const LabeledGraph& g) : n_(g.size()) {
        auto edges = g.edges();
        m_ = edges.size();
        adj_.resize(n_);
        for (std::size_t e = 0; e < m_; ++e) {
            adj_[edges[e].u].push_back({edges[e].v, static_cast<int>(e)});
            adj_[edges[e].v].push_back({edges[e].u, static_cast<int>(e)});
        }
        height_.assign(n_, -1);
        parent_edge_.assign(n_, -1);
        out_.resize(n_);
        src_.assign(m_, -1);
        dst_.assign(m_, -1);
        lowpt_.assign(m_, 0);
        lowpt2_.assign(m_, 0);
        nesting_.assign(m_, 0);
        lowpt_edge_.assign(m_, -1);
        ref_.assign(m_, -1);
        stack_bottom_.assign(m_, 0);
    }

    bool run() {
        if (n_ > 2 && m_ > 3 * n_ - 6) return false;
        std::vector<Vertex> roots;
        for (std::size_t v = 0; v < n_; ++v) {
            if (height_[v] == -1) {
                height_[v] = 0;
                roots.push_back(static_cast<Vertex>(v));
                orient(static_cast<Vertex>(v));
            }
        }
        for (auto& edges : out_)
            std::stable_sort(edges.begin(), edges.end(), [&](int a, int b) { return nesting_[a] < nesting_[b]; });
        for (Vertex r : roots)
            if (!test(r)) return false;
        return true;
    }

private:
    struct Interval {
        int low = -1;
        int high = -1;
        bool empty() const { return low == -1 && high == -1; }
    };
    struct ConflictPair {
        Interval left;
        Interval right;
        void swap() { std::swap(left, right); }
    };

    bool conflicting(const Interval& i, int edge) const { return !i.empty() && lowpt_[i.high] > lowpt_[edge]; }

    int lowest(const ConflictPair& p) const {
        if (p.left.empty()) return lowpt_[p.right.low];
        if (p.right.empty()) return lowpt_[p.left.low];
        return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
    }

    // Phase 1: DFS orientation with lowpoints and nesting depths.
    void orient(Vertex v) {
        const int e = parent_edge_[v];
        for (auto [w, ei] : adj_[v]) {
            if (src_[ei] != -1) continue;
            src_[ei] = v;
            dst_[ei] = w;
            out_[v].push_back(ei);
            lowpt_[ei] = height_[v];
            lowpt2_[ei] = height_[v];
            if (height_[w] == -1) {
                parent_edge_[w] = ei;
                height_[w] = height_[v] + 1;
                orient(w);
            } else {
                lowpt_[ei] = height_[w];
            }
            nesting_[ei] = 2 * lowpt_[ei] + (lowpt2_[ei] < height_[v] ? 1 : 0);
            if (e != -1) {
                if (lowpt_[ei] < lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt_[e], lowpt2_[ei]);
                    lowpt_[e] = lowpt_[ei];
                } else if (lowpt_[ei] > lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt_[ei]);
                } else {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[ei]);
                }
            }
        }
    }

    // Phase 2: constraint propagation over the conflict-pair stack.
    bool test(Vertex v) {
        const int e = parent_edge_[v];
        for (std::size_t i = 0; i < out_[v].size(); ++i) {
            const int ei = out_[v][i];
            const Vertex w = dst_[ei];
            stack_bottom_[ei] = stack_.size();
            if (ei == parent_edge_[w]) {
                if (!test(w)) return false;
            } else {
                lowpt_edge_[ei] = ei;
                stack_.push_back({Interval{}, Interval{ei, ei}});
            }
            if (lowpt_[ei] < height_[v]) {
                if (i == 0) {
                    lowpt_edge_[e] = lowpt_edge_[ei];
                } else if (!add_constraints(ei, e)) {
                    return false;
                }
            }
        }
        if (e != -1) {
            const Vertex u = src_[e];
            trim_back_edges(u);
            if (lowpt_[e] < height_[u]) {
                const int hl = stack_.back().left.high;
                const int hr = stack_.back().right.high;
                ref_[e] = (hl != -1 && (hr == -1 || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
            }
        }
        return true;
    }

    bool add_constraints(int ei, int e) {
        ConflictPair p;
        // Merge return edges of ei into p.right.
        do {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (!q.left.empty()) q.swap();
            if (!q.left.empty()) return false;
            if (lowpt_[q.right.low] > lowpt_[e]) {
                if (p.right.empty())
                    p.right = q.right;
                else
                    ref_[p.right.low] = q.right.high;
                p.right.low = q.right.low;
            } else {
                ref_[q.right.low] = lowpt_edge_[e];
            }
        } while (stack_.size() != stack_bottom_[ei]);

        // Merge conflicting return edges of earlier siblings into p.left.
        while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (conflicting(q.right, ei)) q.swap();
            if (conflicting(q.right, ei)) return false;
            if (p.right.low != -1) ref_[p.right.low] = q.right.high;
            if (q.right.low != -1) p.right.low = q.right.low;
            if (p.left.empty())
                p.left.high = q.left.high;
            else
                ref_[p.left.low] = q.left.high;
            p.left.low = q.left.low;
        }
        if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
        return true;
    }

    // Drop back edges that end at u, the parent of the edge being finished.
    void trim_back_edges(Vertex u) {
        while (!stack_.empty() && lowest(stack_.back()) == height_[u]) stack_.pop_back();
        if (stack_.empty()) return;
        ConflictPair p = stack_.back();
        stack_.pop_back();
        while (p.left.high != -1 && dst_[p.left.high] == u) p.left.high = ref_[p.left.high];
        if (p.left.high == -1 && p.left.low != -1) {
            ref_[p.left.low] = p.right.low;
            p.left.low = -1;
        }
        while (p.right.high != -1 && dst_[p.right.high] == u) p.right.high = ref_[p.right.high];
        if (p.right.high == -1 && p.right.low != -1) {
            ref_[p.right.low] = p.left.low;
            p.right.low = -1;
        }
        stack_.push_back(p);
    }

    std::size_t n_ = 0, m_ = 0;
    std::vector<std::vector<std::pair<Vertex, int>>> adj_;
    std::vector<int> height_, parent_edge_;
    std::vector<std::vector<int>> out_;
    std::vector<Vertex> src_, dst_;
    std::vector<int> lowpt_, lowpt2_, nesting_, lowpt_edge_, ref_;
    std::vector<std::size_t> stack_bottom_;
    std::vector<ConflictPair> stack_;
};

}  // namespace detail

inline bool is_planar(const LabeledGraph& g) { return detail::LeftRightTest(g).run(); }

/// Membership test for a graph class, used to detect T-errors. Hereditary
/// classes (closed under vertex deletion) are assumed throughout.
struct ClassPredicate {
    std::string name;
    std::function<bool(const LabeledGraph&)> test;
    bool hereditary = true;

    bool operator()(const LabeledGraph& g) const { return test(g); }
};

inline ClassPredicate planar_class() { return {"planar", [](const LabeledGraph& g) { return is_planar(g); }, true}; }

}  // namespace locdom
