#pragma once

// Exact subset-domination oracles: MDS(G, S), enumeration of every minimum
// dominating set of S, and the "best" minimum dominating set used by the
// planar algorithm.
//
// All searches work on a set-cover view of the instance: targets are the
// vertices of S, candidates are the vertices of N[S] (a minimum set never
// needs anything else), candidate c covers N[c] & S. Candidates are indexed
// in ascending label order (or a caller-supplied rank order) so that index
// order is the order used for lexicographic comparisons.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locdom/detail/bits.hpp"
#include "locdom/error.hpp"
#include "locdom/graph.hpp"

namespace locdom {

struct DominationOptions {
    /// Cap on enumerated optima; exceeding it raises ResourceError.
    std::size_t max_solutions = 1'000'000;
    /// Cap on branch-and-bound nodes per search; exceeding it raises ResourceError.
    std::uint64_t max_search_nodes = 200'000'000;
};

/// A set together with the target it claims to dominate.
struct DominationCertificate {
    VertexSet chosen;
    VertexSet target;
};

/// True iff target ⊆ N[chosen].
inline bool verify_domination(const LabeledGraph& g, const VertexSet& chosen, const VertexSet& target) {
    require_members(g, chosen);
    require_members(g, target);
    std::vector<char> covered(g.size(), 0);
    for (Vertex c : chosen) {
        covered[c] = 1;
        for (Vertex w : g.neighbors(c)) covered[w] = 1;
    }
    return std::all_of(target.begin(), target.end(), [&](Vertex t) { return covered[t] != 0; });
}

inline bool verify(const LabeledGraph& g, const DominationCertificate& cert) {
    return verify_domination(g, cert.chosen, cert.target);
}

/// True iff some w in `comparable` has N[v] ⊊ N[w]. Such a w is necessarily a
/// neighbor of v.
inline bool has_strict_dominator(const LabeledGraph& g, Vertex v, const std::vector<char>& comparable) {
    auto nv = g.neighbors(v);
    for (Vertex w : nv) {
        if (!comparable[w]) continue;
        auto nw = g.neighbors(w);
        if (nw.size() <= nv.size()) continue;
        // N[v] ⊆ N[w]: every neighbor of v other than w must be a neighbor of w.
        bool contained = std::all_of(nv.begin(), nv.end(), [&](Vertex x) {
            return x == w || std::binary_search(nw.begin(), nw.end(), x);
        });
        if (contained) return true;
    }
    return false;
}

namespace detail {

class CoverSearch {
public:
    /// `rank`, when given, replaces label order for lexicographic comparisons.
    CoverSearch(const LabeledGraph& g, const VertexSet& target, const std::vector<char>* allowed,
                const DominationOptions& opts, const std::vector<int>* rank = nullptr)
        : opts_(opts) {
        require_members(g, target);
        targets_ = target.members();
        for (Vertex c : neighborhood(g, target, 1))
            if (!allowed || (*allowed)[c]) candidates_.push_back(c);
        if (rank)
            std::sort(candidates_.begin(), candidates_.end(), [&](Vertex a, Vertex b) { return (*rank)[a] < (*rank)[b]; });

        const std::size_t nt = targets_.size(), nc = candidates_.size();
        cover_.assign(nc, Bits(nt));
        dominators_.assign(nt, Bits(nc));
        std::vector<int> target_index(g.size(), -1);
        for (std::size_t i = 0; i < nt; ++i) target_index[targets_[i]] = static_cast<int>(i);
        for (std::size_t ci = 0; ci < nc; ++ci) {
            auto mark = [&](Vertex x) {
                if (int ti = target_index[x]; ti >= 0) {
                    cover_[ci].set(static_cast<std::size_t>(ti));
                    dominators_[static_cast<std::size_t>(ti)].set(ci);
                }
            };
            mark(candidates_[ci]);
            for (Vertex w : g.neighbors(candidates_[ci])) mark(w);
        }
    }

    std::size_t target_count() const { return targets_.size(); }

    /// Minimum cover, or nullopt when the allowed candidates cannot cover the target.
    std::optional<VertexSet> minimum() {
        Bits uncovered = all_targets();
        Bits avail = all_candidates();
        if (!coverable(uncovered, avail)) return std::nullopt;
        auto best = solve(uncovered, avail, candidates_.size() + 1, true);
        if (!best) throw InternalError("exact search lost a cover");
        return to_set(*best);
    }

    /// Every cover of size exactly k, in lexicographic order. k must be the optimum.
    std::vector<VertexSet> enumerate(std::size_t k) {
        std::vector<VertexSet> out;
        std::vector<std::size_t> chosen;
        enum_dfs(all_targets(), all_candidates(), chosen, k, out);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Lexicographically smallest cover of size exactly k (k must be the optimum
    /// over these candidates), or nullopt.
    std::optional<VertexSet> lex_smallest(std::size_t k) {
        std::vector<std::size_t> chosen;
        if (lex_dfs(all_targets(), all_candidates(), chosen, k)) {
            std::sort(chosen.begin(), chosen.end());
            return to_set(chosen);
        }
        return std::nullopt;
    }

private:
    Bits all_targets() const {
        Bits b(targets_.size());
        for (std::size_t i = 0; i < targets_.size(); ++i) b.set(i);
        return b;
    }
    Bits all_candidates() const {
        Bits b(candidates_.size());
        for (std::size_t i = 0; i < candidates_.size(); ++i) b.set(i);
        return b;
    }

    VertexSet to_set(const std::vector<std::size_t>& idx) const {
        std::vector<Vertex> out;
        out.reserve(idx.size());
        for (auto i : idx) out.push_back(candidates_[i]);
        return VertexSet(std::move(out));
    }

    void tick() {
        if (++nodes_ > opts_.max_search_nodes)
            throw ResourceError("exact domination search exceeded " + std::to_string(opts_.max_search_nodes) +
                                " nodes (" + std::to_string(targets_.size()) + " targets, " +
                                std::to_string(candidates_.size()) + " candidates)");
    }

    bool coverable(const Bits& uncovered, const Bits& avail) const {
        bool ok = true;
        uncovered.for_each([&](std::size_t t) { ok = ok && dominators_[t].intersects(avail); });
        return ok;
    }

    /// Lower bound on the number of further picks: the larger of a greedy
    /// packing of targets with pairwise disjoint dominator sets and
    /// ceil(|uncovered| / best single gain).
    std::size_t lower_bound(const Bits& uncovered, const Bits& avail) const {
        Bits used(candidates_.size());
        std::size_t packing = 0;
        uncovered.for_each([&](std::size_t t) {
            Bits d = dominators_[t] & avail;
            if (!d.intersects(used)) {
                ++packing;
                used |= d;
            }
        });
        std::size_t remaining = uncovered.count(), gain = 0;
        avail.for_each([&](std::size_t c) { gain = std::max(gain, cover_[c].count_and(uncovered)); });
        if (gain == 0) return remaining ? candidates_.size() + 1 : 0;
        return std::max(packing, (remaining + gain - 1) / gain);
    }

    /// Uncovered target with fewest available dominators; size() if none uncovered.
    std::pair<std::size_t, std::size_t> branch_target(const Bits& uncovered, const Bits& avail) const {
        std::size_t best = targets_.size(), best_count = candidates_.size() + 1;
        uncovered.for_each([&](std::size_t t) {
            std::size_t c = dominators_[t].count_and(avail);
            if (c < best_count) {
                best_count = c;
                best = t;
            }
        });
        return {best, best_count};
    }

    std::vector<std::size_t> greedy(Bits uncovered, Bits avail) const {
        std::vector<std::size_t> picked;
        while (uncovered.any()) {
            std::size_t best = candidates_.size(), gain = 0;
            avail.for_each([&](std::size_t c) {
                std::size_t gc = cover_[c].count_and(uncovered);
                if (gc > gain) {
                    gain = gc;
                    best = c;
                }
            });
            picked.push_back(best);
            uncovered.and_not(cover_[best]);
            avail.reset(best);
        }
        return picked;
    }

    /// Splits the uncovered targets into groups that share no available
    /// dominator; such groups can be covered independently.
    std::vector<Bits> split(const Bits& uncovered, const Bits& avail) const {
        std::vector<Bits> parts;
        Bits left = uncovered;
        while (left.any()) {
            Bits part(targets_.size());
            std::vector<std::size_t> stack{left.first()};
            part.set(stack.back());
            left.reset(stack.back());
            while (!stack.empty()) {
                std::size_t t = stack.back();
                stack.pop_back();
                (dominators_[t] & avail).for_each([&](std::size_t c) {
                    Bits reach = cover_[c] & left;
                    reach.for_each([&](std::size_t u) {
                        part.set(u);
                        left.reset(u);
                        stack.push_back(u);
                    });
                });
            }
            parts.push_back(std::move(part));
        }
        return parts;
    }

    /// Drops candidates whose remaining coverage is contained in another's
    /// (ties keep the lower index). Preserves the optimum, not the set of optima.
    void drop_dominated(const Bits& uncovered, Bits& avail) const {
        std::vector<std::size_t> live;
        std::vector<Bits> gain;
        avail.for_each([&](std::size_t c) {
            Bits g = cover_[c] & uncovered;
            if (g.none()) {
                avail.reset(c);
                return;
            }
            live.push_back(c);
            gain.push_back(std::move(g));
        });
        std::vector<char> dropped(live.size(), 0);
        for (std::size_t i = 0; i < live.size(); ++i)
            for (std::size_t j = 0; j < live.size() && !dropped[i]; ++j) {
                if (i == j || dropped[j]) continue;
                Bits extra = gain[i];
                extra.and_not(gain[j]);
                if (extra.any()) continue;
                // gain[i] ⊆ gain[j]; on equality drop the higher index.
                Bits back = gain[j];
                back.and_not(gain[i]);
                if (back.any() || j < i) dropped[i] = 1;
            }
        for (std::size_t i = 0; i < live.size(); ++i)
            if (dropped[i]) avail.reset(live[i]);
    }

    /// A minimum cover of `uncovered` from `avail` if one has fewer than
    /// `limit` members, else nullopt.
    std::optional<std::vector<std::size_t>> solve(const Bits& uncovered, Bits avail, std::size_t limit, bool fresh) {
        tick();
        if (uncovered.none()) return limit > 0 ? std::optional<std::vector<std::size_t>>(std::vector<std::size_t>{})
                                               : std::nullopt;
        drop_dominated(uncovered, avail);
        if (lower_bound(uncovered, avail) >= limit) return std::nullopt;

        auto parts = split(uncovered, avail);
        if (parts.size() > 1) {
            std::vector<std::size_t> lbs;
            std::size_t rest = 0;
            for (const auto& p : parts) {
                lbs.push_back(lower_bound(p, avail));
                rest += lbs.back();
            }
            std::vector<std::size_t> picked;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                rest -= lbs[i];
                if (picked.size() + rest >= limit) return std::nullopt;
                auto sub = solve(parts[i], avail, limit - picked.size() - rest, true);
                if (!sub) return std::nullopt;
                picked.insert(picked.end(), sub->begin(), sub->end());
            }
            return picked;
        }

        std::optional<std::vector<std::size_t>> best;
        if (fresh) {
            auto g = greedy(uncovered, avail);
            if (g.size() < limit) {
                limit = g.size();
                best = std::move(g);
            }
        }
        auto [t, count] = branch_target(uncovered, avail);
        if (count == 0) return best;

        // Try the candidates covering the most first; branch i excludes branches < i.
        std::vector<std::size_t> order;
        (dominators_[t] & avail).for_each([&](std::size_t c) { order.push_back(c); });
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return cover_[a].count_and(uncovered) > cover_[b].count_and(uncovered);
        });
        for (std::size_t c : order) {
            if (limit <= 1) break;
            avail.reset(c);
            Bits next = uncovered;
            next.and_not(cover_[c]);
            if (auto sub = solve(next, avail, limit - 1, false)) {
                sub->push_back(c);
                limit = sub->size();
                best = std::move(sub);
            }
        }
        return best;
    }

    void enum_dfs(const Bits& uncovered, Bits avail, std::vector<std::size_t>& chosen, std::size_t k,
                  std::vector<VertexSet>& out) {
        tick();
        if (uncovered.none()) {
            if (chosen.size() != k) throw InternalError("enumeration met a cover smaller than the optimum");
            if (out.size() >= opts_.max_solutions)
                throw ResourceError("more than " + std::to_string(opts_.max_solutions) + " minimum dominating sets");
            out.push_back(to_set(chosen));
            return;
        }
        if (chosen.size() + lower_bound(uncovered, avail) > k) return;
        auto [t, count] = branch_target(uncovered, avail);
        if (count == 0) return;
        std::vector<std::size_t> order;
        (dominators_[t] & avail).for_each([&](std::size_t c) { order.push_back(c); });
        for (std::size_t c : order) {
            avail.reset(c);
            Bits next = uncovered;
            next.and_not(cover_[c]);
            chosen.push_back(c);
            enum_dfs(next, avail, chosen, k, out);
            chosen.pop_back();
        }
    }

    // Include/exclude over candidates in ascending index order, include first:
    // the first cover reached is the lexicographically smallest.
    bool lex_dfs(const Bits& uncovered, Bits avail, std::vector<std::size_t>& chosen, std::size_t k) {
        tick();
        if (uncovered.none()) return chosen.size() == k;
        if (chosen.size() >= k) return false;
        auto [t, count] = branch_target(uncovered, avail);
        if (count == 0) return false;
        if (chosen.size() + lower_bound(uncovered, avail) > k) return false;

        if (count == 1) {
            // Forced: the only remaining dominator of t belongs to every completion.
            std::size_t c = (dominators_[t] & avail).first();
            avail.reset(c);
            Bits next = uncovered;
            next.and_not(cover_[c]);
            chosen.push_back(c);
            if (lex_dfs(next, avail, chosen, k)) return true;
            chosen.pop_back();
            return false;
        }

        // Smallest candidate that still covers something; earlier ones are
        // useless here and cannot appear in an optimum extending this node.
        std::size_t c = avail.first();
        while (c < candidates_.size() && !cover_[c].intersects(uncovered)) c = avail.next(c + 1);
        if (c >= candidates_.size()) return false;
        for (std::size_t skip = avail.first(); skip < c; skip = avail.next(skip + 1)) avail.reset(skip);

        avail.reset(c);
        Bits next = uncovered;
        next.and_not(cover_[c]);
        chosen.push_back(c);
        if (lex_dfs(next, avail, chosen, k)) return true;
        chosen.pop_back();
        return lex_dfs(uncovered, avail, chosen, k);
    }

    DominationOptions opts_;
    std::vector<Vertex> targets_;
    std::vector<Vertex> candidates_;
    std::vector<Bits> cover_;       // per candidate, over targets
    std::vector<Bits> dominators_;  // per target, over candidates
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// One minimum set dominating `target`, drawn from N[target].
inline VertexSet minimum_dominating_set(const LabeledGraph& g, const VertexSet& target,
                                        const DominationOptions& opts = {}) {
    detail::CoverSearch search(g, target, nullptr, opts);
    auto best = search.minimum();
    if (!best) throw InternalError("N[target] failed to dominate target");
    return *best;
}

/// MDS(G, target); 0 for an empty target.
inline std::size_t mds_size(const LabeledGraph& g, const VertexSet& target, const DominationOptions& opts = {}) {
    return minimum_dominating_set(g, target, opts).size();
}

/// All minimum dominating sets of `target`, sorted lexicographically.
inline std::vector<VertexSet> all_minimum_dominating_sets(const LabeledGraph& g, const VertexSet& target,
                                                          const DominationOptions& opts = {}) {
    detail::CoverSearch search(g, target, nullptr, opts);
    auto k = search.minimum();
    if (!k) throw InternalError("N[target] failed to dominate target");
    return search.enumerate(k->size());
}

/// Best minimum dominating set of `target`: among all minimum dominating sets,
/// drop those holding a vertex v with N[v] ⊊ N[w] for some w, and return the
/// lexicographically smallest survivor. Only vertices in `comparable` take
/// part in the discard rule, on either side of the comparison. A non-empty
/// `rank` (indexed by label) replaces label order in the lexicographic tie-break.
inline VertexSet best_minimum_dominating_set(const LabeledGraph& g, const VertexSet& target,
                                             const VertexSet& comparable, const DominationOptions& opts = {},
                                             const std::vector<int>& rank = {}) {
    if (!rank.empty() && rank.size() != g.size()) throw InputError("rank vector has wrong length");
    require_members(g, comparable);
    const std::size_t optimum = mds_size(g, target, opts);

    std::vector<char> in_comparable(g.size(), 0);
    for (Vertex v : comparable) in_comparable[v] = 1;
    std::vector<char> allowed(g.size(), 1);
    for (Vertex v : comparable)
        if (has_strict_dominator(g, v, in_comparable)) allowed[v] = 0;

    detail::CoverSearch search(g, target, &allowed, opts, rank.empty() ? nullptr : &rank);
    auto best = search.lex_smallest(optimum);
    if (!best) throw InternalError("no minimum dominating set survives the discard rule");
    return *best;
}

inline VertexSet best_minimum_dominating_set(const LabeledGraph& g, const VertexSet& target,
                                             const DominationOptions& opts = {}) {
    return best_minimum_dominating_set(g, target, VertexSet::range(g.size()), opts);
}

}  // namespace locdom
