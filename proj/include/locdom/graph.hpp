#pragma once

// Immutable labeled graphs, vertex sets, balls and the distance utilities
// every other module builds on.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "locdom/error.hpp"

namespace locdom {

/// Vertex label. Labels of an n-vertex graph are exactly 0..n-1 and double
/// as the total order behind every "smallest label" rule.
using Vertex = std::int32_t;

struct Edge {
    Vertex u;
    Vertex v;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex labels. Ordering is lexicographic on
/// the ascending label sequence.
class VertexSet {
public:
    using const_iterator = std::vector<Vertex>::const_iterator;

    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> init) : members_(init) { normalize(); }
    explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) { normalize(); }

    /// {0, ..., n-1}
    static VertexSet range(std::size_t n) {
        VertexSet s;
        s.members_.resize(n);
        for (std::size_t i = 0; i < n; ++i) s.members_[i] = static_cast<Vertex>(i);
        return s;
    }

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const_iterator begin() const noexcept { return members_.begin(); }
    const_iterator end() const noexcept { return members_.end(); }
    Vertex front() const { return members_.front(); }
    Vertex back() const { return members_.back(); }
    Vertex operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Vertex>& members() const noexcept { return members_; }

    bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

    void insert(Vertex v) {
        auto it = std::lower_bound(members_.begin(), members_.end(), v);
        if (it == members_.end() || *it != v) members_.insert(it, v);
    }

    bool is_subset_of(const VertexSet& other) const {
        return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

private:
    void normalize() {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    std::vector<Vertex> members_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline std::string to_string(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

/// Finite simple undirected graph on labels 0..n-1. Immutable once built.
class LabeledGraph {
public:
    LabeledGraph() = default;

    /// Throws InputError on loops, out-of-range endpoints or repeated edges.
    LabeledGraph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
        for (const Edge& e : edges) {
            if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n || static_cast<std::size_t>(e.v) >= n)
                throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 ") out of range for n=" + std::to_string(n));
            if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
        }
        for (auto& nbrs : adj_) {
            std::sort(nbrs.begin(), nbrs.end());
            if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
                throw InputError("parallel edge in edge list");
        }
        edge_count_ = edges.size();
    }

    LabeledGraph(std::size_t n, std::initializer_list<Edge> edges)
        : LabeledGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t size() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool has_vertex(Vertex v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < adj_.size(); }

    void require_vertex(Vertex v) const {
        if (!has_vertex(v))
            throw InputError("unknown vertex label " + std::to_string(v) + " (n=" + std::to_string(size()) + ")");
    }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    /// Edges with u < v, sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (std::size_t u = 0; u < adj_.size(); ++u)
            for (Vertex v : adj_[u])
                if (static_cast<Vertex>(u) < v) out.push_back({static_cast<Vertex>(u), v});
        return out;
    }

    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// Closed neighborhood N[v].
inline VertexSet closed_neighborhood(const LabeledGraph& g, Vertex v) {
    std::vector<Vertex> out(g.neighbors(v).begin(), g.neighbors(v).end());
    out.push_back(v);
    return VertexSet(std::move(out));
}

inline void require_members(const LabeledGraph& g, const VertexSet& s) {
    if (!s.empty() && (s.front() < 0 || !g.has_vertex(s.back())))
        throw InputError("vertex set " + to_string(s) + " is not contained in V(G), n=" + std::to_string(g.size()));
}

/// Distance value for vertices not reachable from the source.
inline constexpr int kUnreachable = -1;

/// Hop distances from `source`, indexed by label; kUnreachable where no path exists.
/// Search stops past `limit` when it is non-negative.
inline std::vector<int> distances(const LabeledGraph& g, Vertex source, int limit = -1) {
    g.require_vertex(source);
    std::vector<int> dist(g.size(), kUnreachable);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (limit >= 0 && dist[u] >= limit) continue;
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

/// Multi-source distances from a vertex set, e.g. to compute N^r[S].
inline std::vector<int> distances_from_set(const LabeledGraph& g, const VertexSet& sources, int limit = -1) {
    require_members(g, sources);
    std::vector<int> dist(g.size(), kUnreachable);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (limit >= 0 && dist[u] >= limit) continue;
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

/// N^r[S]
inline VertexSet neighborhood(const LabeledGraph& g, const VertexSet& s, int r) {
    if (r < 0) throw InputError("negative radius " + std::to_string(r));
    auto dist = distances_from_set(g, s, r);
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (dist[v] != kUnreachable) out.push_back(static_cast<Vertex>(v));
    return VertexSet(std::move(out));
}

/// Induced subgraph with its own 0..k-1 labels. Local index i stands for
/// original label labels[i]; labels ascend, so local order equals label order.
struct Subgraph {
    LabeledGraph graph;
    std::vector<Vertex> labels;

    Vertex original(Vertex local) const { return labels[local]; }

    /// Local index of an original label, or -1.
    Vertex local(Vertex original_label) const {
        auto it = std::lower_bound(labels.begin(), labels.end(), original_label);
        if (it == labels.end() || *it != original_label) return -1;
        return static_cast<Vertex>(it - labels.begin());
    }

    VertexSet to_original(const VertexSet& local_set) const {
        std::vector<Vertex> out;
        out.reserve(local_set.size());
        for (Vertex v : local_set) out.push_back(labels[v]);
        return VertexSet(std::move(out));
    }
};

inline Subgraph induced_subgraph(const LabeledGraph& g, const VertexSet& s) {
    require_members(g, s);
    Subgraph sub;
    sub.labels = s.members();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < sub.labels.size(); ++i) {
        for (Vertex w : g.neighbors(sub.labels[i])) {
            Vertex j = sub.local(w);
            if (j > static_cast<Vertex>(i)) edges.push_back({static_cast<Vertex>(i), j});
        }
    }
    sub.graph = LabeledGraph(sub.labels.size(), edges);
    return sub;
}

/// What a vertex knows after `radius` rounds: the induced ball G[N^r[center]]
/// with original labels and distances from the center.
struct BallView {
    Vertex center = 0;
    int radius = 0;
    Subgraph ball;
    std::vector<int> dist;  ///< indexed by local vertex

    std::size_t size() const noexcept { return ball.labels.size(); }
    Vertex center_local() const { return ball.local(center); }
};

/// Builds a view from an already computed distance array (distances from
/// `center` truncated at `radius`).
inline BallView make_ball_view(const LabeledGraph& g, Vertex center, int radius, const std::vector<int>& dist) {
    std::vector<Vertex> members;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (dist[v] != kUnreachable && dist[v] <= radius) members.push_back(static_cast<Vertex>(v));
    BallView view;
    view.center = center;
    view.radius = radius;
    view.ball = induced_subgraph(g, VertexSet(std::move(members)));
    view.dist.reserve(view.ball.labels.size());
    for (Vertex v : view.ball.labels) view.dist.push_back(dist[v]);
    return view;
}

inline BallView ball(const LabeledGraph& g, Vertex center, int r) {
    g.require_vertex(center);
    if (r < 0) throw InputError("negative ball radius " + std::to_string(r));
    return make_ball_view(g, center, r, distances(g, center, r));
}

/// Connected components of G[s], each as a vertex set, ordered by smallest label.
inline std::vector<VertexSet> components(const LabeledGraph& g, const VertexSet& s) {
    require_members(g, s);
    std::vector<char> in_s(g.size(), 0), seen(g.size(), 0);
    for (Vertex v : s) in_s[v] = 1;
    std::vector<VertexSet> out;
    for (Vertex root : s) {
        if (seen[root]) continue;
        std::vector<Vertex> comp{root};
        seen[root] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : g.neighbors(comp[i]))
                if (in_s[w] && !seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        out.emplace_back(std::move(comp));
    }
    return out;
}

/// Largest host-graph distance between two members of `s`; 0 for the empty
/// set. Throws InputError if `s` meets two components of `g`.
inline int weak_diameter(const LabeledGraph& g, const VertexSet& s) {
    require_members(g, s);
    int best = 0;
    for (Vertex u : s) {
        auto dist = distances(g, u);
        for (Vertex v : s) {
            if (dist[v] == kUnreachable)
                throw InputError("weak diameter undefined: " + std::to_string(u) + " and " + std::to_string(v) +
                                 " lie in different components");
            best = std::max(best, dist[v]);
        }
    }
    return best;
}

/// Diameter of a connected graph (0 for the empty graph).
inline int diameter(const LabeledGraph& g) { return weak_diameter(g, VertexSet::range(g.size())); }

/// G^r: same vertices, u~v iff 1 <= dist(u,v) <= r.
inline LabeledGraph power_graph(const LabeledGraph& g, int r) {
    if (r < 1) throw InputError("graph power needs r >= 1, got " + std::to_string(r));
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < g.size(); ++u) {
        auto dist = distances(g, static_cast<Vertex>(u), r);
        for (std::size_t v = u + 1; v < g.size(); ++v)
            if (dist[v] != kUnreachable) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return LabeledGraph(g.size(), edges);
}

/// Graph with every label v replaced by perm[v]; perm must be a permutation of 0..n-1.
inline LabeledGraph relabel(const LabeledGraph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.size()) throw InputError("relabeling permutation has wrong length");
    std::vector<char> seen(g.size(), 0);
    for (Vertex p : perm) {
        if (!g.has_vertex(p) || seen[p]) throw InputError("relabeling is not a permutation");
        seen[p] = 1;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    return LabeledGraph(g.size(), edges);
}

inline VertexSet relabel(const VertexSet& s, std::span<const Vertex> perm) {
    std::vector<Vertex> out;
    for (Vertex v : s) out.push_back(perm[v]);
    return VertexSet(std::move(out));
}

/// Reads the edge-list text format: `n m`, then m lines `u v`. Blank lines and
/// `#` comments are ignored.
inline LabeledGraph read_edge_list(std::istream& in) {
    std::vector<long long> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                long long value = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                tokens.push_back(value);
            } catch (const std::exception&) {
                throw InputError("edge list: not an integer: '" + tok + "'");
            }
        }
    }
    if (tokens.size() < 2) throw InputError("edge list: missing header `n m`");
    long long n = tokens[0], m = tokens[1];
    if (n < 0 || m < 0) throw InputError("edge list: negative header value");
    if (static_cast<long long>(tokens.size()) != 2 + 2 * m)
        throw InputError("edge list: header announces " + std::to_string(m) + " edges but file holds " +
                         std::to_string((tokens.size() - 2) / 2) + " endpoint pairs");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = tokens[2 + 2 * i], v = tokens[3 + 2 * i];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge list: edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
        if (u > v) std::swap(u, v);
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return LabeledGraph(static_cast<std::size_t>(n), edges);
}

inline void write_edge_list(std::ostream& out, const LabeledGraph& g) {
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace locdom
