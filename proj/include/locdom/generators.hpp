#pragma once

// Seeded graph families with known structure. Planar families are checked
// with the planarity tester before they are returned.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "locdom/error.hpp"
#include "locdom/graph.hpp"
#include "locdom/planarity.hpp"

namespace locdom {

enum class Family {
    path,
    cycle,
    grid,
    toroidal_grid,
    random_planar_triangulation,
    projective_circulant,
    depth2_tree,
    gadget_graft,
};

inline constexpr std::string_view family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::grid: return "grid";
        case Family::toroidal_grid: return "toroidalGrid";
        case Family::random_planar_triangulation: return "randomPlanarTriangulation";
        case Family::projective_circulant: return "projectiveCirculant";
        case Family::depth2_tree: return "depth2Tree";
        case Family::gadget_graft: return "gadgetGraft";
    }
    return "?";
}

inline Family parse_family(std::string_view name) {
    for (Family f : {Family::path, Family::cycle, Family::grid, Family::toroidal_grid,
                     Family::random_planar_triangulation, Family::projective_circulant, Family::depth2_tree,
                     Family::gadget_graft})
        if (family_name(f) == name) return f;
    throw InputError("unknown graph family '" + std::string(name) + "'");
}

/// Parameters used by each family:
///   path, cycle: n.  grid, toroidalGrid: rows, cols.
///   randomPlanarTriangulation: n, delete_prob, seed.
///   projectiveCirculant: genus g (n = 2g+6).  depth2Tree: alpha.
///   gadgetGraft: host ("path", "cycle" or "grid") sized by n or rows/cols,
///   gadgets, gadget ("K5" or "circulant"), spacing, bridge.
/// `shuffle` applies a seeded random relabeling to any family.
struct GeneratorSpec {
    Family family = Family::path;
    int n = 0;
    int rows = 0;
    int cols = 0;
    int alpha = 0;
    int genus = 1;
    double delete_prob = 0.0;
    std::string host = "path";
    int gadgets = 0;
    std::string gadget = "K5";
    int spacing = 0;
    int bridge = 1;
    bool shuffle = false;
    std::uint64_t seed = 0;
};

/// Upper bound on the Euler genus implied by the construction.
inline std::optional<int> genus_upper_bound(const GeneratorSpec& s) {
    switch (s.family) {
        case Family::path:
        case Family::cycle:
        case Family::grid:
        case Family::random_planar_triangulation:
        case Family::depth2_tree: return 0;
        case Family::toroidal_grid: return 2;
        case Family::projective_circulant: return 1;
        case Family::gadget_graft: return s.gadgets;
    }
    return std::nullopt;
}

inline bool is_planar_family(Family f) {
    return f == Family::path || f == Family::cycle || f == Family::grid || f == Family::random_planar_triangulation ||
           f == Family::depth2_tree;
}

inline std::string describe(const GeneratorSpec& s) {
    std::string base(family_name(s.family));
    std::string args;
    switch (s.family) {
        case Family::path:
        case Family::cycle: args = "n=" + std::to_string(s.n); break;
        case Family::grid:
        case Family::toroidal_grid: args = std::to_string(s.rows) + "x" + std::to_string(s.cols); break;
        case Family::random_planar_triangulation:
            args = "n=" + std::to_string(s.n) + ",p=" + std::to_string(s.delete_prob).substr(0, 4) +
                   ",seed=" + std::to_string(s.seed);
            break;
        case Family::projective_circulant: args = "g=" + std::to_string(s.genus); break;
        case Family::depth2_tree: args = "alpha=" + std::to_string(s.alpha); break;
        case Family::gadget_graft:
            args = s.host + (s.host == "grid" ? std::to_string(s.rows) + "x" + std::to_string(s.cols)
                                              : std::to_string(s.n)) +
                   "," + std::to_string(s.gadgets) + "x" + s.gadget + ",spacing=" + std::to_string(s.spacing) +
                   ",bridge=" + std::to_string(s.bridge);
            break;
    }
    if (s.shuffle) args += ",shuffled,seed=" + std::to_string(s.seed);
    return base + "(" + args + ")";
}

namespace detail {

/// Uniform integer in [0, bound) without the implementation-defined
/// distributions of <random>, so output is identical across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

inline double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

struct EdgeBuilder {
    std::size_t n = 0;
    std::vector<Edge> edges;

    Vertex add_vertex() { return static_cast<Vertex>(n++); }
    void link(Vertex u, Vertex v) { edges.push_back({std::min(u, v), std::max(u, v)}); }
    LabeledGraph build() const { return LabeledGraph(n, edges); }
};

inline void add_path(EdgeBuilder& b, int n) {
    for (int i = 0; i < n; ++i) b.add_vertex();
    for (int i = 0; i + 1 < n; ++i) b.link(i, i + 1);
}

inline void add_grid(EdgeBuilder& b, int rows, int cols, bool wrap) {
    const Vertex base = static_cast<Vertex>(b.n);
    for (int i = 0; i < rows * cols; ++i) b.add_vertex();
    auto at = [&](int r, int c) { return base + r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) b.link(at(r, c), at(r, c + 1));
            else if (wrap) b.link(at(r, c), at(r, 0));
            if (r + 1 < rows) b.link(at(r, c), at(r + 1, c));
            else if (wrap) b.link(at(r, c), at(0, c));
        }
}

/// Cycle on 2g+6 vertices with every pair of opposite vertices joined.
inline Vertex add_circulant(EdgeBuilder& b, int genus) {
    const int n = 2 * genus + 6;
    const Vertex base = static_cast<Vertex>(b.n);
    for (int i = 0; i < n; ++i) b.add_vertex();
    for (int i = 0; i < n; ++i) b.link(base + i, base + (i + 1) % n);
    for (int i = 0; i < n / 2; ++i) b.link(base + i, base + i + n / 2);
    return base;
}

inline Vertex add_clique(EdgeBuilder& b, int k) {
    const Vertex base = static_cast<Vertex>(b.n);
    for (int i = 0; i < k; ++i) b.add_vertex();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) b.link(base + i, base + j);
    return base;
}

inline LabeledGraph stacked_triangulation(const GeneratorSpec& s, std::mt19937_64& rng) {
    require(s.n >= 3, "randomPlanarTriangulation needs n >= 3");
    require(s.delete_prob >= 0.0 && s.delete_prob < 1.0, "delete_prob must lie in [0, 1)");
    EdgeBuilder b;
    for (int i = 0; i < 3; ++i) b.add_vertex();
    b.link(0, 1);
    b.link(1, 2);
    b.link(0, 2);
    struct Face { Vertex a, b, c; };
    std::vector<Face> faces{{0, 1, 2}, {0, 1, 2}};  // inner and outer face of the seed triangle
    for (int i = 3; i < s.n; ++i) {
        const Vertex v = b.add_vertex();
        const std::size_t fi = static_cast<std::size_t>(uniform_below(rng, faces.size()));
        const Face f = faces[fi];
        b.link(v, f.a);
        b.link(v, f.b);
        b.link(v, f.c);
        faces[fi] = {f.a, f.b, v};
        faces.push_back({f.b, f.c, v});
        faces.push_back({f.a, f.c, v});
    }
    if (s.delete_prob > 0.0) {
        std::vector<Edge> kept;
        std::sort(b.edges.begin(), b.edges.end());
        for (const Edge& e : b.edges)
            if (uniform_unit(rng) >= s.delete_prob) kept.push_back(e);
        b.edges = std::move(kept);
    }
    return b.build();
}

inline LabeledGraph gadget_graft(const GeneratorSpec& s) {
    require(s.gadgets >= 0, "gadgetGraft needs gadgets >= 0");
    require(s.bridge >= 1, "gadgetGraft needs bridge >= 1");
    require(s.gadget == "K5" || s.gadget == "circulant", "gadget must be K5 or circulant");
    EdgeBuilder b;
    std::vector<Vertex> anchors;
    if (s.host == "path" || s.host == "cycle") {
        require(s.n >= (s.host == "cycle" ? 3 : 1), "gadgetGraft host too small");
        add_path(b, s.n);
        if (s.host == "cycle") b.link(0, s.n - 1);
        for (int i = 0; i < s.gadgets; ++i) anchors.push_back(i * s.spacing);
        require(s.gadgets == 0 || (s.gadgets - 1) * s.spacing < s.n, "gadgets do not fit on the host");
    } else if (s.host == "grid") {
        require(s.rows >= 1 && s.cols >= 1, "gadgetGraft grid host needs rows, cols >= 1");
        add_grid(b, s.rows, s.cols, false);
        for (int i = 0; i < s.gadgets; ++i) anchors.push_back(i * s.spacing);
        require(s.gadgets == 0 || (s.gadgets - 1) * s.spacing < s.cols, "gadgets do not fit on the host row");
    } else {
        throw InputError("gadgetGraft host must be path, cycle or grid");
    }
    require(s.gadgets <= 1 || s.spacing >= 1, "gadgetGraft needs spacing >= 1 for several gadgets");
    for (Vertex anchor : anchors) {
        Vertex prev = anchor;
        for (int i = 1; i < s.bridge; ++i) {
            Vertex x = b.add_vertex();
            b.link(prev, x);
            prev = x;
        }
        Vertex entry = s.gadget == "K5" ? add_clique(b, 5) : add_circulant(b, s.genus);
        b.link(prev, entry);
    }
    return b.build();
}

}  // namespace detail

inline LabeledGraph generate(const GeneratorSpec& s) {
    using detail::require;
    std::mt19937_64 rng(s.seed);
    detail::EdgeBuilder b;
    LabeledGraph g;
    switch (s.family) {
        case Family::path:
            require(s.n >= 1, "path needs n >= 1");
            detail::add_path(b, s.n);
            g = b.build();
            break;
        case Family::cycle:
            require(s.n >= 3, "cycle needs n >= 3");
            detail::add_path(b, s.n);
            b.link(0, s.n - 1);
            g = b.build();
            break;
        case Family::grid:
            require(s.rows >= 1 && s.cols >= 1, "grid needs rows, cols >= 1");
            detail::add_grid(b, s.rows, s.cols, false);
            g = b.build();
            break;
        case Family::toroidal_grid:
            require(s.rows >= 3 && s.cols >= 3, "toroidalGrid needs rows, cols >= 3");
            detail::add_grid(b, s.rows, s.cols, true);
            g = b.build();
            break;
        case Family::random_planar_triangulation: g = detail::stacked_triangulation(s, rng); break;
        case Family::projective_circulant:
            require(s.genus >= 0, "projectiveCirculant needs g >= 0");
            detail::add_circulant(b, s.genus);
            g = b.build();
            break;
        case Family::depth2_tree: {
            require(s.alpha >= 0, "depth2Tree needs alpha >= 0");
            const int middle = s.alpha + 1, leaves = s.alpha * s.alpha + 3;
            const Vertex root = b.add_vertex();
            std::vector<Vertex> mids;
            for (int i = 0; i < middle; ++i) {
                mids.push_back(b.add_vertex());
                b.link(root, mids.back());
            }
            for (Vertex m : mids)
                for (int j = 0; j < leaves; ++j) b.link(m, b.add_vertex());
            g = b.build();
            break;
        }
        case Family::gadget_graft: g = detail::gadget_graft(s); break;
    }

    if (s.shuffle && g.size() > 1) {
        std::vector<Vertex> perm(g.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Vertex>(i);
        for (std::size_t i = perm.size() - 1; i > 0; --i)
            std::swap(perm[i], perm[detail::uniform_below(rng, i + 1)]);
        g = relabel(g, perm);
    }
    if (is_planar_family(s.family) && !is_planar(g))
        throw InternalError("generator produced a nonplanar " + describe(s));
    return g;
}

}  // namespace locdom
