#include <gtest/gtest.h>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <numeric>
#include <random>

#include "locdom/generators.hpp"
#include "locdom/planarity.hpp"
#include "support/oracles.hpp"

using namespace locdom;
using namespace locdom::testing;

namespace {

bool boost_planar(const LabeledGraph& g) {
    using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BG bg(g.size());
    for (const Edge& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

LabeledGraph from_spec(GeneratorSpec s) { return generate(s); }

// A planar triangulation plus a few random chords; often nonplanar.
LabeledGraph perturbed_triangulation(int n, int extra, std::uint64_t seed, std::mt19937_64& rng) {
    GeneratorSpec s;
    s.family = Family::random_planar_triangulation;
    s.n = n;
    s.delete_prob = 0.3;
    s.seed = seed;
    auto edges = generate(s).edges();
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < extra; ++i) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        Edge e{std::min(u, v), std::max(u, v)};
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
    return LabeledGraph(static_cast<std::size_t>(n), edges);
}

}  // namespace

TEST(Planarity, KnownGraphs) {
    EXPECT_TRUE(is_planar(LabeledGraph{}));
    EXPECT_TRUE(is_planar(complete_graph(4)));
    EXPECT_FALSE(is_planar(complete_graph(5)));
    EXPECT_FALSE(is_planar(complete_bipartite(3, 3)));
    EXPECT_TRUE(is_planar(complete_bipartite(2, 7)));
    GeneratorSpec grid;
    grid.family = Family::grid;
    grid.rows = grid.cols = 10;
    EXPECT_TRUE(is_planar(from_spec(grid)));
    GeneratorSpec circ;
    circ.family = Family::projective_circulant;
    circ.genus = 1;
    EXPECT_FALSE(is_planar(from_spec(circ)));
    GeneratorSpec torus;
    torus.family = Family::toroidal_grid;
    torus.rows = torus.cols = 5;
    EXPECT_FALSE(is_planar(from_spec(torus)));
}

TEST(Planarity, PetersenGraphIsNonplanar) {
    LabeledGraph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                               {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
    EXPECT_FALSE(is_planar(petersen));
}

TEST(Planarity, SubdividedK5AndDisconnectedUnions) {
    // K5 with every edge subdivided once.
    std::vector<Edge> e;
    Vertex next = 5;
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v) {
            e.push_back({u, next});
            e.push_back({v, next});
            ++next;
        }
    EXPECT_FALSE(is_planar(LabeledGraph(15, e)));
    // K4 plus a disjoint K3,3 shifted by 4.
    std::vector<Edge> u = complete_graph(4).edges();
    for (const Edge& x : complete_bipartite(3, 3).edges()) u.push_back({x.u + 4, x.v + 4});
    EXPECT_FALSE(is_planar(LabeledGraph(10, u)));
}

TEST(Planarity, AgreesWithKuratowskiSearchOnSmallGraphs) {
    std::mt19937_64 rng(2024);
    int planar = 0, nonplanar = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 5 + trial % 5;
        auto g = random_gnp(n, 0.35 + 0.05 * (trial % 9), rng);
        const bool expect = kuratowski_planar(g);
        (expect ? planar : nonplanar)++;
        EXPECT_EQ(is_planar(g), expect) << "trial " << trial;
    }
    EXPECT_GT(planar, 50);
    EXPECT_GT(nonplanar, 50);
}

TEST(Planarity, AgreesWithBoyerMyrvoldOnLargerGraphs) {
    std::mt19937_64 rng(77);
    int nonplanar = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto g = perturbed_triangulation(10 + trial % 60, trial % 4, static_cast<std::uint64_t>(trial), rng);
        const bool expect = boost_planar(g);
        nonplanar += !expect;
        EXPECT_EQ(is_planar(g), expect) << "trial " << trial;
    }
    EXPECT_GT(nonplanar, 30);
}

TEST(Planarity, PlanarGraphsRespectEdgeBound) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_gnp(3 + trial % 10, 0.5, rng);
        if (is_planar(g) && g.size() >= 3) {
            EXPECT_LE(g.edge_count(), 3 * g.size() - 6);
        }
    }
}

TEST(Planarity, HereditaryUnderDeletions) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = perturbed_triangulation(25, 0, static_cast<std::uint64_t>(trial), rng);
        ASSERT_TRUE(is_planar(g));
        auto edges = g.edges();
        for (int step = 0; step < 5 && !edges.empty(); ++step) {
            edges.erase(edges.begin() + static_cast<long>(rng() % edges.size()));
            EXPECT_TRUE(is_planar(LabeledGraph(g.size(), edges)));
        }
        auto sub = induced_subgraph(g, random_subset(g.size(), rng));
        EXPECT_TRUE(is_planar(sub.graph));
    }
}

TEST(Planarity, StableUnderRelabeling) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = perturbed_triangulation(20, trial % 3, static_cast<std::uint64_t>(trial), rng);
        std::vector<Vertex> perm(g.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(is_planar(g), is_planar(relabel(g, perm)));
    }
}

TEST(ClassPredicate, PlanarClass) {
    auto c = planar_class();
    EXPECT_EQ(c.name, "planar");
    EXPECT_TRUE(c.hereditary);
    EXPECT_TRUE(c(complete_graph(4)));
    EXPECT_FALSE(c(complete_graph(5)));
}
