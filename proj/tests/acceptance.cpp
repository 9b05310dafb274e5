// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "locdom/algo_generic.hpp"
#include "locdom/algo_planar.hpp"
#include "locdom/generators.hpp"
#include "locdom/workbench.hpp"
#include "support/oracles.hpp"

#ifndef LOCDOM_SUITE_DIR
#error "LOCDOM_SUITE_DIR must point at samples/suites"
#endif

using namespace locdom;
namespace t = locdom::testing;

namespace {

struct CorpusGraph {
    GeneratorSpec spec;
    std::string name;
    LabeledGraph g;
    bool planar_family = false;
    // Filled by criterion 1 and reused later.
    PlanarRun a;
    GenericRun b;
};

GeneratorSpec make(Family f) {
    GeneratorSpec s;
    s.family = f;
    return s;
}

std::vector<GeneratorSpec> corpus_specs() {
    std::vector<GeneratorSpec> out;
    auto add = [&](GeneratorSpec s) { out.push_back(s); };

    for (int n : {1, 2, 5, 9, 10, 25, 50, 100, 200, 400}) {
        auto s = make(Family::path);
        s.n = n;
        add(s);
    }
    for (int n : {3, 4, 6, 8, 9, 10, 25, 50, 100, 200, 400}) {
        auto s = make(Family::cycle);
        s.n = n;
        add(s);
    }
    for (auto [r, c] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {3, 3}, {2, 4}, {4, 5}, {5, 5}, {6, 6}, {8, 8},
                                                        {10, 10}, {15, 15}, {20, 20}, {10, 40}, {4, 100}}) {
        auto s = make(Family::grid);
        s.rows = r;
        s.cols = c;
        add(s);
    }
    for (auto [r, c] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 4}, {3, 8}, {4, 6}, {5, 5}, {5, 7}, {6, 6},
                                                        {6, 8}, {7, 7}, {8, 8}, {9, 9}, {10, 10}}) {
        auto s = make(Family::toroidal_grid);
        s.rows = r;
        s.cols = c;
        add(s);
    }
    // Triangulations: many small ones (exact optima) and a few larger ones.
    std::uint64_t seed = 1000;
    for (int n = 4; n <= 25; ++n)
        for (double p : {0.0, 0.3, 0.55}) {
            auto s = make(Family::random_planar_triangulation);
            s.n = n;
            s.delete_prob = p;
            s.seed = seed++;
            s.shuffle = n % 3 == 0;
            add(s);
        }
    for (int n = 6; n <= 40; ++n) {
        auto s = make(Family::random_planar_triangulation);
        s.n = n;
        s.delete_prob = 0.15;
        s.seed = seed++;
        s.shuffle = true;
        add(s);
    }
    for (int n : {30, 40, 50, 60, 80, 100})
        for (double p : {0.0, 0.4}) {
            auto s = make(Family::random_planar_triangulation);
            s.n = n;
            s.delete_prob = p;
            s.seed = seed++;
            add(s);
        }
    for (int g = 0; g <= 20; ++g) {
        auto s = make(Family::projective_circulant);
        s.genus = g;
        add(s);
    }
    for (int alpha = 0; alpha <= 5; ++alpha) {
        auto s = make(Family::depth2_tree);
        s.alpha = alpha;
        add(s);
    }
    struct Graft {
        std::string host;
        int n, rows, cols, gadgets, spacing, bridge;
        std::string gadget;
        int genus;
        bool shuffle;
    };
    const std::vector<Graft> grafts{
        {"path", 1, 0, 0, 1, 0, 1, "K5", 1, false},       {"path", 6, 0, 0, 1, 0, 1, "K5", 1, false},
        {"path", 12, 0, 0, 1, 1, 1, "K5", 1, false},      {"path", 12, 0, 0, 2, 11, 1, "K5", 1, true},
        {"path", 20, 0, 0, 0, 0, 1, "K5", 1, false},      {"path", 40, 0, 0, 2, 39, 1, "K5", 1, false},
        {"path", 40, 0, 0, 2, 20, 3, "K5", 1, false},     {"path", 60, 0, 0, 3, 25, 2, "circulant", 1, false},
        {"path", 100, 0, 0, 2, 60, 1, "circulant", 2, true}, {"path", 120, 0, 0, 3, 50, 2, "K5", 1, false},
        {"path", 200, 0, 0, 4, 60, 1, "K5", 1, false},    {"path", 300, 0, 0, 4, 90, 3, "K5", 1, false},
        {"path", 340, 0, 0, 5, 80, 1, "circulant", 1, false}, {"cycle", 30, 0, 0, 1, 0, 1, "K5", 1, false},
        {"cycle", 90, 0, 0, 2, 45, 1, "circulant", 2, false}, {"cycle", 150, 0, 0, 3, 50, 4, "K5", 1, true},
        {"cycle", 60, 0, 0, 2, 3, 1, "K5", 1, false},     {"grid", 0, 3, 8, 1, 0, 1, "K5", 1, false},
        {"grid", 0, 4, 12, 2, 11, 1, "K5", 1, false},     {"grid", 0, 3, 20, 2, 19, 2, "circulant", 1, false},
        {"grid", 0, 5, 10, 2, 4, 1, "K5", 1, false},      {"path", 80, 0, 0, 8, 10, 1, "K5", 1, false},
        {"path", 50, 0, 0, 1, 0, 6, "circulant", 3, false}, {"cycle", 40, 0, 0, 4, 10, 1, "circulant", 1, false},
    };
    for (std::size_t i = 0; i < grafts.size(); ++i) {
        const Graft& x = grafts[i];
        auto s = make(Family::gadget_graft);
        s.host = x.host;
        s.n = x.n;
        s.rows = x.rows;
        s.cols = x.cols;
        s.gadgets = x.gadgets;
        s.spacing = x.spacing;
        s.bridge = x.bridge;
        s.gadget = x.gadget;
        s.genus = x.genus;
        s.shuffle = x.shuffle;
        s.seed = 7000 + i;
        add(s);
    }
    return out;
}

struct Report {
    int failed = 0;
    void line(int id, const std::string& title, bool ok, const std::string& detail) {
        std::printf("%s  %2d %-28s %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failed;
    }
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

BConfig b_config() { return BConfig{}; }  // A as sub-algorithm, planar class, linear:1, d = 2

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    Report report;
    const BConfig cfg = b_config();
    const int T = cfg.error_radius();

    std::vector<CorpusGraph> corpus;
    std::size_t max_n = 0;
    for (const auto& spec : corpus_specs()) {
        CorpusGraph c;
        c.spec = spec;
        c.name = describe(spec);
        c.g = generate(spec);
        c.planar_family = is_planar_family(spec.family) || (spec.family == Family::gadget_graft && spec.gadgets == 0);
        max_n = std::max(max_n, c.g.size());
        corpus.push_back(std::move(c));
    }
    std::printf("corpus: %zu graphs, n <= %zu, T = %d\n", corpus.size(), max_n, T);

    // 1. Domination validity.
    {
        int failures = 0;
        std::vector<std::string> families;
        for (auto& c : corpus) {
            const auto t0 = std::chrono::steady_clock::now();
            c.a = algorithm_a(c.g);
            c.b = algorithm_b(c.g, cfg);
            const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (dt > 2.0) std::printf("  slow: %s took %.1fs\n", c.name.c_str(), dt);
            const VertexSet all = VertexSet::range(c.g.size());
            if (!verify_domination(c.g, c.a.output, all)) {
                ++failures;
                std::printf("  A does not dominate %s\n", c.name.c_str());
            }
            if (!verify_domination(c.g, c.b.output, all)) {
                ++failures;
                std::printf("  B does not dominate %s\n", c.name.c_str());
            }
            std::string fam(family_name(c.spec.family));
            if (std::find(families.begin(), families.end(), fam) == families.end()) families.push_back(fam);
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.line(1, "domination validity", failures == 0 && corpus.size() >= 200 && families.size() == 8,
                    fmt("%d failures over %zu graphs, %zu families, n <= %zu (%.1fs)", failures, corpus.size(),
                        families.size(), max_n, secs));
    }

    // 2. Round accounting.
    {
        int bad = 0;
        for (const auto& c : corpus) {
            if (c.a.ledger.total() != 5) ++bad;
            const int delta = measure_delta(c.g, c.b.errors.errors);
            if (c.b.ledger.total() != T + delta + 2) ++bad;
        }
        report.line(2, "round accounting", bad == 0,
                    fmt("%d mismatches (A = 5, B = T+delta+2) over %zu graphs", bad, corpus.size()));
    }

    // 3. Uniformity fuzz on planar graphs with n <= 25.
    {
        std::mt19937_64 rng(303);
        int pairs = 0, violations = 0;
        std::uint64_t seed = 90000;
        while (pairs < 600) {
            GeneratorSpec s = make(Family::random_planar_triangulation);
            s.n = 5 + static_cast<int>(rng() % 21);
            s.delete_prob = 0.1 * static_cast<double>(rng() % 7);
            s.seed = seed++;
            s.shuffle = rng() % 2;
            auto g = generate(s);
            auto out = algorithm_a(g).output;
            for (int i = 0; i < 10; ++i, ++pairs) {
                auto S = t::random_subset(g.size(), rng);
                if (!check_uniformity(g, out, S, kPlanarUniformity, kPlanarRatio).holds) ++violations;
            }
        }
        report.line(3, "uniformity fuzz", violations == 0 && pairs >= 500,
                    fmt("%d violations of |A(G)&S| <= 302*MDS(G,N^4[S]) over %d pairs", violations, pairs));
    }

    // 4. Depth-2 tree fixture.
    {
        bool ok = true;
        std::string detail;
        for (int alpha : {2, 3}) {
            auto s = make(Family::depth2_tree);
            s.alpha = alpha;
            auto g = generate(s);
            const std::size_t mds = mds_size(g, VertexSet::range(g.size()));
            VertexSet middles;
            for (Vertex v : g.neighbors(0)) middles.insert(v);
            const std::size_t mds_s = mds_size(g, neighborhood(g, middles, 0));
            ok = ok && mds == static_cast<std::size_t>(alpha + 1) && mds_s == 1;
            detail += fmt("alpha=%d: MDS=%zu, MDS(G,S)=%zu; ", alpha, mds, mds_s);
        }
        report.line(4, "depth-2 tree fixture", ok, detail);
    }

    // 5. Error-free reduction on planar graphs.
    {
        int bad = 0, checked = 0;
        for (const auto& c : corpus) {
            if (!c.planar_family) continue;
            ++checked;
            if (!c.b.errors.errors.empty() || !c.b.repair.empty() || c.b.output != c.a.output) {
                ++bad;
                std::printf("  reduction fails on %s\n", c.name.c_str());
            }
        }
        report.line(5, "error-free reduction", bad == 0 && checked > 0,
                    fmt("%d of %d planar graphs differ (X, S' empty and B = A required)", bad, checked));
    }

    // 6. Error-set monotonicity on gadgetGraft.
    {
        int bad = 0, checked = 0;
        for (const auto& c : corpus) {
            if (c.spec.family != Family::gadget_graft) continue;
            ++checked;
            auto x5 = error_set(c.g, planar_class(), 5).errors;
            auto x10 = error_set(c.g, planar_class(), 10).errors;
            auto x15 = error_set(c.g, planar_class(), 15).errors;
            if (!x5.is_subset_of(x10) || !x10.is_subset_of(x15)) ++bad;
        }
        report.line(6, "error-set monotonicity", bad == 0 && checked > 0,
                    fmt("%d of %d gadgetGraft graphs violate X_5 <= X_10 <= X_15", bad, checked));
    }

    // 7. delta < g(2T+5); tori and circulants counted with g = 1.
    {
        int bad = 0, checked = 0, worst_num = 0, worst_den = 1;
        for (const auto& c : corpus) {
            int g_hat = 0;
            if (c.spec.family == Family::toroidal_grid || c.spec.family == Family::projective_circulant) g_hat = 1;
            else if (c.spec.family == Family::gadget_graft && c.spec.gadgets > 0) g_hat = c.spec.gadgets;
            else continue;
            ++checked;
            const int delta = measure_delta(c.g, c.b.errors.errors);
            const int bound = g_hat * (2 * T + 5);
            if (delta >= bound) {
                ++bad;
                std::printf("  delta=%d >= %d on %s\n", delta, bound, c.name.c_str());
            }
            if (delta * worst_den > worst_num * bound) {
                worst_num = delta;
                worst_den = bound;
            }
        }
        report.line(7, "delta bound", bad == 0 && checked > 0,
                    fmt("%d violations over %d graphs (largest delta/bound %d/%d)", bad, checked, worst_num, worst_den));
    }

    // 8. Oracle soundness.
    {
        std::mt19937_64 rng(808);
        int bad = 0;
        for (int i = 0; i < 100; ++i) {
            auto g = t::random_gnp(1 + i % 12, 0.1 + 0.04 * (i % 10), rng);
            if (mds_size(g, VertexSet::range(g.size())) != t::brute_mds(g, VertexSet::range(g.size()))) ++bad;
        }
        const VertexSet p4 = best_minimum_dominating_set(t::path_graph(4), VertexSet::range(4));
        const VertexSet star = best_minimum_dominating_set(t::star_graph(5), VertexSet::range(6));
        const bool fixtures = p4 == VertexSet{1, 2} && star == VertexSet{0};
        report.line(8, "oracle soundness", bad == 0 && fixtures,
                    fmt("%d/100 disagreements with power set; best(P4)=%s, best(star)=%s", bad,
                        to_string(p4).c_str(), to_string(star).c_str()));
    }

    // 9. Executor equivalence.
    {
        int bad = 0, pairs = 0;
        for (const auto& c : corpus) {
            auto nomination = planar_nomination();
            auto errors = error_detection(planar_class(), T);
            ++pairs;
            if (run_by_views(c.g, nomination) != run_by_messages(c.g, nomination).decisions) ++bad;
            ++pairs;
            if (run_by_views(c.g, errors) != run_by_messages(c.g, errors).decisions) ++bad;
        }
        report.line(9, "executor equivalence", bad == 0,
                    fmt("%d of %d (graph, algorithm) pairs differ", bad, pairs));
    }

    // 10. Planarity tester.
    {
        int bad = 0, small = 0;
        auto check = [&](const LabeledGraph& g) {
            if (g.size() > 9) return;
            ++small;
            if (is_planar(g) != t::kuratowski_planar(g)) ++bad;
        };
        for (const auto& c : corpus) check(c.g);
        std::mt19937_64 rng(1010);
        for (int i = 0; i < 150; ++i) check(t::random_gnp(5 + i % 5, 0.3 + 0.05 * (i % 10), rng));
        bool known = !is_planar(t::complete_graph(5)) && !is_planar(t::complete_bipartite(3, 3));
        int misclassified = 0;
        for (const auto& c : corpus) {
            if (c.spec.family == Family::projective_circulant && is_planar(c.g)) ++misclassified;
            if (c.planar_family && !is_planar(c.g)) ++misclassified;
        }
        report.line(10, "planarity tester", bad == 0 && known && misclassified == 0,
                    fmt("%d of %d small graphs disagree with Kuratowski search; %d family misclassifications", bad,
                        small, misclassified));
    }

    // 11. Realized ratio on the planar suite.
    {
        std::ifstream in(std::string(LOCDOM_SUITE_DIR) + "/planar.json");
        Suite suite = json::parse(in).get<Suite>();
        auto result = experiment(suite);
        const AlgorithmAggregate& a = result.aggregates.at(0);
        bool exact_only = true;
        for (const auto& row : result.rows)
            exact_only = exact_only && row.report && row.report->optimum_kind == "exact" && row.report->n <= 25;
        report.line(11, "realized ratio (planar)",
                    a.failures == 0 && exact_only && a.exact_rows == a.rows && a.max_ratio <= kPlanarRatio,
                    fmt("max %.4f, mean %.4f over %zu graphs with exact optima (bound 302)", a.max_ratio,
                        a.mean_ratio, a.exact_rows));
    }

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s: %d of 11 criteria failed (%.1fs)\n", report.failed ? "FAILED" : "OK", report.failed, secs);
    return report.failed ? 1 : 0;
}
