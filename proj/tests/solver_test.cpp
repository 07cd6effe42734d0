#include <gtest/gtest.h>

#include <random>

#include "intcol/bounds.hpp"
#include "intcol/catalog.hpp"
#include "intcol/error.hpp"
#include "intcol/solver.hpp"
#include "test_graphs.hpp"

namespace intcol {
namespace {

using testing::complete;
using testing::cycle;
using testing::path;

// Feasible palette sets frozen from tests/oracle/interval_oracle.py, an
// independent Python backtracking reference.
struct Frozen {
    const char* name;
    Graph g;
    std::vector<int> feasible;
};

std::vector<Frozen> frozen_cases() {
    return {
        {"K2", Graph(2, {{0, 1}}), {1}},
        {"P3", path(3), {2}},
        {"K3", complete(3), {}},
        {"K1,3", testing::star(3), {3}},
        {"C4", cycle(4), {2, 3}},
        {"P4", path(4), {2, 3}},
        {"K4", complete(4), {3, 4}},
        {"K4-e", Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}), {3}},
        {"C5", cycle(5), {}},
        {"C6", cycle(6), {2, 3, 4}},
        {"K2,3", testing::complete_bipartite(2, 3), {4}},
    };
}

TEST(SearchOrder, BreadthFirstFromMaxDegree) {
    // Path 0-1-2-3-4 plus chord 2-4: vertex 2 has degree 3.
    const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}});
    EXPECT_EQ(search_edge_order(g), (std::vector<EdgeIndex>{1, 2, 3, 0, 4}));
    // Ties go to the lowest index.
    EXPECT_EQ(search_edge_order(cycle(4)), (std::vector<EdgeIndex>{0, 1, 2, 3}));
}

TEST(FindIntervalColoring, Examples) {
    const auto k3 = find_interval_coloring(complete(3), 3);
    EXPECT_EQ(k3.status, SolveStatus::Infeasible);
    EXPECT_FALSE(k3.witness);

    const auto c4 = find_interval_coloring(cycle(4), 3);
    ASSERT_EQ(c4.status, SolveStatus::Found);
    EXPECT_TRUE(validate_interval(cycle(4), *c4.witness).verdict);
    EXPECT_EQ(c4.witness->palette(), 3);

    const auto p3 = find_interval_coloring(path(3), 2);
    ASSERT_EQ(p3.status, SolveStatus::Found);
    EXPECT_EQ(p3.witness->colors()[0], 1);
    EXPECT_EQ(p3.witness->colors()[1], 2);
}

TEST(FindIntervalColoring, DomainErrors) {
    EXPECT_THROW((void)find_interval_coloring(Graph(4, {{0, 1}, {2, 3}}), 1), DomainError);
    EXPECT_THROW((void)find_interval_coloring(Graph(1, {}), 1), DomainError);
    EXPECT_THROW((void)find_interval_coloring(testing::star(3), 2), DomainError);  // below max degree
    EXPECT_THROW((void)find_interval_coloring(path(3), 3), DomainError);           // above |E|
}

TEST(ComputeW, Examples) {
    const auto k2 = compute_W(Graph(2, {{0, 1}}));
    EXPECT_EQ(k2.W, 1);
    EXPECT_EQ(k2.cutoff, 1);

    const auto star = compute_W(testing::star(3));
    EXPECT_EQ(star.W, 3);

    const auto k4 = compute_W(complete(4));
    EXPECT_EQ(k4.status, SolveStatus::Found);
    EXPECT_EQ(k4.W, 4);
    EXPECT_EQ(k4.cutoff, 4);
    EXPECT_EQ(k4.interval_colorable, true);
    ASSERT_TRUE(k4.witness);
    EXPECT_TRUE(validate_interval(complete(4), *k4.witness).verdict);

    const auto k3 = compute_W(complete(3));
    EXPECT_EQ(k3.status, SolveStatus::Infeasible);
    EXPECT_EQ(k3.interval_colorable, false);
    EXPECT_FALSE(k3.W);
}

TEST(ComputeW, K4ReferenceWitnessIsValid) {
    // a..d = 0..3: ab=2 ac=1 ad=3 bc=3 bd=4 cd=2 in canonical edge order.
    EXPECT_TRUE(validate_interval(complete(4), EdgeColoring(4, {2, 1, 3, 3, 4, 2})).verdict);
    EXPECT_EQ(find_interval_coloring(complete(4), 4).status, SolveStatus::Found);
    // t = 5 lies above the cutoff; the brute force oracle refutes it directly.
    EXPECT_EQ(brute_force_W(complete(4), 6).feasible_t_set, (std::vector<int>{3, 4}));
}

TEST(ComputeW, FrozenReferenceValues) {
    for (const auto& [name, g, feasible] : frozen_cases()) {
        SCOPED_TRACE(name);
        const auto w = compute_W(g);
        if (feasible.empty()) {
            EXPECT_EQ(w.interval_colorable, false);
        } else {
            EXPECT_EQ(w.W, feasible.back());
        }
        EXPECT_EQ(compute_feasible_palettes(g).feasible_t_set, feasible);
        if (g.size() <= kBruteForceMaxEdges)
            EXPECT_EQ(brute_force_W(g, std::min<int>(kBruteForceMaxPalette, static_cast<int>(g.size()))).feasible_t_set,
                      feasible);
    }
}

TEST(ComputeW, OverrideLowersTheCutoff) {
    SearchLimits limits;
    limits.t_override = 3;
    const auto s = compute_W(complete(4), limits);
    EXPECT_EQ(s.cutoff, 3);
    EXPECT_EQ(s.W, 3);
    limits.t_override = 2;
    EXPECT_THROW((void)compute_W(complete(4), limits), DomainError);
}

TEST(ComputeW, TheoremFreeCutoffAgrees) {
    SearchLimits limits;
    limits.theorem_cutoff = false;
    for (const auto& [name, g, feasible] : frozen_cases()) {
        SCOPED_TRACE(name);
        const auto s = compute_feasible_palettes(g, limits);
        EXPECT_EQ(s.cutoff, static_cast<int>(g.size()));
        EXPECT_EQ(s.feasible_t_set, feasible);
    }
}

TEST(ComputeW, NodeLimitAborts) {
    SearchLimits limits;
    limits.node_limit = 50;
    const auto s = compute_W(testing::petersen(), limits);
    EXPECT_EQ(s.status, SolveStatus::Aborted);
    EXPECT_LE(s.nodes_expanded, 50u);
    EXPECT_FALSE(s.witness);
    ASSERT_TRUE(s.w_upper_bound);
    EXPECT_LE(*s.w_upper_bound, *s.cutoff);

    const auto f = find_interval_coloring(testing::petersen(), 4, limits);
    EXPECT_EQ(f.status, SolveStatus::Aborted);
    EXPECT_LE(f.nodes_expanded, 50u);
}

TEST(ComputeW, Deterministic) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = testing::random_connected(rng, 4 + trial % 4, 0.35);
        const auto a = compute_W(g);
        const auto b = compute_W(g);
        EXPECT_EQ(a.status, b.status);
        EXPECT_EQ(a.W, b.W);
        EXPECT_EQ(a.witness, b.witness);
        EXPECT_EQ(a.nodes_expanded, b.nodes_expanded);
    }
}

TEST(ComputeW, WitnessesRespectBounds) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        const auto g = testing::random_connected(rng, 3 + trial % 6, 0.3);
        const auto s = compute_W(g);
        if (s.status != SolveStatus::Found) continue;
        EXPECT_TRUE(validate_interval(g, *s.witness).verdict);
        EXPECT_GE(*s.W, g.max_degree());
        EXPECT_LE(*s.W, best_upper_bound(g, classify(g), false));
        EXPECT_LE(*s.W, 2 * g.order() - 3);
    }
}

TEST(BruteForce, Examples) {
    const auto k3 = brute_force_W(complete(3), 4);
    EXPECT_EQ(k3.interval_colorable, false);
    EXPECT_EQ(k3.status, SolveStatus::Infeasible);

    const auto p3 = brute_force_W(path(3), 3);
    EXPECT_EQ(p3.W, 2);
    EXPECT_EQ(p3.feasible_t_set, (std::vector<int>{2}));

    const auto c4 = brute_force_W(cycle(4), 4);
    EXPECT_EQ(c4.W, 3);
    EXPECT_EQ(c4.feasible_t_set, (std::vector<int>{2, 3}));
    EXPECT_TRUE(validate_interval(cycle(4), *c4.witness).verdict);
}

TEST(BruteForce, Guards) {
    EXPECT_THROW((void)brute_force_W(complete(5), 9), DomainError);
    EXPECT_THROW((void)brute_force_W(complete(5), 0), DomainError);
    EXPECT_THROW((void)brute_force_W(cycle(11), 3), DomainError);
    EXPECT_NO_THROW((void)brute_force_W(cycle(10), 1));
    EXPECT_EQ(brute_force_W(Graph(3, {}), 3).interval_colorable, false);
}

// Every palette the search refutes is refuted by exhaustive enumeration too.
TEST(OracleEquivalence, CatalogUpToFourVertices) {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& g : generate_connected_catalog(n)) {
            SCOPED_TRACE(write_graph6(g));
            const auto t_max = std::min<int>(kBruteForceMaxPalette, static_cast<int>(g.size()));
            const auto oracle = brute_force_W(g, t_max);
            const auto fast = compute_feasible_palettes(g);
            EXPECT_EQ(fast.interval_colorable, oracle.interval_colorable);
            EXPECT_EQ(fast.W, oracle.W);
            EXPECT_EQ(fast.feasible_t_set, oracle.feasible_t_set);
            EXPECT_EQ(compute_W(g).W, oracle.W);
        }
    }
}

}  // namespace
}  // namespace intcol
