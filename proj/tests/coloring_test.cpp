#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "intcol/coloring.hpp"
#include "intcol/error.hpp"
#include "intcol/solver.hpp"
#include "test_graphs.hpp"

namespace intcol {
namespace {

using testing::complete;
using testing::cycle;
using testing::path;

// C4 in canonical edge order (0,1),(0,3),(1,2),(2,3); the cycle-order colors
// (1,2,3,2) on 0-1, 1-2, 2-3, 3-0 become (1,2,2,3).
EdgeColoring c4_cycle_coloring() { return EdgeColoring(3, {1, 2, 2, 3}); }

TEST(EdgeColoring, RejectsColorsOutsidePalette) {
    EXPECT_THROW(EdgeColoring(0, {}), DomainError);
    EXPECT_THROW(EdgeColoring(2, {1, 3}), DomainError);
    EXPECT_THROW(EdgeColoring(2, {0}), DomainError);
    EXPECT_NO_THROW(EdgeColoring(2, {2, 1}));
}

TEST(Spectrum, Examples) {
    const auto p3 = path(3);
    const EdgeColoring c(2, {1, 2});
    EXPECT_EQ(spectrum(p3, c, 1), (std::vector<Color>{1, 2}));
    EXPECT_EQ(spectrum(p3, c, 0), (std::vector<Color>{1}));
    EXPECT_EQ(spectrum(complete(3), EdgeColoring(3, {1, 2, 3}), 2), (std::vector<Color>{2, 3}));
}

TEST(Spectrum, RawMultisetKeepsCollisions) {
    const auto p3 = path(3);
    const EdgeColoring c(2, {2, 2});
    EXPECT_EQ(incident_colors(p3, c, 1), (std::vector<Color>{2, 2}));
    EXPECT_EQ(spectrum(p3, c, 1), (std::vector<Color>{2}));
}

TEST(Spectrum, Errors) {
    const auto p3 = path(3);
    EXPECT_THROW((void)spectrum(p3, EdgeColoring(2, {1, 2}), 3), DomainError);
    EXPECT_THROW((void)spectrum(p3, EdgeColoring(2, {1}), 0), DomainError);
}

TEST(Spectrum, Report) {
    const auto r = spectrum_report(Graph(3, {{0, 1}}), EdgeColoring(4, {3}));
    ASSERT_EQ(r.vertices.size(), 3u);
    EXPECT_EQ(r.vertices[0].min, 3);
    EXPECT_EQ(r.vertices[1].max, 3);
    EXPECT_TRUE(r.vertices[2].colors.empty());
    EXPECT_EQ(r.used, (std::vector<Color>{3}));
}

TEST(Validate, CycleOfFourIsValid) {
    const auto r = validate_interval(cycle(4), c4_cycle_coloring());
    EXPECT_TRUE(r.verdict);
    EXPECT_TRUE(r.failures.empty());
}

TEST(Validate, TriangleFailsIntervalCondition) {
    const auto r = validate_interval(complete(3), EdgeColoring(3, {1, 2, 3}));
    EXPECT_FALSE(r.verdict);
    EXPECT_TRUE(r.proper);
    EXPECT_TRUE(r.surjective);
    EXPECT_FALSE(r.interval_at_every_vertex);
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_EQ(r.failures[0].kind, FailureKind::NotInterval);
    EXPECT_EQ(r.failures[0].index, 1);  // edges (0,1)=1 and (1,2)=3
}

TEST(Validate, UnusedColorIsReported) {
    const auto r = validate_interval(path(3), EdgeColoring(3, {1, 2}));
    EXPECT_FALSE(r.verdict);
    EXPECT_FALSE(r.surjective);
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_EQ(r.failures[0].kind, FailureKind::UnusedColor);
    EXPECT_EQ(r.failures[0].index, 3);
}

TEST(Validate, AccumulatesEveryFailure) {
    // Star K1,3 with colors 1,1,4 of palette 5: repeat at the center, gap, and
    // colors 2,3,5 unused.
    const auto r = validate_interval(testing::star(3), EdgeColoring(5, {1, 1, 4}));
    EXPECT_FALSE(r.proper);
    EXPECT_FALSE(r.interval_at_every_vertex);
    EXPECT_FALSE(r.surjective);
    const auto count = [&](FailureKind k) {
        return std::count_if(r.failures.begin(), r.failures.end(), [k](const auto& f) { return f.kind == k; });
    };
    EXPECT_EQ(count(FailureKind::RepeatedColor), 1);
    EXPECT_EQ(count(FailureKind::NotInterval), 1);
    EXPECT_EQ(count(FailureKind::UnusedColor), 3);
}

TEST(Validate, IsolatedVerticesAreVacuous) {
    EXPECT_TRUE(validate_interval(Graph(4, {{1, 2}}), EdgeColoring(1, {1})).verdict);
}

TEST(Validate, SizeMismatchIsAnError) {
    EXPECT_THROW((void)validate_interval(path(3), EdgeColoring(2, {1})), DomainError);
}

// Properties over every witness the solver finds on random small graphs.
TEST(Validate, PropertiesOfValidColorings) {
    std::mt19937 rng(3);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = testing::random_connected(rng, 3 + trial % 5, 0.3);
        const auto s = compute_W(g);
        if (!s.witness) continue;
        const auto& c = *s.witness;
        ASSERT_TRUE(validate_interval(g, c).verdict);
        ++checked;

        EXPECT_LE(static_cast<std::size_t>(c.palette()), g.size());
        EXPECT_GE(c.palette(), g.max_degree());
        for (Vertex v = 0; v < g.order(); ++v) {
            const auto s_v = spectrum(g, c, v);
            EXPECT_EQ(s_v.back() - s_v.front() + 1, g.degree(v));
        }

        // Relabeling graph and coloring together preserves the verdict.
        std::vector<int> perm(static_cast<std::size_t>(g.order()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto h = testing::relabeled(g, perm);
        std::vector<Color> moved(h.size());
        for (EdgeIndex e = 0; e < g.size(); ++e) {
            const auto [u, v] = g.edge(e);
            moved[*h.edge_index(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])] = c[e];
        }
        EXPECT_TRUE(validate_interval(h, EdgeColoring(c.palette(), moved)).verdict);

        // Breaking one edge's color breaks the verdict whenever it changes S.
        std::vector<Color> broken(c.colors().begin(), c.colors().end());
        broken[0] = broken[0] == 1 ? 2 : 1;
        if (c.palette() >= 2) {
            const auto r = validate_interval(g, EdgeColoring(c.palette(), broken));
            EXPECT_EQ(r.verdict, r.failures.empty());
        }
    }
    EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace intcol
