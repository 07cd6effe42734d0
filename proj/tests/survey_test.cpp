#include <gtest/gtest.h>

#include <sstream>

#include "intcol/catalog.hpp"
#include "intcol/survey.hpp"
#include "test_graphs.hpp"

namespace intcol {
namespace {

std::string csv(const std::vector<SurveyRecord>& records) {
    std::ostringstream ss;
    write_survey_csv(ss, records);
    return ss.str();
}

TEST(Survey, SmallInputs) {
    SurveyOptions opts;
    opts.with_doubling = true;
    const std::vector<Graph> graphs{Graph(2, {{0, 1}}), testing::path(3), testing::complete(3)};
    const auto records = run_survey(graphs, opts);
    ASSERT_EQ(records.size(), 3u);

    EXPECT_EQ(records[0].W, 1);
    EXPECT_EQ(records[0].slack(), 0);
    EXPECT_EQ(records[0].doubling_ok, true);

    EXPECT_EQ(records[1].W, 2);
    EXPECT_EQ(records[1].slack(), 0);
    EXPECT_EQ(records[1].doubling_ok, true);

    EXPECT_EQ(records[2].outcome, SurveyOutcome::NotColorable);
    EXPECT_FALSE(records[2].slack());
    EXPECT_FALSE(records[2].doubling_ok);

    EXPECT_EQ(csv(records),
              "graph6,n,m,delta,connected,bipartite,regular_r,triangle_free,W,best_bound,slack,tight_theorems,doubling_ok\n"
              "A_,2,1,1,true,true,1,true,1,1,0,T1_triangle_free;T3_general,true\n"
              "Bg,3,2,2,true,true,,true,2,2,0,T1_triangle_free;T4_general_n3,true\n"
              "Bw,3,3,2,true,false,2,false,not-colorable,2,,,\n");
}

TEST(Survey, EmptyInput) {
    EXPECT_TRUE(run_survey(std::vector<Graph>{}, {}).empty());
    EXPECT_EQ(csv({}), survey_csv_header() + "\n");
}

TEST(Survey, CatalogOfFour) {
    SurveyOptions opts;
    opts.with_doubling = true;
    const auto records = run_survey(generate_connected_catalog(4), opts);
    ASSERT_EQ(records.size(), 6u);
    for (const auto& r : records) {
        EXPECT_FALSE(r.defect) << r.message;
        if (r.outcome == SurveyOutcome::Computed) {
            EXPECT_GE(*r.slack(), 0);
            EXPECT_GE(*r.W, r.delta);
            EXPECT_EQ(r.doubling_ok, true);
        }
    }
}

TEST(Survey, SkipsAndCapturesBadRecords) {
    const std::vector<std::string> lines{"A_", "A?", "@", "not graph6", "Bw"};
    const auto records = run_survey_graph6(lines, {});
    ASSERT_EQ(records.size(), 5u);
    EXPECT_EQ(records[0].outcome, SurveyOutcome::Computed);
    EXPECT_EQ(records[1].outcome, SurveyOutcome::Skipped);  // disconnected pair
    EXPECT_EQ(records[2].outcome, SurveyOutcome::Skipped);  // K1 has no edges
    EXPECT_EQ(records[3].outcome, SurveyOutcome::Error);
    EXPECT_EQ(records[4].outcome, SurveyOutcome::NotColorable);
    for (const auto& r : records) EXPECT_FALSE(r.defect);

    const auto text = csv(records);
    EXPECT_NE(text.find("A?,2,0,0,false,true,0,true,,,,,\n"), std::string::npos);
    EXPECT_NE(text.find("not graph6,,,,,,,,,,,,\n"), std::string::npos);

    const auto quoted = run_survey_graph6(std::vector<std::string>{"a,\"b"}, {});
    EXPECT_EQ(survey_csv_row(quoted[0]), "\"a,\"\"b\",,,,,,,,,,,,");
}

TEST(Survey, ParallelMatchesSequential) {
    SurveyOptions seq;
    seq.with_doubling = true;
    SurveyOptions par = seq;
    par.jobs = 4;
    const auto graphs = generate_connected_catalog(5);
    EXPECT_EQ(csv(run_survey(graphs, seq)), csv(run_survey(graphs, par)));
}

TEST(Survey, AbortedRecords) {
    SurveyOptions opts;
    opts.limits.node_limit = 5;
    const auto records = run_survey(std::vector<Graph>{testing::petersen()}, opts);
    ASSERT_EQ(records.size(), 1u);
    EXPECT_EQ(records[0].outcome, SurveyOutcome::Aborted);
    EXPECT_NE(survey_csv_row(records[0]).find(",aborted,"), std::string::npos);
}

}  // namespace
}  // namespace intcol
