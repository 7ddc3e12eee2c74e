#include "as2/verify.hpp"

#include <gtest/gtest.h>

using namespace as2;

TEST(Verify, SuiteSelection) {
    EXPECT_EQ(parse_suite("hopf"), Suite::hopf);
    EXPECT_FALSE(parse_suite("nope"));
    std::set<int> ids;
    for (const auto& c : acceptance_criteria()) ids.insert(c.id);
    EXPECT_EQ(ids.size(), 11u);
}

TEST(Verify, SmallConfigSeriesAndHopfPass) {
    const auto cfg = VerifyConfig::scaled(2, 4);
    for (auto suite : {Suite::series, Suite::hopf})
        for (const auto& r : run_suite(suite, cfg, false)) EXPECT_TRUE(r.pass) << r.title;
}

TEST(Verify, PencilWitnessIsConcrete) {
    const auto w = find_pencil_witness(degree_one_pair_tensors(1));
    ASSERT_TRUE(w);
    EXPECT_NE(w->lhs, w->rhs);
}

TEST(Verify, ReportsRenderDeterministically) {
    const auto cfg = VerifyConfig::scaled(2, 4);
    auto a = run_suite(Suite::basis, cfg, false);
    auto b = run_suite(Suite::basis, cfg, false);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].reports.size(); ++j)
            EXPECT_EQ(a[i].reports[j].to_json().dump(), b[i].reports[j].to_json().dump());
}
