#include <physort/verify.hpp>

#include <gtest/gtest.h>

using namespace physort;

TEST(Verify, EnumerationOrder) {
    EXPECT_EQ(count_strings(3), 27u);
    EXPECT_EQ(config_string(3, 0), "...");
    EXPECT_EQ(config_string(3, 1), "..R");
    EXPECT_EQ(config_string(3, 26), "BBB");
}

TEST(Verify, SmallRunIsClean) {
    VerifyOptions opt;
    opt.max_width = 6;
    opt.oracle_max_width = 4;
    opt.row_max_width = 8;
    const VerifyReport r = verify(opt);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.configs, 3u + 9 + 27 + 81 + 243 + 729);
    for (const CheckTally& t : r.checks) {
        EXPECT_TRUE(t.ok()) << t.name;
        EXPECT_GT(t.checked, 0u) << t.name;
    }
}

TEST(Verify, InjectedBugIsCaught) {
    VerifyOptions opt;
    opt.max_width = 4;
    opt.suites = {Suite::Alg1};
    opt.normal_bound = [](const Configuration& c) { return bound_report(c).lower_bound + 1; };
    const VerifyReport r = verify(opt);
    EXPECT_FALSE(r.ok());
    ASSERT_TRUE(r.counterexample);
    EXPECT_EQ(r.counterexample->config, "RB");
    EXPECT_EQ(r.counterexample->expected, "3");
    EXPECT_EQ(r.counterexample->actual, "2");
}

TEST(Verify, WorkersAreDeterministic) {
    VerifyOptions opt;
    opt.max_width = 5;
    opt.suites = {Suite::Alg1, Suite::Alg2, Suite::Lemmas};
    opt.normal_bound = [](const Configuration& c) { return c.width() == 5 ? 0 : bound_report(c).lower_bound; };
    const VerifyReport one = verify(opt);
    opt.workers = 3;
    const VerifyReport three = verify(opt);
    ASSERT_TRUE(one.counterexample && three.counterexample);
    EXPECT_EQ(one.counterexample->config, three.counterexample->config);
    ASSERT_EQ(one.checks.size(), three.checks.size());
    for (std::size_t k = 0; k < one.checks.size(); ++k) {
        EXPECT_EQ(one.checks[k].name, three.checks[k].name);
        EXPECT_EQ(one.checks[k].passed, three.checks[k].passed);
    }
}

TEST(Verify, CeilingsAreEnforced) {
    VerifyOptions opt;
    opt.max_width = 10;
    EXPECT_THROW(verify(opt), OutOfRange);
    opt.max_width = 3;
    opt.oracle_max_width = 6;
    EXPECT_THROW(verify(opt), OutOfRange);
}

TEST(Verify, TraceCheckersFlagViolations) {
    EXPECT_TRUE(check_potential_decrease({3, 3, 0}));
    EXPECT_TRUE(check_potential_decrease({2, 1}));
    EXPECT_FALSE(check_potential_decrease({3, 1, 0}));
    EXPECT_TRUE(check_single_meeting({{1, 1, 2}, {1, 2, 2}}));
    EXPECT_FALSE(check_single_meeting({{1, 1, 2}, {2, 2, 2}}));
}
