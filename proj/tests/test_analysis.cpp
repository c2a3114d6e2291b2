#include <physort/algorithms.hpp>
#include <physort/analysis.hpp>

#include <gtest/gtest.h>

using namespace physort;

namespace {

Trace alg1_trace(const std::string& s) {
    const Configuration c = parse_config(s);
    Alg1Policy p(c);
    return run_policy(c, p);
}

Trace manual(const Configuration& start, std::vector<MoveSet> steps) {
    Trace t;
    t.policy = "manual";
    t.states.push_back(start);
    t.steps = std::move(steps);
    rebuild(t);
    return t;
}

MoveSet moves(std::initializer_list<std::pair<std::uint32_t, Direction>> list) {
    MoveSet m;
    for (auto [id, d] : list) {
        m.set(AgentId{id}, d);
    }
    return m;
}

}  // namespace

TEST(Analysis, TwoAgentMeeting) {
    const Trace t = alg1_trace("RB");
    const LabelMap labels = label_trace(t);
    const auto meetings = detect_meetings(t, labels);
    ASSERT_EQ(meetings.size(), 1u);
    EXPECT_EQ(meetings[0], (MeetingEvent{1, 1, 2}));
    const ViDiagnostics d = vi_diagnostics(t, labels, meetings);
    ASSERT_EQ(d.blue.size(), 1u);
    EXPECT_EQ(d.blue[0].v, 1);  // blue spends tick 0 going up
    EXPECT_EQ(d.blue[0].arrival, 2);
    EXPECT_EQ(d.red[0].v, 1);   // red waits out tick 0 behind the rising blue
}

TEST(Analysis, RedWalkerHasNoPenalty) {
    const Trace t = alg1_trace("R.B");
    const LabelMap labels = label_trace(t);
    const ViDiagnostics d = vi_diagnostics(t, labels, detect_meetings(t, labels));
    EXPECT_EQ(d.red[0].v, 0);
    EXPECT_EQ(d.blue[0].v, 1);
}

TEST(Analysis, NoExchangeWithoutCrossing) {
    const Trace t = alg1_trace("RRB");
    const LabelMap labels = label_trace(t);
    for (int k = 0; k < labels.ticks(); ++k) {
        EXPECT_EQ(labels.at(k), labels.at(0));
    }
    EXPECT_EQ(labels.at(0), (std::vector<int>{2, 1, 1}));
}

TEST(Analysis, LabelsExchangeOnCrossing) {
    const Configuration c(3, {{AgentId{1}, Color::Red, {1, 1}}, {AgentId{2}, Color::Red, {2, 2}}});
    const Trace t = manual(c, {moves({{1, Direction::Right}, {2, Direction::Left}})});
    const LabelMap labels = label_trace(t);
    EXPECT_EQ(labels.at(0), (std::vector<int>{2, 1}));
    EXPECT_EQ(labels.at(1), (std::vector<int>{1, 2}));
    EXPECT_EQ(labels.carrier(1, Color::Red, 2), 1u);
    EXPECT_THROW(labels.carrier(1, Color::Blue, 1), Error);
}

TEST(Analysis, LabelBoundOnExamples) {
    for (const char* s : {"RB", "RRB", "R.B", "RRRRRB....", ".RBRB."}) {
        const LabelBoundCheck check = check_label_bound(alg1_trace(s));
        EXPECT_TRUE(check.holds) << s;
        EXPECT_EQ(check.makespan, check.f_max_plus_v) << s;
        EXPECT_GE(check.label_bound, check.f_max_plus_v) << s;
    }
}

TEST(Analysis, LabelBoundNeedsCompletedNormalTrace) {
    Trace t;
    t.states.push_back(parse_config("RB"));
    EXPECT_THROW(check_label_bound(t), Error);
    rebuild(t);
    EXPECT_FALSE(t.makespan);
    EXPECT_THROW(check_label_bound(t), Error);
}

TEST(Analysis, RowPotentialSingleRow) {
    const Trace t = single_row_trace("AA..", Direction::Right);
    EXPECT_EQ(row_potential(t, 0), (std::vector<int>{3, 2, 1, 0}));
    const Trace lone = single_row_trace("A...", Direction::Right);
    EXPECT_EQ(row_potential(lone, 0), (std::vector<int>{3, 2, 1, 0}));
    EXPECT_THROW(row_potential(t, 9), OutOfRange);
    EXPECT_THROW(row_potential(t, -1), OutOfRange);
}

TEST(Analysis, RowPotentialNeedsSeparateRows) {
    // t = 0 of an alg1 run has both colors on the bottom row
    const Trace t = alg1_trace("RRB");
    EXPECT_THROW(row_potential(t, 0), Error);
    const auto p = row_potential(t, 1);
    EXPECT_EQ(p.back(), 0);
}
