#include <physort/grid.hpp>
#include <physort/verify.hpp>

#include <gtest/gtest.h>

using namespace physort;

TEST(Grid, ParseAssignsIdsLeftToRight) {
    const Configuration c = parse_config(".RB.B");
    ASSERT_EQ(c.width(), 5);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c.agents()[0].id.value, 1u);
    EXPECT_EQ(c.agents()[0].color, Color::Red);
    EXPECT_EQ(c.agents()[0].pos, (Position{2, 1}));
    EXPECT_EQ(c.agents()[2].pos, (Position{5, 1}));
    EXPECT_EQ(c.count(Color::Blue), 2u);
    EXPECT_TRUE(c.bottom_row_only());
}

TEST(Grid, ParseRejectsBadInput) {
    EXPECT_THROW(parse_config(""), ParseError);
    try {
        parse_config("RBx.");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 3u);
    }
}

TEST(Grid, ConfigurationValidates) {
    EXPECT_THROW(Configuration(-1, {}), OutOfRange);
    EXPECT_THROW(Configuration(2, {{AgentId{1}, Color::Red, {3, 1}}}), OutOfRange);
    EXPECT_THROW(Configuration(2, {{AgentId{1}, Color::Red, {1, 3}}}), OutOfRange);
    EXPECT_THROW(Configuration(2, {{AgentId{1}, Color::Red, {1, 1}}, {AgentId{2}, Color::Blue, {1, 1}}}), Error);
    EXPECT_THROW(Configuration(2, {{AgentId{1}, Color::Red, {1, 1}}, {AgentId{1}, Color::Blue, {2, 1}}}), Error);
    const Configuration c = parse_config("RB");
    EXPECT_THROW(c.agent(AgentId{7}), UnknownAgent);
    EXPECT_EQ(c.at({1, 2}), nullptr);
}

TEST(Grid, RenderRoundTrip) {
    const Configuration c(3, {{AgentId{1}, Color::Red, {1, 2}}, {AgentId{2}, Color::Blue, {3, 1}}});
    EXPECT_EQ(render_row(c, kTopRow), "R..");
    EXPECT_EQ(render_row(c, kBottomRow), "..B");
    EXPECT_EQ(render_frame(c), "R..\n..B");
    EXPECT_EQ(to_config_string(parse_config("R.B")), "R.B");
}

TEST(Grid, ColumnClasses) {
    const Configuration c(4, {{AgentId{1}, Color::Red, {1, 1}}, {AgentId{2}, Color::Blue, {1, 2}},
                                     {AgentId{3}, Color::Blue, {3, 1}}});
    EXPECT_EQ(column_class(c, 1), ColumnClass::Mixed);
    EXPECT_EQ(column_class(c, 2), ColumnClass::Empty);
    EXPECT_EQ(column_class(c, 3), ColumnClass::BlueOccupied);
    EXPECT_THROW(column_class(c, 0), OutOfRange);
    EXPECT_THROW(column_class(c, 5), OutOfRange);
}

TEST(Grid, Sortedness) {
    EXPECT_TRUE(is_sorted(parse_config("BR")));
    EXPECT_TRUE(is_sorted(parse_config("B..R")));
    EXPECT_TRUE(is_sorted(parse_config("....")));
    EXPECT_TRUE(is_sorted(parse_config("RR")));
    EXPECT_FALSE(is_sorted(parse_config("RB")));
    EXPECT_FALSE(is_sorted(parse_config("B.RB")));
    const Configuration mixed(1, {{AgentId{1}, Color::Red, {1, 1}}, {AgentId{2}, Color::Blue, {1, 2}}});
    EXPECT_FALSE(is_sorted(mixed));
}

TEST(Grid, Normality) {
    EXPECT_TRUE(is_normal(parse_config("RB")));
    EXPECT_TRUE(is_normal(parse_config(".RBRB.")));
    EXPECT_FALSE(is_normal(parse_config("BR")));
    EXPECT_FALSE(is_normal(parse_config("RR")));
    EXPECT_THROW(is_normal(parse_config("...")), NoAgents);
}

TEST(Grid, MirrorExample) {
    const Configuration m = mirror(parse_config("R.B."));
    EXPECT_EQ(to_config_string(m), ".R.B");
    EXPECT_EQ(m.agent(AgentId{1}).color, Color::Blue);
    EXPECT_EQ(m.agent(AgentId{1}).pos.x, 4);
}

TEST(Grid, InitialLabels) {
    const Configuration c = parse_config("RRBRB");
    // reds n1..1 left to right, blues 1..n2 left to right
    EXPECT_EQ(initial_labels(c), (std::vector<int>{3, 2, 1, 1, 2}));
}

TEST(GridProperty, RoundTripAndMirrorInvolution) {
    for (int m = 1; m <= 9; ++m) {
        for (std::uint64_t i = 0; i < count_strings(m); ++i) {
            const std::string s = config_string(m, i);
            const Configuration c = parse_config(s);
            ASSERT_EQ(to_config_string(c), s);
            ASSERT_EQ(mirror(mirror(c)), c) << s;
            ASSERT_EQ(is_sorted(mirror(c)), is_sorted(c)) << s;
            if (c.size() > 0) {
                ASSERT_EQ(is_normal(mirror(c)), is_normal(c)) << s;
            }
        }
    }
}

TEST(GridProperty, SortedMatchesRegularPattern) {
    // Independent reading of sortedness on a bottom-row string: B* .* R* after deleting nothing.
    for (int m = 1; m <= 8; ++m) {
        for (std::uint64_t i = 0; i < count_strings(m); ++i) {
            const std::string s = config_string(m, i);
            const auto last_b = s.find_last_of('B');
            const auto first_r = s.find_first_of('R');
            const auto first_dot = s.find_first_of('.');
            const auto last_dot = s.find_last_of('.');
            bool expected = true;
            if (last_b != std::string::npos && first_r != std::string::npos && first_r < last_b) {
                expected = false;
            }
            if (last_b != std::string::npos && first_dot != std::string::npos && first_dot < last_b) {
                expected = false;
            }
            if (first_r != std::string::npos && last_dot != std::string::npos && last_dot > first_r) {
                expected = false;
            }
            ASSERT_EQ(is_sorted(parse_config(s)), expected) << s;
        }
    }
}
