#include <physort/bounds.hpp>
#include <physort/verify.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace physort;

namespace {

// Direct reading of the definitions on a bottom-row string, kept apart from the library code.
struct Reference {
    std::vector<int> front, back;
    int f_max = 0;
    int v = 0;
    int star_max = 0;
    int v_star = 0;
};

Reference reference(const std::string& s) {
    const int m = static_cast<int>(s.size());
    Reference r;
    std::vector<int> xs;
    for (int x = 0; x < m; ++x) {
        if (s[x] == '.') {
            continue;
        }
        xs.push_back(x);
        const char own = s[x];
        const int dir = own == 'R' ? 1 : -1;
        int front = 0;
        int back = 0;
        for (int y = x + dir; y >= 0 && y < m; y += dir) {
            front += s[y] != own;
        }
        for (int y = x - dir; y >= 0 && y < m; y -= dir) {
            back += s[y] == own;
        }
        r.front.push_back(front);
        r.back.push_back(back);
    }
    const auto lr = s.find('R');
    const auto rb = s.rfind('B');
    const bool core = lr != std::string::npos && rb != std::string::npos && lr <= rb;
    std::vector<int> f, fs;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        f.push_back(r.front[k] + r.back[k]);
        const bool inside = core && xs[k] >= static_cast<int>(lr) && xs[k] <= static_cast<int>(rb);
        fs.push_back(inside ? f.back() : r.front[k]);
    }
    auto components = [&](const std::vector<int>& val, int mx, bool need_core) {
        bool red = false, blue = false, blocked = false;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            if (val[k] != mx) {
                continue;
            }
            const char own = s[xs[k]];
            (own == 'R' ? red : blue) = true;
            const int ahead = xs[k] + (own == 'R' ? 1 : -1);
            blocked = blocked || (ahead >= 0 && ahead < m && s[ahead] != '.');
        }
        (void)need_core;
        return std::tuple{red, blue, blocked};
    };
    if (!xs.empty()) {
        r.f_max = *std::max_element(f.begin(), f.end());
        auto [red, blue, blocked] = components(f, r.f_max, false);
        r.v = (red && blue) || blocked ? 1 : 0;
        r.star_max = *std::max_element(fs.begin(), fs.end());
        auto [sred, sblue, sblocked] = components(fs, r.star_max, true);
        r.v_star = ((sred && sblue && core) || (sblocked && r.star_max > 0)) ? 1 : 0;
    }
    return r;
}

}  // namespace

TEST(Bounds, TwoAgents) {
    const BoundReport b = bound_report(parse_config("RB"));
    EXPECT_EQ(b.f_max, 1);
    EXPECT_EQ(b.v, 1);
    EXPECT_EQ(b.lower_bound, 2);
    EXPECT_TRUE(b.both_colors_critical());
}

TEST(Bounds, Examples) {
    EXPECT_EQ(bound_report(parse_config("RRB")).f_max, 2);
    EXPECT_EQ(bound_report(parse_config("RRB")).lower_bound, 3);
    EXPECT_EQ(bound_report(parse_config(".RBB")).lower_bound, 4);
    const BoundReport gap = bound_report(parse_config("R.B"));
    EXPECT_EQ(gap.f_max, 2);
    EXPECT_EQ(gap.v, 1);  // both colors critical even though nobody is blocked
}

TEST(Bounds, WidthTenRedBlock) {
    const Configuration c = parse_config("RRRRRB....");
    const BoundReport b = bound_report(c);
    EXPECT_EQ(b.f_max, 9);
    EXPECT_EQ(b.v, 1);
    EXPECT_EQ(b.lower_bound, 10);
    const FrontBack fb = front_back(c, AgentId{5});
    EXPECT_EQ(fb.front, 5);
    EXPECT_EQ(fb.back, 4);
    ASSERT_EQ(b.critical.size(), 1u);
    EXPECT_EQ(b.critical[0].value, 5u);
}

TEST(Bounds, RequiresNormalInitial) {
    EXPECT_THROW(bound_report(parse_config("BR")), NotNormal);
    EXPECT_THROW(bound_report(parse_config("...")), NotNormal);
    const Configuration lifted(2, {{AgentId{1}, Color::Red, {1, 2}}, {AgentId{2}, Color::Blue, {2, 1}}});
    EXPECT_THROW(bound_report(lifted), Error);
    EXPECT_THROW(star_report(lifted), Error);
}

TEST(Bounds, NormalCore) {
    EXPECT_TRUE(normal_core(parse_config("BR")).empty());
    const NormalCore c = normal_core(parse_config("B.RB.R"));
    ASSERT_FALSE(c.empty());
    EXPECT_EQ(c.interval->left, 3);
    EXPECT_EQ(c.interval->right, 4);
    EXPECT_TRUE(c.contains(3));
    EXPECT_FALSE(c.contains(5));
}

TEST(Bounds, StarExamples) {
    EXPECT_EQ(star_report(parse_config("BR")).lower_bound, 0);
    EXPECT_EQ(star_report(parse_config("B.RB.R")).lower_bound, 3);
    const StarReport s = star_report(parse_config("BRRRRR....."));
    EXPECT_TRUE(s.core.empty());
    EXPECT_EQ(s.f_star_max, 5);
    EXPECT_EQ(s.v_star, 1);
    EXPECT_EQ(s.lower_bound, 6);
    EXPECT_EQ(star_report(parse_config("...")).lower_bound, 0);
}

TEST(Bounds, Anchors) {
    const StarReport s = star_report(parse_config("R.BRRB.BR"));
    // S = [1, 8]: the last red sits outside
    ASSERT_TRUE(s.red_anchor);
    EXPECT_EQ(s.red_anchor->value, 7u);
    EXPECT_FALSE(s.blue_anchor);
}

TEST(BoundsProperty, MatchesReferenceExhaustively) {
    for (int m = 1; m <= 8; ++m) {
        for (std::uint64_t i = 0; i < count_strings(m); ++i) {
            const std::string s = config_string(m, i);
            const Configuration c = parse_config(s);
            const Reference ref = reference(s);
            const StarReport star = star_report(c);
            ASSERT_EQ(star.f_star_max, ref.star_max) << s;
            ASSERT_EQ(star.v_star, ref.v_star) << s;
            for (std::size_t k = 0; k < c.size(); ++k) {
                ASSERT_EQ(star.agents[k].front, ref.front[k]) << s;
                ASSERT_EQ(star.agents[k].back, ref.back[k]) << s;
            }
            if (c.size() > 0 && is_normal(c)) {
                const BoundReport b = bound_report(c);
                ASSERT_EQ(b.f_max, ref.f_max) << s;
                ASSERT_EQ(b.v, ref.v) << s;
                ASSERT_FALSE(b.critical.empty()) << s;
                ASSERT_EQ(b.lower_bound, b.f_max + b.v);
            }
        }
    }
}

TEST(BoundsProperty, MirrorAndRange) {
    for (int m = 1; m <= 9; ++m) {
        for (std::uint64_t i = 0; i < count_strings(m); ++i) {
            const Configuration c = parse_config(config_string(m, i));
            const StarReport s = star_report(c);
            const StarReport ms = star_report(mirror(c));
            ASSERT_EQ(s.lower_bound, ms.lower_bound);
            ASSERT_GE(s.lower_bound, 0);
            ASSERT_LE(s.lower_bound, 2 * m);
            ASSERT_TRUE(s.v_star == 0 || s.v_star == 1);
            for (const AgentStar& a : s.agents) {
                ASSERT_EQ(a.f_star, a.in_core ? a.front + a.back : a.front);
            }
        }
    }
}
