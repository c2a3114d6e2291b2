#pragma once

#include <physort/error.hpp>
#include <physort/grid.hpp>

#include <algorithm>
#include <optional>
#include <vector>

namespace physort {

// Lower-bound quantities of an initial (bottom-row) configuration.
//
// For a red agent A, front(A) counts the columns right of A that are not red-occupied and back(A)
// counts the red-occupied columns left of A. Blue agents are mirrored. f(A) = front + back, and
// the makespan of any schedule is at least max f plus a 0/1 start-up penalty.

struct FrontBack {
    int front = 0;
    int back = 0;

    int f() const { return front + back; }
    friend bool operator==(const FrontBack&, const FrontBack&) = default;
};

namespace detail {

inline void require_initial(const Configuration& config) {
    if (!config.bottom_row_only()) {
        throw Error("bounds are defined on initial configurations (bottom row only)");
    }
}

inline FrontBack front_back(const Configuration& config, const std::vector<ColumnClass>& classes, const Agent& a) {
    const ColumnClass own = a.color == Color::Red ? ColumnClass::RedOccupied : ColumnClass::BlueOccupied;
    FrontBack fb;
    for (int x = 1; x <= config.width(); ++x) {
        const bool ahead = a.color == Color::Red ? x > a.pos.x : x < a.pos.x;
        const bool behind = a.color == Color::Red ? x < a.pos.x : x > a.pos.x;
        const bool same = classes[static_cast<std::size_t>(x - 1)] == own;
        if (ahead && !same) {
            ++fb.front;
        } else if (behind && same) {
            ++fb.back;
        }
    }
    return fb;
}

/// Another agent sits on the bottom-row cell directly ahead of `a`.
inline bool blocked_ahead(const Configuration& config, const Agent& a) {
    return config.occupied({a.pos.x + heading(a.color), kBottomRow});
}

}  // namespace detail

inline FrontBack front_back(const Configuration& config, AgentId id) {
    detail::require_initial(config);
    return detail::front_back(config, column_classes(config), config.agent(id));
}

struct AgentBound {
    AgentId id;
    Color color = Color::Red;
    int x = 0;
    int front = 0;
    int back = 0;
    int f = 0;
};

struct BoundReport {
    std::vector<AgentBound> agents;  // ordered like Configuration::agents()
    int f_max = 0;
    std::vector<AgentId> critical;
    int v = 0;
    int lower_bound = 0;

    bool both_colors_critical() const {
        bool red = false;
        bool blue = false;
        for (AgentId id : critical) {
            for (const AgentBound& a : agents) {
                if (a.id == id) {
                    (a.color == Color::Red ? red : blue) = true;
                }
            }
        }
        return red && blue;
    }
};

/// f, f_max, critical agents, V and the bound f_max + V of a normal initial configuration.
inline BoundReport bound_report(const Configuration& config) {
    detail::require_initial(config);
    if (config.size() == 0 || !is_normal(config)) {
        throw NotNormal("bound_report");
    }
    const auto classes = column_classes(config);
    BoundReport report;
    for (const Agent& a : config.agents()) {
        const FrontBack fb = detail::front_back(config, classes, a);
        report.agents.push_back({a.id, a.color, a.pos.x, fb.front, fb.back, fb.f()});
        report.f_max = std::max(report.f_max, fb.f());
    }
    bool red = false;
    bool blue = false;
    bool blocked = false;
    for (std::size_t i = 0; i < report.agents.size(); ++i) {
        if (report.agents[i].f != report.f_max) {
            continue;
        }
        const Agent& a = config.agents()[i];
        report.critical.push_back(a.id);
        (a.color == Color::Red ? red : blue) = true;
        blocked = blocked || detail::blocked_ahead(config, a);
    }
    report.v = (red && blue) || blocked ? 1 : 0;
    report.lower_bound = report.f_max + report.v;
    return report;
}

/// Columns from the leftmost red to the rightmost blue at t = 0, when that interval is nonempty.
struct NormalCore {
    struct Interval {
        int left = 0;
        int right = 0;
        friend bool operator==(const Interval&, const Interval&) = default;
    };
    std::optional<Interval> interval;

    bool empty() const { return !interval.has_value(); }
    bool contains(int x) const { return interval && x >= interval->left && x <= interval->right; }
    friend bool operator==(const NormalCore&, const NormalCore&) = default;
};

inline NormalCore normal_core(const Configuration& config) {
    std::optional<int> leftmost_red;
    std::optional<int> rightmost_blue;
    for (const Agent& a : config.agents()) {
        if (a.color == Color::Red) {
            leftmost_red = std::min(leftmost_red.value_or(a.pos.x), a.pos.x);
        } else {
            rightmost_blue = std::max(rightmost_blue.value_or(a.pos.x), a.pos.x);
        }
    }
    NormalCore core;
    if (leftmost_red && rightmost_blue && *leftmost_red <= *rightmost_blue) {
        core.interval = NormalCore::Interval{*leftmost_red, *rightmost_blue};
    }
    return core;
}

struct AgentStar {
    AgentId id;
    Color color = Color::Red;
    int x = 0;
    int front = 0;
    int back = 0;
    bool in_core = false;
    int f_star = 0;  // front + back inside the core, front alone outside it
};

struct StarReport {
    NormalCore core;
    std::vector<AgentStar> agents;  // ordered like Configuration::agents()
    int f_star_max = 0;
    std::vector<AgentId> star_critical;
    int v_star = 0;
    int lower_bound = 0;
    std::optional<AgentId> red_anchor;   // leftmost red outside the core
    std::optional<AgentId> blue_anchor;  // rightmost blue outside the core

    bool both_colors_critical() const {
        bool red = false;
        bool blue = false;
        for (AgentId id : star_critical) {
            for (const AgentStar& a : agents) {
                if (a.id == id) {
                    (a.color == Color::Red ? red : blue) = true;
                }
            }
        }
        return red && blue;
    }
};

/// The general bound f*_max + V*, defined for every initial configuration.
inline StarReport star_report(const Configuration& config) {
    detail::require_initial(config);
    const auto classes = column_classes(config);
    StarReport report;
    report.core = normal_core(config);
    for (const Agent& a : config.agents()) {
        const FrontBack fb = detail::front_back(config, classes, a);
        const bool inside = report.core.contains(a.pos.x);
        report.agents.push_back({a.id, a.color, a.pos.x, fb.front, fb.back, inside, inside ? fb.f() : fb.front});
        report.f_star_max = std::max(report.f_star_max, report.agents.back().f_star);
        if (!inside) {
            if (a.color == Color::Red &&
                    (!report.red_anchor || a.pos.x < config.agent(*report.red_anchor).pos.x)) {
                report.red_anchor = a.id;
            }
            if (a.color == Color::Blue &&
                    (!report.blue_anchor || a.pos.x > config.agent(*report.blue_anchor).pos.x)) {
                report.blue_anchor = a.id;
            }
        }
    }
    bool red = false;
    bool blue = false;
    bool blocked = false;
    for (std::size_t i = 0; i < report.agents.size(); ++i) {
        if (report.agents[i].f_star != report.f_star_max) {
            continue;
        }
        const Agent& a = config.agents()[i];
        report.star_critical.push_back(a.id);
        (a.color == Color::Red ? red : blue) = true;
        blocked = blocked || detail::blocked_ahead(config, a);
    }
    const bool facing = red && blue && !report.core.empty();
    report.v_star = facing || (blocked && report.f_star_max > 0) ? 1 : 0;
    report.lower_bound = report.f_star_max + report.v_star;
    return report;
}

}  // namespace physort
