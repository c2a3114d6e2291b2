#pragma once

#include <physort/bounds.hpp>
#include <physort/engine.hpp>
#include <physort/grid.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace physort {

namespace detail {

inline bool free_cell(const Configuration& config, Position p) { return config.in_bounds(p) && !config.occupied(p); }

/// Horizontal step toward the agent's goal side if the cell ahead in its row is empty at tick start.
inline void advance_if_free(const Configuration& config, const Agent& a, MoveSet& moves) {
    if (free_cell(config, step_from(a.pos, desired(a.color)))) {
        moves.set(a.id, desired(a.color));
    }
}

/// Some column strictly ahead of the agent is not occupied by its own color alone.
inline bool room_ahead(const std::vector<ColumnClass>& classes, const Agent& a) {
    const ColumnClass own = a.color == Color::Red ? ColumnClass::RedOccupied : ColumnClass::BlueOccupied;
    for (int x = a.pos.x + heading(a.color); x >= 1 && x <= static_cast<int>(classes.size()); x += heading(a.color)) {
        if (classes[static_cast<std::size_t>(x - 1)] != own) {
            return true;
        }
    }
    return false;
}

inline Color walking_color_for(bool red_critical, bool blue_critical) {
    if (red_critical) {
        return Color::Red;  // also the tie-break when both colors are critical
    }
    return blue_critical ? Color::Blue : Color::Red;
}

}  // namespace detail

/// Centralized optimal policy for normal configurations. At t = 0 the color holding the critical
/// agents (red on a tie) takes one step on the bottom row while the other color rises; afterwards
/// every agent walks toward its side whenever the next cell in its row is empty.
class Alg1Policy {
public:
    explicit Alg1Policy(const Configuration& config, bool finish_on_bottom = false)
            : _finish(finish_on_bottom) {
        if (config.size() == 0 || !is_normal(config)) {
            throw NotNormal("alg1");
        }
        const BoundReport report = bound_report(config);
        bool red = false;
        bool blue = false;
        for (const AgentBound& a : report.agents) {
            if (a.f == report.f_max) {
                (a.color == Color::Red ? red : blue) = true;
            }
        }
        _walker = detail::walking_color_for(red, blue);
    }

    std::string_view name() const { return "alg1"; }
    bool finish_on_bottom() const { return _finish; }
    /// The color that stays on the bottom row at t = 0.
    Color walking_color() const { return _walker; }

    MoveSet moves(int tick, const Configuration& config) const {
        MoveSet out;
        for (const Agent& a : config.agents()) {
            if (tick == 0 && a.color != _walker) {
                out.set(a.id, Direction::Up);
            } else {
                detail::advance_if_free(config, a, out);
            }
        }
        return out;
    }

private:
    bool _finish;
    Color _walker = Color::Red;
};

/// Row assignment for agents outside the normal core: same-color neighbors alternate rows, the
/// anchor (leftmost outer red, rightmost outer blue) staying on the bottom.
struct AnchorPlan {
    std::optional<int> red_anchor_label;
    std::optional<int> blue_anchor_label;
    std::map<AgentId, int> parity;  // (anchor label - own label) mod 2, outer agents only

    bool raised(AgentId id) const {
        auto it = parity.find(id);
        return it != parity.end() && it->second == 1;
    }
};

inline AnchorPlan anchor_plan(const Configuration& config, const StarReport& report) {
    const std::vector<int> labels = initial_labels(config);
    AnchorPlan plan;
    if (report.red_anchor) {
        plan.red_anchor_label = labels[config.index_of(*report.red_anchor)];
    }
    if (report.blue_anchor) {
        plan.blue_anchor_label = labels[config.index_of(*report.blue_anchor)];
    }
    for (std::size_t i = 0; i < config.size(); ++i) {
        const Agent& a = config.agents()[i];
        if (report.core.contains(a.pos.x)) {
            continue;
        }
        const auto& anchor = a.color == Color::Red ? plan.red_anchor_label : plan.blue_anchor_label;
        if (anchor) {
            const int diff = *anchor - labels[i];
            plan.parity[a.id] = ((diff % 2) + 2) % 2;
        }
    }
    return plan;
}

/// Optimal policy for any initial configuration. Agents in the normal core behave as in Alg1Policy
/// (with the walking color chosen from f*-critical agents); outer agents split rows by anchor
/// parity. From t = 1 an agent advances while some column ahead is not its own color's and the
/// next cell in its row is empty.
class Alg2Policy {
public:
    explicit Alg2Policy(const Configuration& config, bool finish_on_bottom = false)
            : _finish(finish_on_bottom), _report(star_report(config)), _plan(anchor_plan(config, _report)) {
        bool red = false;
        bool blue = false;
        for (const AgentStar& a : _report.agents) {
            if (a.f_star == _report.f_star_max) {
                (a.color == Color::Red ? red : blue) = true;
            }
            if (a.in_core) {
                _core_members.push_back(a.id);
            }
        }
        _walker = detail::walking_color_for(red, blue);
    }

    std::string_view name() const { return "alg2"; }
    bool finish_on_bottom() const { return _finish; }
    Color walking_color() const { return _walker; }
    const StarReport& report() const { return _report; }
    const AnchorPlan& plan() const { return _plan; }

    MoveSet moves(int tick, const Configuration& config) const {
        MoveSet out;
        if (tick == 0) {
            for (const Agent& a : config.agents()) {
                const bool core = std::binary_search(_core_members.begin(), _core_members.end(), a.id);
                if ((core && a.color != _walker) || (!core && _plan.raised(a.id))) {
                    out.set(a.id, Direction::Up);
                } else {
                    detail::advance_if_free(config, a, out);
                }
            }
            return out;
        }
        const auto classes = column_classes(config);
        for (const Agent& a : config.agents()) {
            if (detail::room_ahead(classes, a)) {
                detail::advance_if_free(config, a, out);
            }
        }
        return out;
    }

private:
    bool _finish;
    StarReport _report;
    AnchorPlan _plan;
    std::vector<AgentId> _core_members;  // sorted, since report agents follow id order
    Color _walker = Color::Red;
};

/// Decentralized policy for normal configurations. Each agent sees only the cells beside it and
/// keeps one memory bit: blue agents rise on their first tick, then walk left; red agents walk right
/// from the start.
class Alg3Policy {
public:
    explicit Alg3Policy(const Configuration& config, bool finish_on_bottom = false) : _finish(finish_on_bottom) {
        if (config.size() == 0 || !is_normal(config)) {
            throw NotNormal("alg3");
        }
        for (const Agent& a : config.agents()) {
            _memory[a.id] = false;
        }
    }

    std::string_view name() const { return "alg3"; }
    bool finish_on_bottom() const { return _finish; }

    /// What one agent does given its local view; flips its memory bit.
    static Direction decide(Color color, bool& memory, bool left_empty, bool right_empty) {
        Direction d = Direction::Stay;
        if (color == Color::Blue) {
            if (!memory) {
                d = Direction::Up;
            } else if (left_empty) {
                d = Direction::Left;
            }
        } else if (right_empty) {
            d = Direction::Right;
        }
        memory = true;
        return d;
    }

    MoveSet moves(int /*tick*/, const Configuration& config) {
        MoveSet out;
        for (const Agent& a : config.agents()) {
            const bool left = detail::free_cell(config, {a.pos.x - 1, a.pos.y});
            const bool right = detail::free_cell(config, {a.pos.x + 1, a.pos.y});
            out.set(a.id, decide(a.color, _memory.at(a.id), left, right));
        }
        return out;
    }

private:
    bool _finish;
    std::map<AgentId, bool> _memory;
};

/// Single-row exclusion dynamics: every agent steps in the common direction whenever the next cell is
/// empty at tick start. Never uses the spare row.
class RowPolicy {
public:
    explicit RowPolicy(Direction direction) : _direction(direction) {
        if (direction != Direction::Left && direction != Direction::Right) {
            throw InvalidArgument("row direction must be left or right");
        }
    }

    std::string_view name() const { return "row"; }
    bool finish_on_bottom() const { return false; }
    Direction direction() const { return _direction; }

    MoveSet moves(int /*tick*/, const Configuration& config) const {
        MoveSet out;
        for (const Agent& a : config.agents()) {
            if (detail::free_cell(config, step_from(a.pos, _direction))) {
                out.set(a.id, _direction);
            }
        }
        return out;
    }

private:
    Direction _direction;
};

/// Parses a row over {A, .}. Agents are colored so that their goal side is `direction`, which makes
/// "sorted" coincide with "the j cells at that end are occupied".
inline Configuration single_row_config(std::string_view row, Direction direction) {
    if (row.empty()) {
        throw ParseError("empty row string", 0);
    }
    const Color color = direction == Direction::Left ? Color::Blue : Color::Red;
    std::string text(row);
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == 'A') {
            text[i] = to_char(color);
        } else if (text[i] != '.') {
            throw ParseError("invalid character '" + std::string(1, text[i]) + "' at position " +
                                     std::to_string(i + 1) + " (expected A or .)",
                    i + 1);
        }
    }
    return parse_config(text);
}

inline Trace single_row_trace(std::string_view row, Direction direction) {
    const Configuration config = single_row_config(row, direction);
    if (config.size() == 0) {
        throw NoAgents();
    }
    RowPolicy policy(direction);
    return run_policy(config, policy);
}

/// First tick at which the j agents fill the j end cells in `direction`.
inline int single_row_run(std::string_view row, Direction direction) {
    return *single_row_trace(row, direction).makespan;
}

}  // namespace physort
