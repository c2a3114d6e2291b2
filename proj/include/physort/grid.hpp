#pragma once

#include <physort/error.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace physort {

/// Red agents want to reach the right side (+x), blue agents the left side (-x).
enum class Color : std::uint8_t { Red, Blue };

constexpr Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
constexpr char to_char(Color c) { return c == Color::Red ? 'R' : 'B'; }
/// +1 for red, -1 for blue.
constexpr int heading(Color c) { return c == Color::Red ? 1 : -1; }

inline constexpr int kBottomRow = 1;
inline constexpr int kTopRow = 2;

/// Columns are 1-based, y = 1 is the bottom row.
struct Position {
    int x = 1;
    int y = kBottomRow;

    friend constexpr auto operator<=>(const Position&, const Position&) = default;
};

struct AgentId {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(const AgentId&, const AgentId&) = default;
};

struct Agent {
    AgentId id;
    Color color = Color::Red;
    Position pos;

    friend constexpr bool operator==(const Agent&, const Agent&) = default;
};

enum class ColumnClass : std::uint8_t { Empty, RedOccupied, BlueOccupied, Mixed };

/// Occupancy of a 2 x width grid. Immutable once built; agents are kept ordered by id.
class Configuration {
public:
    Configuration() = default;

    Configuration(int width, std::vector<Agent> agents) : _width(width), _agents(std::move(agents)) {
        if (_width < 0) {
            throw OutOfRange("negative grid width");
        }
        std::sort(_agents.begin(), _agents.end(), [](const Agent& a, const Agent& b) { return a.id < b.id; });
        _cells.assign(static_cast<std::size_t>(2 * _width), -1);
        for (std::size_t i = 0; i < _agents.size(); ++i) {
            const Agent& a = _agents[i];
            if (i > 0 && _agents[i - 1].id == a.id) {
                throw Error("duplicate agent id " + std::to_string(a.id.value));
            }
            if (!in_bounds(a.pos)) {
                throw OutOfRange("agent " + std::to_string(a.id.value) + " placed outside the grid");
            }
            int& cell = _cells[cell_index(a.pos)];
            if (cell >= 0) {
                throw Error("two agents share cell (" + std::to_string(a.pos.x) + "," + std::to_string(a.pos.y) +
                            ")");
            }
            cell = static_cast<int>(i);
        }
    }

    int width() const { return _width; }
    std::span<const Agent> agents() const { return _agents; }
    std::size_t size() const { return _agents.size(); }

    bool in_bounds(Position p) const { return p.x >= 1 && p.x <= _width && (p.y == kBottomRow || p.y == kTopRow); }

    /// Agent at a cell, or nullptr. Off-grid positions read as empty.
    const Agent* at(Position p) const {
        if (!in_bounds(p)) {
            return nullptr;
        }
        int idx = _cells[cell_index(p)];
        return idx < 0 ? nullptr : &_agents[static_cast<std::size_t>(idx)];
    }

    bool occupied(Position p) const { return at(p) != nullptr; }

    /// Index of an agent within agents(); stable for a given id set.
    std::size_t index_of(AgentId id) const {
        auto it = std::lower_bound(_agents.begin(), _agents.end(), id,
                [](const Agent& a, AgentId v) { return a.id < v; });
        if (it == _agents.end() || it->id != id) {
            throw UnknownAgent("unknown agent " + std::to_string(id.value));
        }
        return static_cast<std::size_t>(it - _agents.begin());
    }

    const Agent& agent(AgentId id) const { return _agents[index_of(id)]; }

    bool contains(AgentId id) const {
        return std::binary_search(_agents.begin(), _agents.end(), Agent{id, {}, {}},
                [](const Agent& a, const Agent& b) { return a.id < b.id; });
    }

    std::size_t count(Color c) const {
        return static_cast<std::size_t>(
                std::count_if(_agents.begin(), _agents.end(), [c](const Agent& a) { return a.color == c; }));
    }

    /// True when every agent sits on the bottom row (the shape of every initial configuration).
    bool bottom_row_only() const {
        return std::all_of(_agents.begin(), _agents.end(), [](const Agent& a) { return a.pos.y == kBottomRow; });
    }

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a._width == b._width && a._agents == b._agents;
    }

private:
    std::size_t cell_index(Position p) const {
        return static_cast<std::size_t>((p.y - 1) * _width + (p.x - 1));
    }

    int _width = 0;
    std::vector<Agent> _agents;
    std::vector<int> _cells;
};

/// Builds an initial configuration from a bottom-row string over {R, B, .}. Ids run 1.. left to right.
inline Configuration parse_config(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty configuration string", 0);
    }
    std::vector<Agent> agents;
    std::uint32_t next_id = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const int x = static_cast<int>(i) + 1;
        switch (text[i]) {
            case 'R':
                agents.push_back({AgentId{next_id++}, Color::Red, {x, kBottomRow}});
                break;
            case 'B':
                agents.push_back({AgentId{next_id++}, Color::Blue, {x, kBottomRow}});
                break;
            case '.':
                break;
            default:
                throw ParseError("invalid character '" + std::string(1, text[i]) + "' at position " +
                                         std::to_string(i + 1) + " (expected R, B or .)",
                        i + 1);
        }
    }
    return Configuration(static_cast<int>(text.size()), std::move(agents));
}

/// One row as a string over {R, B, .}.
inline std::string render_row(const Configuration& config, int y) {
    std::string row(static_cast<std::size_t>(config.width()), '.');
    for (const Agent& a : config.agents()) {
        if (a.pos.y == y) {
            row[static_cast<std::size_t>(a.pos.x - 1)] = to_char(a.color);
        }
    }
    return row;
}

/// Top row, newline, bottom row.
inline std::string render_frame(const Configuration& config) {
    return render_row(config, kTopRow) + "\n" + render_row(config, kBottomRow);
}

inline ColumnClass column_class(const Configuration& config, int x) {
    if (x < 1 || x > config.width()) {
        throw OutOfRange("column " + std::to_string(x) + " outside 1.." + std::to_string(config.width()));
    }
    bool red = false;
    bool blue = false;
    for (int y : {kBottomRow, kTopRow}) {
        if (const Agent* a = config.at({x, y})) {
            (a->color == Color::Red ? red : blue) = true;
        }
    }
    if (red && blue) {
        return ColumnClass::Mixed;
    }
    if (red) {
        return ColumnClass::RedOccupied;
    }
    return blue ? ColumnClass::BlueOccupied : ColumnClass::Empty;
}

inline std::vector<ColumnClass> column_classes(const Configuration& config) {
    std::vector<ColumnClass> out(static_cast<std::size_t>(config.width()), ColumnClass::Empty);
    for (int x = 1; x <= config.width(); ++x) {
        out[static_cast<std::size_t>(x - 1)] = column_class(config, x);
    }
    return out;
}

/// No mixed column, and the column classes read Blue* Empty* Red* from left to right.
inline bool is_sorted(const Configuration& config) {
    int phase = 0;  // 0: blue block, 1: empty block, 2: red block
    for (ColumnClass cls : column_classes(config)) {
        switch (cls) {
            case ColumnClass::Mixed:
                return false;
            case ColumnClass::BlueOccupied:
                if (phase > 0) {
                    return false;
                }
                break;
            case ColumnClass::Empty:
                if (phase > 1) {
                    return false;
                }
                phase = 1;
                break;
            case ColumnClass::RedOccupied:
                phase = 2;
                break;
        }
    }
    return true;
}

/// Leftmost agent(s) red and rightmost agent(s) blue. Meaningful on initial configurations.
inline bool is_normal(const Configuration& config) {
    if (config.size() == 0) {
        throw NoAgents();
    }
    const auto [lo, hi] = std::minmax_element(config.agents().begin(), config.agents().end(),
            [](const Agent& a, const Agent& b) { return a.pos.x < b.pos.x; });
    const int left = lo->pos.x;
    const int right = hi->pos.x;
    for (const Agent& a : config.agents()) {
        if (a.pos.x == left && a.color != Color::Red) {
            return false;
        }
        if (a.pos.x == right && a.color != Color::Blue) {
            return false;
        }
    }
    return true;
}

/// Reflects x -> width + 1 - x and swaps colors. Ids are kept.
inline Configuration mirror(const Configuration& config) {
    std::vector<Agent> agents(config.agents().begin(), config.agents().end());
    for (Agent& a : agents) {
        a.pos.x = config.width() + 1 - a.pos.x;
        a.color = opposite(a.color);
    }
    return Configuration(config.width(), std::move(agents));
}

/// Bottom-row string of an initial configuration (inverse of parse_config up to ids).
inline std::string to_config_string(const Configuration& config) { return render_row(config, kBottomRow); }

/// Per-agent label at t = 0, indexed like config.agents(). Red labels count down from n_red at the
/// leftmost red; blue labels count up from 1 at the leftmost blue.
inline std::vector<int> initial_labels(const Configuration& config) {
    std::vector<std::size_t> order(config.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    auto agents = config.agents();
    std::stable_sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return agents[a].pos.x < agents[b].pos.x; });
    for (std::size_t k = 1; k < order.size(); ++k) {
        const Agent& a = agents[order[k - 1]];
        const Agent& b = agents[order[k]];
        if (a.color == b.color && a.pos.x == b.pos.x) {
            throw Error("ambiguous initial order: two same-color agents in column " + std::to_string(a.pos.x));
        }
    }
    std::vector<int> labels(config.size(), 0);
    int red = static_cast<int>(config.count(Color::Red));
    int blue = 1;
    for (std::size_t idx : order) {
        labels[idx] = agents[idx].color == Color::Red ? red-- : blue++;
    }
    return labels;
}

}  // namespace physort
