#pragma once

#include <physort/error.hpp>
#include <physort/grid.hpp>

#include <concepts>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace physort {

enum class Direction : std::uint8_t { Stay, Up, Down, Left, Right };

inline constexpr Direction kAllDirections[] = {
        Direction::Stay, Direction::Up, Direction::Down, Direction::Left, Direction::Right};

constexpr Position step_from(Position p, Direction d) {
    switch (d) {
        case Direction::Up:
            return {p.x, p.y + 1};
        case Direction::Down:
            return {p.x, p.y - 1};
        case Direction::Left:
            return {p.x - 1, p.y};
        case Direction::Right:
            return {p.x + 1, p.y};
        case Direction::Stay:
            break;
    }
    return p;
}

constexpr Direction mirror(Direction d) {
    if (d == Direction::Left) {
        return Direction::Right;
    }
    if (d == Direction::Right) {
        return Direction::Left;
    }
    return d;
}

/// Desired horizontal direction of a color.
constexpr Direction desired(Color c) { return c == Color::Red ? Direction::Right : Direction::Left; }

constexpr char to_char(Direction d) {
    switch (d) {
        case Direction::Up:
            return 'U';
        case Direction::Down:
            return 'D';
        case Direction::Left:
            return 'L';
        case Direction::Right:
            return 'R';
        case Direction::Stay:
            break;
    }
    return 'S';
}

/// One tick's move intents. Ids without an entry stay put.
class MoveSet {
public:
    void set(AgentId id, Direction d) {
        if (d == Direction::Stay) {
            _intents.erase(id);
        } else {
            _intents[id] = d;
        }
    }

    Direction get(AgentId id) const {
        auto it = _intents.find(id);
        return it == _intents.end() ? Direction::Stay : it->second;
    }

    /// Non-Stay intents, ordered by id.
    const std::map<AgentId, Direction>& intents() const { return _intents; }
    bool empty() const { return _intents.empty(); }

    friend bool operator==(const MoveSet&, const MoveSet&) = default;

private:
    std::map<AgentId, Direction> _intents;
};

inline MoveSet mirror(const MoveSet& moves) {
    MoveSet out;
    for (const auto& [id, d] : moves.intents()) {
        out.set(id, mirror(d));
    }
    return out;
}

/// Applies one synchronous tick. A mover's target must be on the grid and empty at tick start, and no
/// two movers may share a target. Throws without producing anything on the first violation.
inline Configuration apply_step(const Configuration& config, const MoveSet& moves) {
    std::vector<Agent> next(config.agents().begin(), config.agents().end());
    std::map<Position, AgentId> targets;
    for (const auto& [id, d] : moves.intents()) {
        Agent& a = next[config.index_of(id)];
        const Position target = step_from(a.pos, d);
        if (!config.in_bounds(target)) {
            throw BoundaryViolation(id.value);
        }
        if (config.occupied(target)) {
            throw OccupiedTarget(id.value);
        }
        auto [it, fresh] = targets.emplace(target, id);
        if (!fresh) {
            throw TargetConflict(it->second.value, id.value);
        }
        a.pos = target;
    }
    return Configuration(config.width(), std::move(next));
}

/// A deterministic controller: static plan fixed at construction, one MoveSet per tick.
template <class P>
concept Policy = requires(P& p, const P& cp, int tick, const Configuration& c) {
    { cp.name() } -> std::convertible_to<std::string_view>;
    { p.moves(tick, c) } -> std::same_as<MoveSet>;
    { cp.finish_on_bottom() } -> std::convertible_to<bool>;
};

/// Initial configuration, per-tick moves and the derived per-tick states.
struct Trace {
    std::string policy;
    std::vector<Configuration> states;  // states[t] is the configuration at the beginning of tick t
    std::vector<MoveSet> steps;         // steps[t] takes states[t] to states[t + 1]
    std::optional<int> makespan;        // first t with states[t] sorted
    bool finishing_tick = false;        // last step only lowers agents onto the bottom row

    const Configuration& initial() const { return states.front(); }
    int ticks() const { return static_cast<int>(steps.size()); }
};

/// Replays a trace's moves from its initial state and recomputes states and makespan.
inline void rebuild(Trace& trace) {
    Configuration current = trace.states.front();
    std::vector<Configuration> states{current};
    for (std::size_t t = 0; t < trace.steps.size(); ++t) {
        try {
            current = apply_step(current, trace.steps[t]);
        } catch (MoveError& e) {
            e.annotate_tick(static_cast<int>(t));
            throw;
        }
        states.push_back(current);
    }
    trace.states = std::move(states);
    trace.makespan.reset();
    for (std::size_t t = 0; t < trace.states.size(); ++t) {
        if (is_sorted(trace.states[t])) {
            trace.makespan = static_cast<int>(t);
            break;
        }
    }
}

class Unsorted : public Error {
public:
    explicit Unsorted(Trace trace)
            : Error("policy '" + trace.policy + "' did not sort within " + std::to_string(trace.ticks()) +
                    " ticks"),
              _trace(std::move(trace)) {}
    const Trace& trace() const { return _trace; }

private:
    Trace _trace;
};

inline int default_max_ticks(int width) { return 4 * width + 4; }

/// Moves every top-row agent down in one tick.
inline MoveSet lower_all(const Configuration& config) {
    MoveSet moves;
    for (const Agent& a : config.agents()) {
        if (a.pos.y == kTopRow) {
            moves.set(a.id, Direction::Down);
        }
    }
    return moves;
}

/// Steps the policy until a tick begins sorted. Throws Unsorted once max_ticks steps were taken
/// without reaching a sorted state; MoveErrors from the policy are rethrown annotated with the tick.
template <Policy P>
Trace run_policy(const Configuration& config, P& policy, int max_ticks) {
    if (max_ticks < 1) {
        throw InvalidArgument("max_ticks must be at least 1");
    }
    Trace trace;
    trace.policy = std::string(policy.name());
    trace.states.push_back(config);
    int tick = 0;
    while (!is_sorted(trace.states.back())) {
        if (tick == max_ticks) {
            throw Unsorted(std::move(trace));
        }
        MoveSet moves = policy.moves(tick, trace.states.back());
        try {
            trace.states.push_back(apply_step(trace.states.back(), moves));
        } catch (MoveError& e) {
            e.annotate_tick(tick);
            throw;
        }
        trace.steps.push_back(std::move(moves));
        ++tick;
    }
    trace.makespan = tick;
    if (policy.finish_on_bottom()) {
        MoveSet down = lower_all(trace.states.back());
        if (!down.empty()) {
            try {
                trace.states.push_back(apply_step(trace.states.back(), down));
            } catch (MoveError& e) {
                e.annotate_tick(tick);
                throw;
            }
            trace.steps.push_back(std::move(down));
            trace.finishing_tick = true;
        }
    }
    return trace;
}

template <Policy P>
Trace run_policy(const Configuration& config, P& policy) {
    return run_policy(config, policy, default_max_ticks(config.width()));
}

}  // namespace physort
