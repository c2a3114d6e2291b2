#pragma once

#include <physort/engine.hpp>
#include <physort/error.hpp>
#include <physort/grid.hpp>

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <unordered_set>
#include <vector>

namespace physort {

// Brute-force ground truth: breadth-first search over joint moves. States are canonicalized by
// erasing agent ids, since same-color agents are interchangeable as far as sortedness goes.

inline constexpr int kEnumerationMaxWidth = 32;  // one occupancy bit per cell in 64 bits
inline constexpr int kOracleMaxWidth = 16;       // two bits per cell in 64 bits

struct CanonicalState {
    int width = 0;
    std::vector<std::tuple<int, int, Color>> cells;  // (x, y, color), lexicographically sorted

    friend bool operator==(const CanonicalState&, const CanonicalState&) = default;
};

inline CanonicalState canonical(const Configuration& config) {
    CanonicalState s;
    s.width = config.width();
    for (const Agent& a : config.agents()) {
        s.cells.emplace_back(a.pos.x, a.pos.y, a.color);
    }
    std::sort(s.cells.begin(), s.cells.end());
    return s;
}

struct SearchLimits {
    std::size_t max_states = 4'000'000;
    int max_depth = 0;

    /// Depth cap 2m + 2, above the optimum for every width-m initial configuration.
    static SearchLimits defaults(int width) { return {4'000'000, 2 * width + 2}; }
};

namespace detail {

/// Calls visit(directions) for every joint move valid under the step semantics. `positions` are the
/// agents' cells; a mover's target must be on the grid, unoccupied at tick start and not already
/// claimed by an earlier agent.
template <class Visit>
void for_each_joint_move(int width, const std::vector<Position>& positions, Visit&& visit) {
    auto cell = [width](Position p) { return static_cast<unsigned>((p.y - 1) * width + (p.x - 1)); };
    std::uint64_t occupied = 0;
    for (Position p : positions) {
        occupied |= std::uint64_t{1} << cell(p);
    }
    std::vector<Direction> dirs(positions.size(), Direction::Stay);
    auto recurse = [&](auto&& self, std::size_t k, std::uint64_t claimed) -> void {
        if (k == positions.size()) {
            visit(static_cast<const std::vector<Direction>&>(dirs));
            return;
        }
        for (Direction d : kAllDirections) {
            if (d == Direction::Stay) {
                dirs[k] = d;
                self(self, k + 1, claimed);
                continue;
            }
            const Position target = step_from(positions[k], d);
            if (target.x < 1 || target.x > width || target.y < kBottomRow || target.y > kTopRow) {
                continue;
            }
            const std::uint64_t bit = std::uint64_t{1} << cell(target);
            if ((occupied & bit) || (claimed & bit)) {
                continue;
            }
            dirs[k] = d;
            self(self, k + 1, claimed | bit);
        }
        dirs[k] = Direction::Stay;
    };
    recurse(recurse, 0, 0);
}

// Packed state: 2 bits per cell, 0 empty, 1 red, 2 blue; cell index (y - 1) * width + (x - 1).
using PackedState = std::uint64_t;

inline unsigned packed_cell(int width, Position p) { return static_cast<unsigned>(2 * ((p.y - 1) * width + (p.x - 1))); }

inline PackedState pack(const Configuration& config) {
    PackedState s = 0;
    for (const Agent& a : config.agents()) {
        s |= PackedState{a.color == Color::Red ? 1u : 2u} << packed_cell(config.width(), a.pos);
    }
    return s;
}

inline bool packed_sorted(int width, PackedState s) {
    int phase = 0;
    for (int x = 1; x <= width; ++x) {
        const unsigned lo = (s >> packed_cell(width, {x, kBottomRow})) & 3u;
        const unsigned hi = (s >> packed_cell(width, {x, kTopRow})) & 3u;
        const bool red = lo == 1 || hi == 1;
        const bool blue = lo == 2 || hi == 2;
        if (red && blue) {
            return false;
        }
        if (blue) {
            if (phase > 0) {
                return false;
            }
        } else if (red) {
            phase = 2;
        } else {
            if (phase > 1) {
                return false;
            }
            phase = 1;
        }
    }
    return true;
}

}  // namespace detail

/// Every MoveSet apply_step accepts on this configuration.
inline std::vector<MoveSet> enumerate_joint_moves(const Configuration& config) {
    if (config.width() > kEnumerationMaxWidth) {
        throw OutOfRange("joint-move enumeration supports widths up to " + std::to_string(kEnumerationMaxWidth));
    }
    std::vector<Position> positions;
    for (const Agent& a : config.agents()) {
        positions.push_back(a.pos);
    }
    std::vector<MoveSet> out;
    detail::for_each_joint_move(config.width(), positions, [&](const std::vector<Direction>& dirs) {
        MoveSet m;
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            m.set(config.agents()[i].id, dirs[i]);
        }
        out.push_back(std::move(m));
    });
    return out;
}

/// Minimal number of ticks after which some reachable state is sorted.
inline int optimal_makespan(const Configuration& config, const SearchLimits& limits) {
    if (limits.max_states == 0 || limits.max_depth <= 0) {
        throw InvalidArgument("search limits must be positive");
    }
    const int width = config.width();
    if (width > kOracleMaxWidth) {
        throw OutOfRange("oracle supports widths up to " + std::to_string(kOracleMaxWidth));
    }
    using detail::PackedState;
    const PackedState start = detail::pack(config);
    if (detail::packed_sorted(width, start)) {
        return 0;
    }
    std::unordered_set<PackedState> visited{start};
    std::vector<PackedState> frontier{start};
    std::vector<Position> positions;
    std::vector<PackedState> codes;
    for (int depth = 1;; ++depth) {
        if (depth > limits.max_depth) {
            throw ResourceExhausted("oracle depth limit reached", visited.size(), frontier.size(), depth - 1);
        }
        std::vector<PackedState> next;
        for (PackedState state : frontier) {
            positions.clear();
            codes.clear();
            for (int y : {kBottomRow, kTopRow}) {
                for (int x = 1; x <= width; ++x) {
                    const PackedState code = (state >> detail::packed_cell(width, {x, y})) & 3u;
                    if (code != 0) {
                        positions.push_back({x, y});
                        codes.push_back(code);
                    }
                }
            }
            bool found = false;
            detail::for_each_joint_move(width, positions, [&](const std::vector<Direction>& dirs) {
                if (found) {
                    return;
                }
                PackedState s = state;
                for (std::size_t i = 0; i < dirs.size(); ++i) {
                    if (dirs[i] == Direction::Stay) {
                        continue;
                    }
                    s &= ~(PackedState{3} << detail::packed_cell(width, positions[i]));
                    s |= codes[i] << detail::packed_cell(width, step_from(positions[i], dirs[i]));
                }
                if (!visited.insert(s).second) {
                    return;
                }
                if (detail::packed_sorted(width, s)) {
                    found = true;
                    return;
                }
                next.push_back(s);
            });
            if (found) {
                return depth;
            }
            if (visited.size() > limits.max_states) {
                throw ResourceExhausted("oracle state limit reached", visited.size(), next.size(), depth);
            }
        }
        if (next.empty()) {
            throw Error("oracle: no sorted state reachable");
        }
        frontier = std::move(next);
    }
}

inline int optimal_makespan(const Configuration& config) {
    return optimal_makespan(config, SearchLimits::defaults(config.width()));
}

}  // namespace physort
