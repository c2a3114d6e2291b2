#pragma once

#include <physort/engine.hpp>
#include <physort/error.hpp>
#include <physort/grid.hpp>

#include <json.hpp>

#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <string>

namespace physort {

// Line-delimited trace records. The first line is a header
//   {"width": m, "agent_count": n, "policy": "alg1"}
// followed by one record per state, tick 0 first:
//   {"tick": t, "agents": [{"id": 1, "color": "R", "x": 1, "y": 1}, ...]}
// The state produced by the optional lowering tick carries "finishing": true.

inline nlohmann::json trace_header(const Trace& trace) {
    return {{"width", trace.initial().width()},
            {"agent_count", trace.initial().size()},
            {"policy", trace.policy}};
}

inline nlohmann::json state_record(int tick, const Configuration& state) {
    nlohmann::json agents = nlohmann::json::array();
    for (const Agent& a : state.agents()) {
        agents.push_back({{"id", a.id.value},
                {"color", std::string(1, to_char(a.color))},
                {"x", a.pos.x},
                {"y", a.pos.y}});
    }
    return {{"tick", tick}, {"agents", std::move(agents)}};
}

inline void write_trace(std::ostream& out, const Trace& trace) {
    out << trace_header(trace).dump() << '\n';
    for (std::size_t t = 0; t < trace.states.size(); ++t) {
        nlohmann::json rec = state_record(static_cast<int>(t), trace.states[t]);
        if (trace.finishing_tick && t + 1 == trace.states.size()) {
            rec["finishing"] = true;
        }
        out << rec.dump() << '\n';
    }
}

namespace detail {

inline Direction direction_between(Position from, Position to, std::size_t line) {
    const int dx = to.x - from.x;
    const int dy = to.y - from.y;
    if (std::abs(dx) + std::abs(dy) > 1) {
        throw ParseError("line " + std::to_string(line) + ": agent jumps more than one cell", line);
    }
    if (dx == 1) {
        return Direction::Right;
    }
    if (dx == -1) {
        return Direction::Left;
    }
    if (dy == 1) {
        return Direction::Up;
    }
    return dy == -1 ? Direction::Down : Direction::Stay;
}

}  // namespace detail

/// Reads a trace written by write_trace. Moves are recovered from consecutive states and replayed
/// through apply_step, so an ill-formed file fails with the usual MoveError.
inline Trace read_trace(std::istream& in) {
    Trace trace;
    std::string line;
    std::size_t line_no = 0;
    int width = -1;
    std::size_t agent_count = 0;
    bool finishing = false;
    try {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            const nlohmann::json rec = nlohmann::json::parse(line);
            if (width < 0) {
                width = rec.at("width").get<int>();
                agent_count = rec.at("agent_count").get<std::size_t>();
                trace.policy = rec.at("policy").get<std::string>();
                continue;
            }
            if (rec.at("tick").get<std::size_t>() != trace.states.size()) {
                throw ParseError("line " + std::to_string(line_no) + ": ticks out of order", line_no);
            }
            std::vector<Agent> agents;
            for (const auto& a : rec.at("agents")) {
                const std::string color = a.at("color").get<std::string>();
                if (color != "R" && color != "B") {
                    throw ParseError("line " + std::to_string(line_no) + ": bad color '" + color + "'", line_no);
                }
                agents.push_back({AgentId{a.at("id").get<std::uint32_t>()},
                        color == "R" ? Color::Red : Color::Blue,
                        {a.at("x").get<int>(), a.at("y").get<int>()}});
            }
            if (agents.size() != agent_count) {
                throw ParseError("line " + std::to_string(line_no) + ": agent count differs from header", line_no);
            }
            Configuration state(width, std::move(agents));
            if (!trace.states.empty()) {
                const Configuration& prev = trace.states.back();
                MoveSet moves;
                for (const Agent& a : state.agents()) {
                    const Agent& before = prev.agent(a.id);
                    if (before.color != a.color) {
                        throw ParseError("line " + std::to_string(line_no) + ": agent changes color", line_no);
                    }
                    moves.set(a.id, detail::direction_between(before.pos, a.pos, line_no));
                }
                trace.steps.push_back(std::move(moves));
            }
            trace.states.push_back(std::move(state));
            finishing = rec.value("finishing", false);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
    if (width < 0 || trace.states.empty()) {
        throw ParseError("trace has no header or no states", line_no);
    }
    trace.finishing_tick = finishing;
    rebuild(trace);
    return trace;
}

}  // namespace physort
