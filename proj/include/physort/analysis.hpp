#pragma once

#include <physort/bounds.hpp>
#include <physort/engine.hpp>
#include <physort/grid.hpp>

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace physort {

// Post-hoc instrumentation of traces: persistent per-color labels, red/blue meetings, the per-label
// start-up penalties, and the single-row potential that drives the exclusion dynamics.

/// Per-tick label of every agent. Indices follow Configuration::agents() (ids never change).
class LabelMap {
public:
    LabelMap(std::vector<Agent> roster, std::vector<std::vector<int>> labels)
            : _roster(std::move(roster)), _labels(std::move(labels)) {
        _red = static_cast<int>(std::count_if(
                _roster.begin(), _roster.end(), [](const Agent& a) { return a.color == Color::Red; }));
        _blue = static_cast<int>(_roster.size()) - _red;
    }

    int ticks() const { return static_cast<int>(_labels.size()); }
    int count(Color c) const { return c == Color::Red ? _red : _blue; }

    int label(int tick, std::size_t agent_index) const { return _labels.at(static_cast<std::size_t>(tick))[agent_index]; }
    const std::vector<int>& at(int tick) const { return _labels.at(static_cast<std::size_t>(tick)); }

    /// Index of the agent carrying `label` of color `c` at `tick`.
    std::size_t carrier(int tick, Color c, int label) const {
        const auto& row = at(tick);
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (_roster[i].color == c && row[i] == label) {
                return i;
            }
        }
        throw Error("no " + std::string(1, to_char(c)) + " label " + std::to_string(label) + " at tick " +
                    std::to_string(tick));
    }

    const std::vector<Agent>& roster() const { return _roster; }

private:
    std::vector<Agent> _roster;
    std::vector<std::vector<int>> _labels;
    int _red = 0;
    int _blue = 0;
};

/// Labels start from the t = 0 x-order and are exchanged between two same-color agents on the tick
/// their x-order strictly crosses.
inline LabelMap label_trace(const Trace& trace) {
    const Configuration& first = trace.initial();
    std::vector<Agent> roster(first.agents().begin(), first.agents().end());
    std::vector<std::vector<int>> labels{initial_labels(first)};
    for (std::size_t t = 1; t < trace.states.size(); ++t) {
        auto before = trace.states[t - 1].agents();
        auto after = trace.states[t].agents();
        std::vector<int> next = labels.back();
        std::vector<bool> swapped(roster.size(), false);
        for (std::size_t a = 0; a < roster.size(); ++a) {
            for (std::size_t b = 0; b < roster.size(); ++b) {
                if (a == b || roster[a].color != roster[b].color) {
                    continue;
                }
                if (before[a].pos.x <= before[b].pos.x && after[a].pos.x > after[b].pos.x) {
                    if (swapped[a] || swapped[b]) {
                        throw Error("agent crosses two same-color agents at tick " + std::to_string(t));
                    }
                    swapped[a] = swapped[b] = true;
                    std::swap(next[a], next[b]);
                }
            }
        }
        labels.push_back(std::move(next));
    }
    return LabelMap(std::move(roster), std::move(labels));
}

/// x coordinate of a label's carrier over every state of the trace.
inline std::vector<int> label_track(const Trace& trace, const LabelMap& labels, Color c, int label) {
    std::vector<int> xs;
    for (int t = 0; t < labels.ticks(); ++t) {
        xs.push_back(trace.states[static_cast<std::size_t>(t)].agents()[labels.carrier(t, c, label)].pos.x);
    }
    return xs;
}

struct MeetingEvent {
    int red_label = 0;
    int blue_label = 0;
    int tick = 0;  // the sign flips between states tick - 1 and tick

    friend bool operator==(const MeetingEvent&, const MeetingEvent&) = default;
};

inline int sign(int v) { return (v > 0) - (v < 0); }

/// Every (red label, blue label, tick) whose nonzero x-order sign at tick - 1 differs at tick.
inline std::vector<MeetingEvent> detect_meetings(const Trace& trace, const LabelMap& labels) {
    const int red = labels.count(Color::Red);
    const int blue = labels.count(Color::Blue);
    std::vector<std::vector<int>> red_tracks;
    std::vector<std::vector<int>> blue_tracks;
    for (int i = 1; i <= red; ++i) {
        red_tracks.push_back(label_track(trace, labels, Color::Red, i));
    }
    for (int j = 1; j <= blue; ++j) {
        blue_tracks.push_back(label_track(trace, labels, Color::Blue, j));
    }
    std::vector<MeetingEvent> out;
    for (int t = 1; t < labels.ticks(); ++t) {
        const auto tp = static_cast<std::size_t>(t - 1);
        const auto tn = static_cast<std::size_t>(t);
        for (int i = 1; i <= red; ++i) {
            for (int j = 1; j <= blue; ++j) {
                const auto& r = red_tracks[static_cast<std::size_t>(i - 1)];
                const auto& b = blue_tracks[static_cast<std::size_t>(j - 1)];
                const int s0 = sign(r[tp] - b[tp]);
                if (s0 != 0 && s0 != sign(r[tn] - b[tn])) {
                    out.push_back({i, j, t});
                }
            }
        }
    }
    return out;
}

/// Start-up penalty of one label. v = 0 iff the label moved toward its goal at every step taken
/// before both its first arrival at its goal column and its first meeting with the opposite color's
/// last label.
struct LabelPenalty {
    int label = 0;
    int v = 1;
    std::optional<int> arrival;  // first state index at the goal column
    std::optional<int> meeting;  // first meeting tick with the opposite color's last label
    bool incomplete = false;     // neither event happened within the trace
};

struct ViDiagnostics {
    std::vector<LabelPenalty> red;   // red[i - 1] is label i
    std::vector<LabelPenalty> blue;  // blue[i - 1] is label i
};

namespace detail {

inline LabelPenalty label_penalty(const std::vector<int>& xs, int label, int goal, int heading,
        std::optional<int> meeting) {
    LabelPenalty p;
    p.label = label;
    p.meeting = meeting;
    for (std::size_t t = 0; t < xs.size(); ++t) {
        if ((xs[t] - goal) * heading >= 0) {
            p.arrival = static_cast<int>(t);
            break;
        }
    }
    constexpr int kNever = std::numeric_limits<int>::max();
    const int window = std::min(p.arrival.value_or(kNever), p.meeting.value_or(kNever));
    if (window == kNever) {
        p.incomplete = true;
        p.v = 1;
        return p;
    }
    p.v = 0;
    for (int s = 0; s < window; ++s) {
        const auto i = static_cast<std::size_t>(s);
        if ((xs[i + 1] - xs[i]) * heading <= 0) {
            p.v = 1;
            break;
        }
    }
    return p;
}

}  // namespace detail

/// Blue label i aims at column i and watches red label n_red; red label i aims at column
/// width - i + 1 and watches blue label n_blue.
inline ViDiagnostics vi_diagnostics(const Trace& trace, const LabelMap& labels,
        const std::vector<MeetingEvent>& meetings) {
    const int red = labels.count(Color::Red);
    const int blue = labels.count(Color::Blue);
    const int width = trace.initial().width();
    auto first_meeting = [&](Color c, int label) -> std::optional<int> {
        for (const MeetingEvent& e : meetings) {
            if (c == Color::Blue && e.blue_label == label && e.red_label == red) {
                return e.tick;
            }
            if (c == Color::Red && e.red_label == label && e.blue_label == blue) {
                return e.tick;
            }
        }
        return std::nullopt;
    };
    ViDiagnostics out;
    for (int i = 1; i <= blue; ++i) {
        out.blue.push_back(detail::label_penalty(
                label_track(trace, labels, Color::Blue, i), i, i, -1, first_meeting(Color::Blue, i)));
    }
    for (int i = 1; i <= red; ++i) {
        out.red.push_back(detail::label_penalty(
                label_track(trace, labels, Color::Red, i), i, width - i + 1, 1, first_meeting(Color::Red, i)));
    }
    return out;
}

/// Per-label lower bound on the makespan of a normal configuration: max over labels of
/// f(label's t = 0 carrier) + v.
struct LabelBoundCheck {
    int makespan = 0;
    int label_bound = 0;
    int f_max_plus_v = 0;
    bool holds = false;  // makespan >= label_bound
};

inline LabelBoundCheck check_label_bound(const Trace& trace) {
    if (!trace.makespan) {
        throw Error("label bound needs a completed trace");
    }
    const BoundReport report = bound_report(trace.initial());
    const LabelMap labels = label_trace(trace);
    const ViDiagnostics diag = vi_diagnostics(trace, labels, detect_meetings(trace, labels));
    LabelBoundCheck check;
    check.makespan = *trace.makespan;
    check.f_max_plus_v = report.lower_bound;
    for (Color c : {Color::Red, Color::Blue}) {
        const auto& penalties = c == Color::Red ? diag.red : diag.blue;
        for (const LabelPenalty& p : penalties) {
            const int f = report.agents[labels.carrier(0, c, p.label)].f;
            check.label_bound = std::max(check.label_bound, f + p.v);
        }
    }
    check.holds = check.makespan >= check.label_bound;
    return check;
}

/// f_perp_max at every state from `from_tick` up to the makespan (or the end of the trace).
/// Requires each color to sit on a single row, the two colors on different rows. For an agent,
/// front counts empty cells ahead in its row and back counts same-color agents behind it; its value
/// is 0 when front is 0, else front + back.
inline std::vector<int> row_potential(const Trace& trace, int from_tick) {
    const int last = trace.makespan.value_or(static_cast<int>(trace.states.size()) - 1);
    if (from_tick < 0 || from_tick > last) {
        throw OutOfRange("row_potential: tick " + std::to_string(from_tick) + " outside the trace");
    }
    std::vector<int> out;
    for (int t = from_tick; t <= last; ++t) {
        const Configuration& c = trace.states[static_cast<std::size_t>(t)];
        std::optional<int> row[2];
        for (const Agent& a : c.agents()) {
            auto& r = row[a.color == Color::Red ? 0 : 1];
            if (r && *r != a.pos.y) {
                throw Error("row_potential: tick " + std::to_string(t) + ": agent " + std::to_string(a.id.value) +
                            " leaves its color's row");
            }
            r = a.pos.y;
        }
        if (row[0] && row[1] && *row[0] == *row[1]) {
            throw Error("row_potential: tick " + std::to_string(t) + ": both colors share row " +
                        std::to_string(*row[0]));
        }
        int best = 0;
        for (const Agent& a : c.agents()) {
            int front = 0;
            int back = 0;
            for (int x = 1; x <= c.width(); ++x) {
                const bool ahead = (x - a.pos.x) * heading(a.color) > 0;
                if (ahead && !c.occupied({x, a.pos.y})) {
                    ++front;
                }
            }
            for (const Agent& b : c.agents()) {
                if (b.color == a.color && (a.pos.x - b.pos.x) * heading(a.color) > 0) {
                    ++back;
                }
            }
            best = std::max(best, front == 0 ? 0 : front + back);
        }
        out.push_back(best);
    }
    return out;
}

}  // namespace physort
