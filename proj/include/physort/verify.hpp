#pragma once

#include <physort/algorithms.hpp>
#include <physort/analysis.hpp>
#include <physort/bounds.hpp>
#include <physort/engine.hpp>
#include <physort/grid.hpp>
#include <physort/oracle.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace physort {

// Exhaustive verification over every bottom-row string of each width. Work is split into
// contiguous index ranges, one per worker, and merged in range order so reports are reproducible.

enum class Suite { Alg1, Alg2, Alg3, Oracle, Lemmas, Traces, Row };

inline const std::map<std::string, Suite>& suite_names() {
    static const std::map<std::string, Suite> names{{"alg1", Suite::Alg1}, {"alg2", Suite::Alg2},
            {"alg3", Suite::Alg3}, {"oracle", Suite::Oracle}, {"lemmas", Suite::Lemmas},
            {"traces", Suite::Traces}, {"row", Suite::Row}};
    return names;
}

/// Enumeration order: widths ascending, then lexicographic over ".RB".
inline std::string config_string(int width, std::uint64_t index) {
    static constexpr char kAlphabet[] = {'.', 'R', 'B'};
    std::string s(static_cast<std::size_t>(width), '.');
    for (int i = width - 1; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = kAlphabet[index % 3];
        index /= 3;
    }
    return s;
}

inline std::uint64_t count_strings(int width) {
    std::uint64_t n = 1;
    for (int i = 0; i < width; ++i) {
        n *= 3;
    }
    return n;
}

struct Counterexample {
    std::string check;
    std::string config;
    std::string expected;
    std::string actual;
};

struct CheckTally {
    std::string name;
    std::size_t checked = 0;
    std::size_t passed = 0;
    std::optional<Counterexample> first_failure;
    std::uint64_t first_failure_index = 0;

    bool ok() const { return checked == passed; }
};

struct VerifyReport {
    int min_width = 1;
    int max_width = 0;
    std::size_t configs = 0;
    std::size_t normal = 0;
    std::size_t unsorted = 0;
    std::vector<CheckTally> checks;
    std::optional<Counterexample> counterexample;  // earliest failing configuration across all checks
    double seconds = 0.0;

    bool ok() const { return !counterexample.has_value(); }
};

struct VerifyOptions {
    int max_width = 9;
    int oracle_max_width = 5;
    int row_max_width = 12;
    int width_ceiling = 9;
    int oracle_width_ceiling = 5;
    int row_width_ceiling = 12;
    std::set<Suite> suites{Suite::Alg1, Suite::Alg2, Suite::Alg3, Suite::Oracle, Suite::Lemmas, Suite::Traces,
            Suite::Row};
    unsigned workers = 1;
    /// Replaces bound_report(c).lower_bound in the alg1 suite; used to self-test the harness.
    std::function<int(const Configuration&)> normal_bound;
};

// ---- trace-level properties; each returns a failure description or nothing ----

/// A label's carrier moves at most one column per tick.
inline std::optional<std::string> check_label_speed(const Trace& trace, const LabelMap& labels) {
    for (int t = 0; t + 1 < labels.ticks(); ++t) {
        for (Color c : {Color::Red, Color::Blue}) {
            for (int i = 1; i <= labels.count(c); ++i) {
                const int a = trace.states[static_cast<std::size_t>(t)].agents()[labels.carrier(t, c, i)].pos.x;
                const int b =
                        trace.states[static_cast<std::size_t>(t + 1)].agents()[labels.carrier(t + 1, c, i)].pos.x;
                if (std::abs(a - b) > 1) {
                    return std::string(1, to_char(c)) + " label " + std::to_string(i) + " jumps at tick " +
                           std::to_string(t + 1);
                }
            }
        }
    }
    return std::nullopt;
}

/// No label takes part in two meetings on the same tick.
inline std::optional<std::string> check_single_meeting(const std::vector<MeetingEvent>& meetings) {
    std::map<std::tuple<int, int, int>, int> seen;
    for (const MeetingEvent& e : meetings) {
        for (auto key : {std::tuple{e.tick, 0, e.red_label}, std::tuple{e.tick, 1, e.blue_label}}) {
            if (++seen[key] > 1) {
                return "label meets twice at tick " + std::to_string(e.tick);
            }
        }
    }
    return std::nullopt;
}

/// f_perp_max strictly decreases while positive and ends at 0.
inline std::optional<std::string> check_potential_decrease(const std::vector<int>& potential) {
    for (std::size_t i = 1; i < potential.size(); ++i) {
        if (potential[i - 1] > 0 && potential[i] >= potential[i - 1]) {
            return "f_perp_max does not decrease at step " + std::to_string(i);
        }
    }
    if (!potential.empty() && potential.back() != 0) {
        return "f_perp_max ends at " + std::to_string(potential.back());
    }
    return std::nullopt;
}

/// f_max of a single-color configuration. An agent with nothing free ahead counts 0, as in f_perp;
/// with literal set, front/back are summed regardless.
inline int uniform_f_max(const Configuration& config, bool literal = false) {
    int best = 0;
    for (const Agent& a : config.agents()) {
        const FrontBack fb = front_back(config, a.id);
        best = std::max(best, fb.front == 0 && !literal ? 0 : fb.f());
    }
    return best;
}

namespace detail {

struct Tallies {
    std::vector<CheckTally> checks;
    std::map<std::string, std::size_t> by_name;
    std::size_t configs = 0;
    std::size_t normal = 0;
    std::size_t unsorted = 0;
    std::size_t alg3_slower = 0;

    void record(const std::string& name, bool pass, std::uint64_t index, const std::string& config,
            const std::string& expected, const std::string& actual) {
        auto [it, fresh] = by_name.emplace(name, checks.size());
        if (fresh) {
            checks.emplace_back().name = name;
        }
        CheckTally& tally = checks[it->second];
        ++tally.checked;
        if (pass) {
            ++tally.passed;
        } else if (!tally.first_failure) {
            tally.first_failure = Counterexample{name, config, expected, actual};
            tally.first_failure_index = index;
        }
    }

    void record(const std::string& name, const std::optional<std::string>& failure, std::uint64_t index,
            const std::string& config) {
        record(name, !failure, index, config, "holds", failure.value_or(""));
    }

    void merge(const Tallies& other) {
        for (const CheckTally& t : other.checks) {
            auto [it, fresh] = by_name.emplace(t.name, checks.size());
            if (fresh) {
                checks.emplace_back().name = t.name;
            }
            CheckTally& mine = checks[it->second];
            mine.checked += t.checked;
            mine.passed += t.passed;
            if (!mine.first_failure && t.first_failure) {
                mine.first_failure = t.first_failure;
                mine.first_failure_index = t.first_failure_index;
            }
        }
        configs += other.configs;
        normal += other.normal;
        unsorted += other.unsorted;
        alg3_slower += other.alg3_slower;
    }
};

inline std::string str(int v) { return std::to_string(v); }

inline void check_traces(Tallies& out, std::uint64_t index, const std::string& s, const Trace& trace, bool normal,
        bool alg1) {
    const LabelMap labels = label_trace(trace);
    const auto meetings = detect_meetings(trace, labels);
    out.record("label speed <= 1", check_label_speed(trace, labels), index, s);
    out.record("one meeting per label per tick", check_single_meeting(meetings), index, s);
    if (normal) {
        const LabelBoundCheck lb = check_label_bound(trace);
        out.record("makespan >= max(f + v_i)", lb.holds, index, s, ">= " + str(lb.label_bound), str(lb.makespan));
        if (alg1) {
            out.record("alg1 max(f + v_i) >= f_max + V", lb.label_bound >= lb.f_max_plus_v, index, s,
                    ">= " + str(lb.f_max_plus_v), str(lb.label_bound));
        }
    }
    if (alg1 && trace.makespan && *trace.makespan >= 1) {
        out.record("alg1 f_perp_max strictly decreases", check_potential_decrease(row_potential(trace, 1)), index, s);
    }
}

inline void check_config(Tallies& out, std::uint64_t index, const std::string& s, const VerifyOptions& opt) {
    const Configuration c = parse_config(s);
    const bool sorted = is_sorted(c);
    const bool normal = c.size() > 0 && is_normal(c);
    ++out.configs;
    out.normal += normal ? 1 : 0;
    out.unsorted += sorted ? 0 : 1;
    auto on = [&](Suite suite) { return opt.suites.count(suite) > 0; };
    const StarReport star = star_report(c);

    std::optional<Trace> alg1;
    std::optional<Trace> alg2;
    std::optional<Trace> alg3;
    if (normal && (on(Suite::Alg1) || on(Suite::Alg3) || on(Suite::Oracle) || on(Suite::Traces))) {
        Alg1Policy p(c);
        alg1 = run_policy(c, p);
    }
    if (on(Suite::Alg2) || on(Suite::Oracle) || on(Suite::Traces) || on(Suite::Lemmas)) {
        Alg2Policy p(c);
        alg2 = run_policy(c, p);
    }
    if (normal && (on(Suite::Alg3) || on(Suite::Oracle) || on(Suite::Traces))) {
        Alg3Policy p(c);
        alg3 = run_policy(c, p);
    }

    if (on(Suite::Alg1) && normal) {
        const int bound = opt.normal_bound ? opt.normal_bound(c) : bound_report(c).lower_bound;
        out.record("alg1 makespan = f_max + V", *alg1->makespan == bound, index, s, str(bound), str(*alg1->makespan));
    }
    if (on(Suite::Alg2)) {
        out.record("alg2 makespan = f*_max + V*", *alg2->makespan == star.lower_bound, index, s,
                str(star.lower_bound), str(*alg2->makespan));
    }
    if (on(Suite::Alg3) && normal) {
        const int gap = *alg3->makespan - *alg1->makespan;
        out.record("alg3 - alg1 in {0, 1}", gap == 0 || gap == 1, index, s, "0 or 1", str(gap));
        out.alg3_slower += gap == 1 ? 1 : 0;
    }
    if (on(Suite::Oracle) && c.width() <= opt.oracle_max_width) {
        const int best = optimal_makespan(c);
        out.record("oracle = f*_max + V*", best == star.lower_bound, index, s, str(star.lower_bound), str(best));
        int fastest = *alg2->makespan;
        if (normal) {
            fastest = std::min({fastest, *alg1->makespan, *alg3->makespan});
        }
        out.record("no policy beats the oracle", fastest >= best, index, s, ">= " + str(best), str(fastest));
        const int mirrored = optimal_makespan(mirror(c));
        out.record("oracle mirror invariance", mirrored == best, index, s, str(best), str(mirrored));
    }
    if (on(Suite::Lemmas)) {
        out.record("0 <= f*_max + V* <= 2m", star.lower_bound >= 0 && star.lower_bound <= 2 * c.width(), index, s,
                "[0, " + str(2 * c.width()) + "]", str(star.lower_bound));
        if (!star.core.empty()) {
            bool inside = true;
            for (AgentId id : star.star_critical) {
                inside = inside && star.core.contains(c.agent(id).pos.x);
            }
            out.record("f*-critical agents lie in S", inside, index, s, "inside", inside ? "inside" : "outside");
        }
        const StarReport ms = star_report(mirror(c));
        const bool same = ms.lower_bound == star.lower_bound && ms.star_critical == star.star_critical;
        out.record("mirror symmetry of f*_max + V*", same, index, s, str(star.lower_bound), str(ms.lower_bound));
        Alg2Policy mp(mirror(c));
        const int mm = *run_policy(mirror(c), mp).makespan;
        out.record("mirror symmetry of alg2 makespan", mm == *alg2->makespan, index, s, str(*alg2->makespan), str(mm));
        if (normal) {
            const BoundReport b = bound_report(c);
            out.record("star bound = bound on normal configs",
                    b.f_max == star.f_star_max && b.v == star.v_star, index, s, str(b.lower_bound),
                    str(star.lower_bound));
            if (b.both_colors_critical()) {
                bool facing = false;
                for (AgentId r : b.critical) {
                    for (AgentId bl : b.critical) {
                        const Agent& ra = c.agent(r);
                        const Agent& ba = c.agent(bl);
                        facing = facing || (ra.color == Color::Red && ba.color == Color::Blue && ba.pos.x > ra.pos.x);
                    }
                }
                out.record("critical agents face each other", facing, index, s, "facing", facing ? "facing" : "apart");
            }
            const BoundReport mb = bound_report(mirror(c));
            out.record("mirror symmetry of f_max + V", mb.lower_bound == b.lower_bound && mb.critical == b.critical,
                    index, s, str(b.lower_bound), str(mb.lower_bound));
        }
    }
    if (on(Suite::Traces)) {
        check_traces(out, index, s, *alg2, normal, false);
        if (normal) {
            check_traces(out, index, s, *alg1, true, true);
            check_traces(out, index, s, *alg3, true, false);
        }
    }
}

inline void check_row_patterns(Tallies& out, int max_width) {
    std::uint64_t index = 0;
    for (int m = 1; m <= max_width; ++m) {
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits, ++index) {
            std::string row(static_cast<std::size_t>(m), '.');
            for (int i = 0; i < m; ++i) {
                if (bits >> (m - 1 - i) & 1u) {
                    row[static_cast<std::size_t>(i)] = 'A';
                }
            }
            for (Direction d : {Direction::Right, Direction::Left}) {
                const Trace trace = single_row_trace(row, d);
                const int expected = uniform_f_max(single_row_config(row, d));
                const std::string tag = row + (d == Direction::Right ? " right" : " left");
                out.record("single-row completion = f_max", *trace.makespan == expected, index, tag, str(expected),
                        str(*trace.makespan));
                const char goal_end = d == Direction::Right ? row.back() : row.front();
                if (goal_end == '.') {
                    const int literal = uniform_f_max(single_row_config(row, d), true);
                    out.record("single-row completion = literal f_max (goal cell empty)", *trace.makespan == literal,
                            index, tag, str(literal), str(*trace.makespan));
                }
                out.record("single-row f_perp_max strictly decreases",
                        check_potential_decrease(row_potential(trace, 0)), index, tag);
            }
        }
    }
}

}  // namespace detail

inline VerifyReport verify(const VerifyOptions& opt) {
    if (opt.max_width < 1 || opt.max_width > opt.width_ceiling) {
        throw OutOfRange("max width must lie in 1.." + std::to_string(opt.width_ceiling));
    }
    if (opt.suites.count(Suite::Oracle) && opt.oracle_max_width > opt.oracle_width_ceiling) {
        throw OutOfRange("oracle max width must not exceed " + std::to_string(opt.oracle_width_ceiling));
    }
    if (opt.suites.count(Suite::Row) && (opt.row_max_width < 1 || opt.row_max_width > opt.row_width_ceiling)) {
        throw OutOfRange("row max width must lie in 1.." + std::to_string(opt.row_width_ceiling));
    }
    const auto start = std::chrono::steady_clock::now();

    std::vector<std::pair<int, std::uint64_t>> offsets;  // (width, first global index)
    std::uint64_t total = 0;
    for (int m = 1; m <= opt.max_width; ++m) {
        offsets.emplace_back(m, total);
        total += count_strings(m);
    }
    auto locate = [&](std::uint64_t g) {
        std::size_t k = offsets.size() - 1;
        while (offsets[k].second > g) {
            --k;
        }
        return config_string(offsets[k].first, g - offsets[k].second);
    };

    const unsigned workers = std::max(1u, opt.workers);
    std::vector<detail::Tallies> parts(workers);
    auto run_range = [&](unsigned w) {
        const std::uint64_t lo = total * w / workers;
        const std::uint64_t hi = total * (w + 1) / workers;
        for (std::uint64_t g = lo; g < hi; ++g) {
            detail::check_config(parts[w], g, locate(g), opt);
        }
    };
    if (workers == 1) {
        run_range(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(run_range, w);
        }
    }

    detail::Tallies all;
    for (const auto& part : parts) {
        all.merge(part);
    }
    if (opt.suites.count(Suite::Alg3)) {
        all.record("alg3 is sometimes one tick slower", all.alg3_slower > 0, total, "(all normal configs)",
                "at least one", std::to_string(all.alg3_slower));
    }
    if (opt.suites.count(Suite::Row)) {
        detail::Tallies rows;
        detail::check_row_patterns(rows, opt.row_max_width);
        for (CheckTally& t : rows.checks) {
            t.first_failure_index += total + 1;
        }
        all.merge(rows);
    }

    VerifyReport report;
    report.max_width = opt.max_width;
    report.configs = all.configs;
    report.normal = all.normal;
    report.unsorted = all.unsorted;
    report.checks = all.checks;
    std::optional<std::uint64_t> earliest;
    for (const CheckTally& t : report.checks) {
        if (t.first_failure && (!earliest || t.first_failure_index < *earliest)) {
            earliest = t.first_failure_index;
            report.counterexample = t.first_failure;
        }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace physort
