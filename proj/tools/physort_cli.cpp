// physort: command-line front end for the two-row physical sorting library.

#include <physort/physort.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

using namespace physort;

namespace {

enum Exit { kOk = 0, kFailure = 1, kBadInput = 2, kLimits = 3 };

struct BadInput : Error {
    using Error::Error;
};

std::string read_config(const std::string& positional, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            throw BadInput("cannot open " + file);
        }
        std::string line;
        std::getline(in, line);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
            line.pop_back();
        }
        return line;
    }
    if (positional.empty()) {
        throw BadInput("no configuration given (positional or --file)");
    }
    return positional;
}

std::string core_string(const NormalCore& core) {
    if (core.empty()) {
        return "empty";
    }
    return "[" + std::to_string(core.interval->left) + "," + std::to_string(core.interval->right) + "]";
}

void print_bound(const Configuration& c, bool json_lines) {
    const StarReport star = star_report(c);
    const bool normal = c.size() > 0 && is_normal(c);
    std::optional<BoundReport> plain;
    if (normal) {
        plain = bound_report(c);
    }
    if (json_lines) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            const AgentStar& a = star.agents[i];
            std::cout << nlohmann::json{{"id", a.id.value}, {"color", std::string(1, to_char(a.color))},
                                 {"x", a.x}, {"front", a.front}, {"back", a.back}, {"f", a.front + a.back},
                                 {"f_star", a.f_star}, {"in_core", a.in_core}}
                                 .dump()
                      << '\n';
        }
        nlohmann::json summary{{"normal", normal}, {"f_star_max", star.f_star_max}, {"v_star", star.v_star},
                {"lower_bound", star.lower_bound}};
        summary["core"] = star.core.empty() ? nlohmann::json(nullptr)
                                            : nlohmann::json{star.core.interval->left, star.core.interval->right};
        summary["f_max"] = plain ? nlohmann::json(plain->f_max) : nlohmann::json(nullptr);
        summary["v"] = plain ? nlohmann::json(plain->v) : nlohmann::json(nullptr);
        std::cout << summary.dump() << '\n';
        return;
    }
    std::cout << "  id color   x front  back     f    f*\n";
    for (const AgentStar& a : star.agents) {
        std::cout << std::setw(4) << a.id.value << std::setw(6) << to_char(a.color) << std::setw(4) << a.x
                  << std::setw(6) << a.front << std::setw(6) << a.back << std::setw(6) << a.front + a.back
                  << std::setw(6) << a.f_star << '\n';
    }
    if (plain) {
        std::cout << "f_max=" << plain->f_max << " V=" << plain->v << '\n';
    } else {
        std::cout << "f_max=n/a V=n/a (not normal)\n";
    }
    std::cout << "S=" << core_string(star.core) << " f*_max=" << star.f_star_max << " V*=" << star.v_star << '\n';
    std::cout << "lower_bound=" << star.lower_bound << '\n';
}

void render(const Trace& trace) {
    for (std::size_t t = 0; t < trace.states.size(); ++t) {
        std::cout << "t=" << t;
        if (trace.finishing_tick && t + 1 == trace.states.size()) {
            std::cout << " (finishing)";
        }
        std::cout << '\n' << render_frame(trace.states[t]) << "\n\n";
    }
}

void emit_trace(const Trace& trace, const std::string& path, bool show) {
    if (!path.empty()) {
        std::ofstream out(path);
        if (!out) {
            throw BadInput("cannot write " + path);
        }
        write_trace(out, trace);
    }
    if (show) {
        render(trace);
    }
}

void print_analysis(const Trace& trace) {
    const LabelMap labels = label_trace(trace);
    const auto meetings = detect_meetings(trace, labels);
    const ViDiagnostics diag = vi_diagnostics(trace, labels, meetings);
    std::cout << "policy=" << trace.policy << " width=" << trace.initial().width()
              << " agents=" << trace.initial().size() << " ticks=" << trace.ticks() << '\n';
    if (trace.makespan) {
        std::cout << "makespan=" << *trace.makespan << '\n';
    } else {
        std::cout << "makespan=unsorted\n";
    }
    std::cout << "labels (id:label per tick)\n";
    for (int t = 0; t < labels.ticks(); ++t) {
        std::cout << "  t=" << t << ':';
        for (std::size_t i = 0; i < labels.roster().size(); ++i) {
            std::cout << ' ' << labels.roster()[i].id.value << to_char(labels.roster()[i].color) << ':'
                      << labels.label(t, i);
        }
        std::cout << '\n';
    }
    std::cout << "meetings (red label, blue label, tick)\n";
    for (const MeetingEvent& e : meetings) {
        std::cout << "  R" << e.red_label << " B" << e.blue_label << " t=" << e.tick << '\n';
    }
    auto row = [](char color, const LabelPenalty& p) {
        std::cout << "  " << color << p.label << " v=" << p.v << " arrival="
                  << (p.arrival ? std::to_string(*p.arrival) : "-") << " meeting="
                  << (p.meeting ? std::to_string(*p.meeting) : "-") << (p.incomplete ? " incomplete" : "") << '\n';
    };
    std::cout << "v_i\n";
    for (const LabelPenalty& p : diag.red) {
        row('R', p);
    }
    for (const LabelPenalty& p : diag.blue) {
        row('B', p);
    }
    const Configuration& first = trace.initial();
    if (trace.makespan && first.size() > 0 && is_normal(first)) {
        const LabelBoundCheck check = check_label_bound(trace);
        std::cout << "label bound: makespan=" << check.makespan << " max(f+v_i)=" << check.label_bound
                  << " f_max+V=" << check.f_max_plus_v << (check.holds ? " holds" : " VIOLATED") << '\n';
        if (!check.holds) {
            throw Error("label bound violated");
        }
    } else {
        std::cout << "label bound: n/a (needs a completed trace of a normal configuration)\n";
    }
}

std::set<Suite> parse_suites(const std::string& list) {
    std::set<Suite> out;
    std::stringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ',')) {
        auto it = suite_names().find(name);
        if (it == suite_names().end()) {
            throw BadInput("unknown suite '" + name + "'");
        }
        out.insert(it->second);
    }
    return out;
}

int print_verify(const VerifyReport& r) {
    std::cout << "widths " << r.min_width << ".." << r.max_width << ": configs=" << r.configs
              << " normal=" << r.normal << " unsorted=" << r.unsorted << '\n';
    for (const CheckTally& t : r.checks) {
        std::cout << (t.ok() ? "  ok   " : "  FAIL ") << t.name << ": " << t.passed << "/" << t.checked << '\n';
    }
    std::cout << std::fixed << std::setprecision(2) << "elapsed " << r.seconds << " s\n";
    if (r.counterexample) {
        const Counterexample& c = *r.counterexample;
        std::cout << "counterexample: \"" << c.config << "\" check=\"" << c.check << "\" expected=" << c.expected
                  << " actual=" << c.actual << '\n';
        return kFailure;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-row physical sorting: bounds, policies, oracle and exhaustive verification"};
    app.require_subcommand(1);

    std::string config_arg;
    std::string config_file;
    bool json_lines = false;

    auto* bound = app.add_subcommand("bound", "per-agent front/back/f table and the makespan lower bound");
    bound->add_option("config", config_arg, "bottom row over {R,B,.}");
    bound->add_option("--file", config_file, "read the configuration from a file");
    bound->add_flag("--json-lines", json_lines, "line-delimited JSON records");

    auto* run = app.add_subcommand("run", "run a policy and report its makespan");
    std::string alg = "alg2";
    std::string dir = "right";
    std::string trace_path;
    bool show = false;
    bool finish = false;
    int max_ticks = 0;
    run->add_option("--alg", alg, "alg1 | alg2 | alg3 | row")
            ->check(CLI::IsMember({"alg1", "alg2", "alg3", "row"}));
    run->add_option("config", config_arg, "bottom row over {R,B,.}, or {A,.} for row");
    run->add_option("--file", config_file, "read the configuration from a file");
    run->add_option("--dir", dir, "row direction")->check(CLI::IsMember({"left", "right"}));
    run->add_option("--trace", trace_path, "write the trace as line-delimited JSON");
    run->add_flag("--render", show, "print one ASCII frame per tick");
    run->add_flag("--finish-bottom", finish, "append one tick lowering every agent to the bottom row");
    run->add_option("--max-ticks", max_ticks, "tick cap (default 4m + 4)");

    auto* oracle = app.add_subcommand("oracle", "optimal makespan by breadth-first search");
    std::size_t max_states = SearchLimits{}.max_states;
    int max_depth = 0;
    oracle->add_option("config", config_arg, "bottom row over {R,B,.}");
    oracle->add_option("--file", config_file, "read the configuration from a file");
    oracle->add_option("--max-states", max_states, "visited-state cap");
    oracle->add_option("--max-depth", max_depth, "tick cap (default 2m + 2)");

    auto* analyze = app.add_subcommand("analyze", "labels, meetings and v_i of a trace file");
    std::string trace_file;
    analyze->add_option("trace", trace_file, "trace written by run --trace")->required();

    auto* verify_cmd = app.add_subcommand("verify", "exhaustive verification over all configurations");
    VerifyOptions vopt;
    std::string suites;
    verify_cmd->add_option("--max-width", vopt.max_width, "widest configuration checked");
    verify_cmd->add_option("--oracle-max-width", vopt.oracle_max_width, "widest configuration given to the oracle");
    verify_cmd->add_option("--row-max-width", vopt.row_max_width, "widest single-row pattern");
    verify_cmd->add_option("--width-ceiling", vopt.width_ceiling, "refuse max widths above this");
    verify_cmd->add_option("--oracle-ceiling", vopt.oracle_width_ceiling, "refuse oracle widths above this");
    verify_cmd->add_option("--suites", suites, "comma list of alg1,alg2,alg3,oracle,lemmas,traces,row");
    verify_cmd->add_option("--workers", vopt.workers, "worker threads");

    auto* random = app.add_subcommand("random", "random bottom-row configuration");
    int rm = 0;
    int rn1 = 0;
    int rn2 = 0;
    std::uint64_t seed = 0;
    bool normal_only = false;
    random->add_option("--m", rm, "width")->required();
    random->add_option("--n1", rn1, "red agents")->required();
    random->add_option("--n2", rn2, "blue agents")->required();
    random->add_option("--seed", seed, "RNG seed");
    random->add_flag("--normal-only", normal_only, "leftmost red, rightmost blue");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*bound) {
            print_bound(parse_config(read_config(config_arg, config_file)), json_lines);
            return kOk;
        }
        if (*run) {
            const std::string text = read_config(config_arg, config_file);
            if (alg == "row") {
                const Direction d = dir == "left" ? Direction::Left : Direction::Right;
                const Trace trace = single_row_trace(text, d);
                emit_trace(trace, trace_path, show);
                std::cout << "completion=" << *trace.makespan << '\n';
                return kOk;
            }
            const Configuration c = parse_config(text);
            const int cap = max_ticks > 0 ? max_ticks : default_max_ticks(c.width());
            Trace trace;
            int lower = 0;
            if (alg == "alg1") {
                Alg1Policy p(c, finish);
                lower = bound_report(c).lower_bound;
                trace = run_policy(c, p, cap);
            } else if (alg == "alg3") {
                Alg3Policy p(c, finish);
                lower = bound_report(c).lower_bound;
                trace = run_policy(c, p, cap);
            } else {
                Alg2Policy p(c, finish);
                lower = star_report(c).lower_bound;
                trace = run_policy(c, p, cap);
            }
            emit_trace(trace, trace_path, show);
            std::cout << "makespan=" << *trace.makespan << " bound=" << lower << '\n';
            return kOk;
        }
        if (*oracle) {
            const Configuration c = parse_config(read_config(config_arg, config_file));
            SearchLimits limits = SearchLimits::defaults(c.width());
            limits.max_states = max_states;
            if (max_depth > 0) {
                limits.max_depth = max_depth;
            }
            std::cout << "optimal=" << optimal_makespan(c, limits) << '\n';
            return kOk;
        }
        if (*analyze) {
            std::ifstream in(trace_file);
            if (!in) {
                throw BadInput("cannot open " + trace_file);
            }
            print_analysis(read_trace(in));
            return kOk;
        }
        if (*verify_cmd) {
            if (!suites.empty()) {
                vopt.suites = parse_suites(suites);
            }
            return print_verify(verify(vopt));
        }
        if (*random) {
            std::cout << random_config(rm, rn1, rn2, seed, normal_only) << '\n';
            return kOk;
        }
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const NotNormal& e) {
        std::cerr << "error: NotNormal: " << e.what() << '\n';
        return kBadInput;
    } catch (const NoAgents& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const OutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const ResourceExhausted& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kLimits;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
