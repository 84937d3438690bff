#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xc/config.hpp"
#include "xc/diag.hpp"
#include "xc/eval.hpp"
#include "xc/infer.hpp"
#include "xc/parse.hpp"
#include "xc/sim.hpp"
#include "xc/stdlib.hpp"
#include "xc/trace.hpp"
#include "xc/value.hpp"

namespace {

using namespace xc;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << content;
}

int cmd_typecheck(const std::string& file) {
    Program prog = load_program(slurp(file));
    TypeReport report = typecheck_program(prog.surface);
    for (const auto& item : report.defs) {
        if (item.from_prelude) continue;
        std::cout << item.name << " : " << item.type << "\n";
    }
    std::cout << "main : " << report.main_type << "\n";
    return 0;
}

int cmd_run(const std::string& file, int rounds, const std::vector<std::string>& sensor_flags,
            const std::vector<std::string>& tree_files) {
    Program prog = load_program(slurp(file));
    typecheck_program(prog.surface);

    SensorMap overrides;
    for (const std::string& flag : sensor_flags) {
        size_t eq = flag.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--sensor expects name=value, got '" + flag + "'");
        overrides[flag.substr(0, eq)] = parse_nvalue(flag.substr(eq + 1));
    }

    const DeviceId self = 0;
    TreeMap neighbours;
    for (const std::string& path : tree_files) {
        std::string text = slurp(path);
        size_t nl = text.find('\n');
        if (nl == std::string::npos)
            throw ConfigError("tree file must start with a device id line: " + path);
        DeviceId id = std::stoll(text.substr(0, nl));
        neighbours[id] = parse_tree(text.substr(nl + 1));
    }

    for (int r = 0; r < rounds; ++r) {
        SensorMap sensors;
        sensors["time"] = NValue::lift(Literal{double(r)});
        sensors["gps"] = NValue::lift(make_pair_lit(Literal{0.0}, Literal{0.0}));
        sensors["temperature"] = NValue::lift(Literal{0.0});
        sensors["smoke"] = NValue::lift(Literal{0.0});
        std::map<DeviceId, Literal> dists;
        dists.emplace(self, Literal{0.0});
        for (const auto& [d, _] : neighbours)
            if (d != self) dists.emplace(d, Literal{1.0});
        sensors["senseDist"] =
            NValue(Literal{std::numeric_limits<double>::infinity()}, std::move(dists));
        for (const auto& [name, v] : overrides) sensors[name] = v;

        EvalResult res = evaluate_round(prog.core, self, neighbours, sensors);
        std::cout << "round " << (r + 1) << ": " << res.value.render() << "\n";
        neighbours[self] = res.tree;
    }
    return 0;
}

double stabilisation_time(const SimResult& sim, const SimConfig& cfg) {
    auto values_at = [&](double t) {
        std::vector<std::string> vals;
        for (const DeviceSnapshot& s :
             snapshot_at(sim.trace, sim.initial_positions, cfg.moves, t))
            vals.push_back(s.value);
        return vals;
    };
    for (double t = 0; t + 2 * cfg.period <= cfg.end_time; t += cfg.period) {
        auto a = values_at(t);
        if (a == values_at(t + cfg.period) && a == values_at(t + 2 * cfg.period)) return t;
    }
    return -1;
}

int cmd_simulate(const std::string& config_path, std::optional<std::uint64_t> seed,
                 const std::string& out_prefix) {
    SimConfig cfg = load_config(config_path);
    if (seed) cfg.seed = *seed;
    typecheck_program(load_program(cfg.program).surface);
    SimResult sim = simulate(cfg);

    if (!out_prefix.empty()) {
        write_file(out_prefix + ".trace.csv", trace_to_csv(sim.trace));
        nlohmann::json meta;
        meta["config"] = nlohmann::json::parse(config_to_json(cfg));
        meta["program_digest"] = text_digest(cfg.program);
        nlohmann::json ps = nlohmann::json::array();
        for (const Position& p : sim.initial_positions) ps.push_back({p.x, p.y});
        meta["initial_positions"] = ps;
        write_file(out_prefix + ".meta.json", meta.dump(2) + "\n");
        write_file(out_prefix + ".snapshot.csv",
                   snapshot_to_csv(snapshot_at(sim.trace, sim.initial_positions, cfg.moves,
                                               cfg.end_time)));
    }

    std::cout << "events: " << sim.trace.events.size() << "\n";
    std::cout << "aborted: " << sim.aborted_rounds << "\n";
    double stab = stabilisation_time(sim, cfg);
    if (stab >= 0)
        std::cout << "stabilised: " << stab << "\n";
    else
        std::cout << "stabilised: never\n";
    return 0;
}

int cmd_trace_check(const std::string& file) {
    Trace t = parse_trace_csv(slurp(file));
    std::vector<TraceViolation> violations = validate_trace(t);
    for (const TraceViolation& v : violations)
        std::cout << v.axiom << ": " << v.detail << "\n";
    if (!violations.empty()) return 1;
    std::cout << "ok: " << t.events.size() << " events\n";
    return 0;
}

int cmd_snapshot(const std::string& prefix, double time, const std::string& out_file) {
    Trace t = parse_trace_csv(slurp(prefix + ".trace.csv"));
    nlohmann::json meta = nlohmann::json::parse(slurp(prefix + ".meta.json"));
    std::vector<Position> initial;
    for (const auto& p : meta.at("initial_positions"))
        initial.push_back({p[0].get<double>(), p[1].get<double>()});
    std::vector<MoveEvent> moves;
    if (meta.at("config").contains("mobility")) {
        for (const auto& m : meta["config"]["mobility"])
            moves.push_back({m.at("device").get<DeviceId>(), m.at("time").get<double>(),
                             {m.at("x").get<double>(), m.at("y").get<double>()}});
    }
    std::string csv = snapshot_to_csv(snapshot_at(t, initial, moves, time));
    if (out_file.empty())
        std::cout << csv;
    else
        write_file(out_file, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"xc: field calculus tool"};
    app.require_subcommand(1);

    std::string file, config_path, out_prefix, prefix, out_file;
    int rounds = 1;
    double time = 0;
    std::vector<std::string> sensor_flags, tree_files;
    std::optional<std::uint64_t> seed;

    CLI::App* tc = app.add_subcommand("typecheck", "infer and print definition types");
    tc->add_option("file", file, "program file")->required();

    CLI::App* run = app.add_subcommand("run", "run rounds on a single device");
    run->add_option("file", file, "program file")->required();
    run->add_option("--rounds", rounds, "number of rounds")->default_val(1);
    run->add_option("--sensor", sensor_flags, "sensor override name=value");
    run->add_option("--neighbour-tree", tree_files,
                    "file with a neighbour's device id line and serialized tree");

    CLI::App* simc = app.add_subcommand("simulate", "run a network simulation");
    simc->add_option("config", config_path, "JSON configuration")->required();
    simc->add_option("--seed", seed, "override the config seed");
    simc->add_option("--out", out_prefix, "output prefix for trace/meta/snapshot files");

    CLI::App* tcheck = app.add_subcommand("trace-check", "validate a trace CSV");
    tcheck->add_option("file", file, "trace CSV")->required();

    CLI::App* snap = app.add_subcommand("snapshot", "reconstruct network state from a trace");
    snap->add_option("prefix", prefix, "output prefix used by simulate")->required();
    snap->add_option("--time", time, "snapshot time")->required();
    snap->add_option("--out", out_file, "output CSV (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (tc->parsed()) return cmd_typecheck(file);
        if (run->parsed()) return cmd_run(file, rounds, sensor_flags, tree_files);
        if (simc->parsed()) return cmd_simulate(config_path, seed, out_prefix);
        if (tcheck->parsed()) return cmd_trace_check(file);
        if (snap->parsed()) return cmd_snapshot(prefix, time, out_file);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Diagnostic& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const RuntimeTypeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
