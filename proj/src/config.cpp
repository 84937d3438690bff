#include "xc/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "xc/diag.hpp"
#include "xc/value.hpp"

namespace xc {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw ConfigError("unknown key '" + key + "' in " + where);
    }
}

Literal json_literal(const json& v, const std::string& where) {
    if (v.is_number()) return Literal{v.get<double>()};
    if (v.is_boolean()) return Literal{v.get<bool>()};
    if (v.is_string()) return parse_literal(v.get<std::string>());
    if (v.is_array() && v.size() == 2)
        return make_pair_lit(json_literal(v[0], where), json_literal(v[1], where));
    throw ConfigError("cannot interpret sensor value in " + where + ": " + v.dump());
}

SensorMap read_sensors(const json& obj, const std::string& where) {
    SensorMap out;
    for (const auto& [name, v] : obj.items()) out[name] = NValue::lift(json_literal(v, where));
    return out;
}

json literal_json(const Literal& l) {
    if (l.is_num()) return json(l.num());
    if (l.is_bool()) return json(l.boolean());
    return json(render_literal(l));
}

}  // namespace

SimConfig parse_config(const std::string& text, const std::string& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    check_keys(j,
               {"program", "devices", "radius", "period", "jitter", "drop", "ttl", "end_time",
                "seed", "sensor_defaults", "sensors", "mobility", "reboots", "step_budget"},
               "config");
    SimConfig cfg;
    if (!j.contains("program") || !j["program"].is_string())
        throw ConfigError("config requires a string 'program'");
    std::string prog = j["program"].get<std::string>();
    if (prog.size() > 3 && prog.substr(prog.size() - 3) == ".xc") {
        std::filesystem::path p = prog;
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        cfg.program = read_file(p.string());
    } else {
        cfg.program = prog;
    }

    if (!j.contains("devices")) throw ConfigError("config requires 'devices'");
    const json& dev = j["devices"];
    if (!dev.is_object()) throw ConfigError("'devices' must be an object");
    check_keys(dev, {"grid", "positions", "random"}, "devices");
    int chosen = int(dev.contains("grid")) + int(dev.contains("positions")) +
                 int(dev.contains("random"));
    if (chosen != 1)
        throw ConfigError("'devices' needs exactly one of grid, positions, random");
    if (dev.contains("grid")) {
        const json& g = dev["grid"];
        check_keys(g, {"cols", "rows", "spacing"}, "devices.grid");
        GridPlacement grid;
        grid.cols = g.at("cols").get<int>();
        grid.rows = g.at("rows").get<int>();
        grid.spacing = g.value("spacing", 1.0);
        if (grid.cols <= 0 || grid.rows <= 0)
            throw ConfigError("grid dimensions must be positive");
        cfg.grid = grid;
    } else if (dev.contains("positions")) {
        std::vector<Position> ps;
        for (const json& p : dev["positions"]) {
            if (!p.is_array() || p.size() != 2)
                throw ConfigError("each position must be [x, y]");
            ps.push_back({p[0].get<double>(), p[1].get<double>()});
        }
        if (ps.empty()) throw ConfigError("'positions' must not be empty");
        cfg.positions = std::move(ps);
    } else {
        const json& r = dev["random"];
        check_keys(r, {"count", "width", "height"}, "devices.random");
        RandomPlacement rp;
        rp.count = r.at("count").get<int>();
        rp.width = r.at("width").get<double>();
        rp.height = r.at("height").get<double>();
        if (rp.count <= 0) throw ConfigError("random device count must be positive");
        cfg.random_placement = rp;
    }

    cfg.radius = j.value("radius", 1.0);
    cfg.period = j.value("period", 1.0);
    cfg.jitter = j.value("jitter", 0.0);
    cfg.drop = j.value("drop", 0.0);
    cfg.ttl = j.value("ttl", 2.0 * cfg.period);
    cfg.end_time = j.value("end_time", 10.0);
    cfg.seed = j.value("seed", std::uint64_t(0));
    cfg.step_budget = j.value("step_budget", std::size_t(1'000'000));
    if (cfg.period <= 0) throw ConfigError("period must be positive");
    if (cfg.jitter < 0 || cfg.jitter >= cfg.period)
        throw ConfigError("jitter must be in [0, period)");
    if (cfg.drop < 0 || cfg.drop > 1) throw ConfigError("drop must be in [0, 1]");

    if (j.contains("sensor_defaults"))
        cfg.sensor_defaults = read_sensors(j["sensor_defaults"], "sensor_defaults");
    if (j.contains("sensors")) {
        for (const auto& [id_str, smap] : j["sensors"].items()) {
            DeviceId id = std::stoll(id_str);
            cfg.device_sensors[id] = read_sensors(smap, "sensors." + id_str);
        }
    }
    if (j.contains("mobility")) {
        for (const json& m : j["mobility"]) {
            check_keys(m, {"device", "time", "x", "y"}, "mobility");
            cfg.moves.push_back({m.at("device").get<DeviceId>(), m.at("time").get<double>(),
                                 {m.at("x").get<double>(), m.at("y").get<double>()}});
        }
    }
    if (j.contains("reboots")) {
        for (const json& r : j["reboots"]) {
            check_keys(r, {"device", "time"}, "reboots");
            cfg.reboots.push_back({r.at("device").get<DeviceId>(), r.at("time").get<double>()});
        }
    }
    return cfg;
}

SimConfig load_config(const std::string& path) {
    std::filesystem::path p(path);
    return parse_config(read_file(path), p.parent_path().string());
}

std::string config_to_json(const SimConfig& cfg) {
    json j;
    j["radius"] = cfg.radius;
    j["period"] = cfg.period;
    j["jitter"] = cfg.jitter;
    j["drop"] = cfg.drop;
    j["ttl"] = cfg.ttl;
    j["end_time"] = cfg.end_time;
    j["seed"] = cfg.seed;
    j["step_budget"] = cfg.step_budget;
    if (cfg.grid)
        j["devices"] = {{"grid",
                         {{"cols", cfg.grid->cols},
                          {"rows", cfg.grid->rows},
                          {"spacing", cfg.grid->spacing}}}};
    else if (cfg.positions) {
        json ps = json::array();
        for (const Position& p : *cfg.positions) ps.push_back({p.x, p.y});
        j["devices"] = {{"positions", ps}};
    } else if (cfg.random_placement)
        j["devices"] = {{"random",
                         {{"count", cfg.random_placement->count},
                          {"width", cfg.random_placement->width},
                          {"height", cfg.random_placement->height}}}};
    auto sensors_json = [](const SensorMap& m) {
        json out = json::object();
        for (const auto& [name, v] : m) out[name] = literal_json(v.default_value());
        return out;
    };
    if (!cfg.sensor_defaults.empty()) j["sensor_defaults"] = sensors_json(cfg.sensor_defaults);
    if (!cfg.device_sensors.empty()) {
        json out = json::object();
        for (const auto& [id, m] : cfg.device_sensors) out[std::to_string(id)] = sensors_json(m);
        j["sensors"] = out;
    }
    if (!cfg.moves.empty()) {
        json ms = json::array();
        for (const MoveEvent& m : cfg.moves)
            ms.push_back({{"device", m.device}, {"time", m.time}, {"x", m.to.x}, {"y", m.to.y}});
        j["mobility"] = ms;
    }
    if (!cfg.reboots.empty()) {
        json rs = json::array();
        for (const RebootEvent& r : cfg.reboots)
            rs.push_back({{"device", r.device}, {"time", r.time}});
        j["reboots"] = rs;
    }
    return j.dump(2);
}

}  // namespace xc
