#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xc/eval.hpp"

namespace xc {

struct Position {
    double x = 0;
    double y = 0;
};

// How devices are placed initially. Exactly one of the three is used.
struct GridPlacement {
    int cols = 0;
    int rows = 0;
    double spacing = 1.0;
};

struct RandomPlacement {
    int count = 0;
    double width = 1.0;
    double height = 1.0;
};

struct MoveEvent {
    DeviceId device = 0;
    double time = 0;
    Position to;
};

struct RebootEvent {
    DeviceId device = 0;
    double time = 0;
};

struct SimConfig {
    std::string program;  // source text

    std::optional<GridPlacement> grid;
    std::optional<std::vector<Position>> positions;
    std::optional<RandomPlacement> random_placement;

    double radius = 1.0;       // communication range (unit disc)
    double period = 1.0;       // nominal firing interval
    double jitter = 0.0;       // uniform +- on each interval
    double drop = 0.0;         // per-message loss probability
    double ttl = 2.0;          // message retention, in time units
    double end_time = 10.0;
    std::uint64_t seed = 0;
    std::size_t step_budget = 1'000'000;

    SensorMap sensor_defaults;                     // applied to every device
    std::map<DeviceId, SensorMap> device_sensors;  // per-device overrides

    std::vector<MoveEvent> moves;
    std::vector<RebootEvent> reboots;
};

// Parses a JSON config; unknown keys are an error. `program` may also be a
// path to a .xc file, resolved relative to the config's directory.
SimConfig load_config(const std::string& path);
SimConfig parse_config(const std::string& json_text, const std::string& base_dir);

// Deterministic JSON echo of the configuration (written next to traces).
std::string config_to_json(const SimConfig& cfg);

}  // namespace xc
