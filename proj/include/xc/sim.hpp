#pragma once

#include <string>
#include <vector>

#include "xc/config.hpp"
#include "xc/trace.hpp"

namespace xc {

struct DeviceSnapshot {
    DeviceId device = 0;
    double x = 0;
    double y = 0;
    std::string value;  // empty until the device completes a round
};

struct SimResult {
    Trace trace;
    std::vector<Position> initial_positions;
    std::size_t aborted_rounds = 0;
};

// Discrete-event execution of a program over a network of unreliable,
// unsynchronized devices. Deterministic for a given config (single seeded
// generator; fixed draw order).
SimResult simulate(const SimConfig& cfg);

// Network state reconstruction: per-device position and latest completed
// result at `time`.
std::vector<DeviceSnapshot> snapshot_at(const Trace& trace,
                                        const std::vector<Position>& initial,
                                        const std::vector<MoveEvent>& moves, double time);

std::string snapshot_to_csv(const std::vector<DeviceSnapshot>& snap);

// FNV-1a digest of the program text, recorded alongside traces.
std::string text_digest(const std::string& text);

}  // namespace xc
