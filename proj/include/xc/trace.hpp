#pragma once

#include <string>
#include <vector>

#include "xc/value.hpp"

namespace xc {

// One device firing. `id` is "<device>:<round>"; precursors are ids of the
// events whose messages this round consumed (including the device's own
// previous event, via its retained state).
struct TraceEvent {
    std::string id;
    DeviceId device = 0;
    double time = 0;
    int round = 0;
    std::vector<std::string> precursors;
    bool aborted = false;
    std::string result;  // rendered value; empty for aborted rounds
};

struct Trace {
    std::vector<TraceEvent> events;  // in firing order
};

std::string trace_to_csv(const Trace& t);

// Throws ConfigError on malformed CSV (wrong header, bad field counts, bad
// numbers).
Trace parse_trace_csv(const std::string& text);

struct TraceViolation {
    std::string axiom;
    std::string detail;
};

// Checks the event-structure axioms:
//  - distinct-device-precursors: at most one precursor per sending device
//  - acyclicity: precursors strictly precede their event (no self-loops)
//  - local-finiteness: every precursor id names an event in the trace
//  - device-monotonicity: per device, times and rounds strictly increase
std::vector<TraceViolation> validate_trace(const Trace& t);

}  // namespace xc
