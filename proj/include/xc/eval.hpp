#pragma once

#include <functional>
#include <map>
#include <string>

#include "xc/ast.hpp"
#include "xc/nvalue.hpp"
#include "xc/valuetree.hpp"

namespace xc {

// Runtime variable environment (a persistent cons list; closures share tails).
struct Env {
    std::string name;
    NValue value;
    EnvPtr parent;
};

EnvPtr env_bind(EnvPtr parent, std::string name, NValue value);
const NValue* env_lookup(const EnvPtr& env, const std::string& name);

// Named sensor readings for one round (time, gps, temperature, senseDist, ...).
using SensorMap = std::map<std::string, NValue>;

struct EvalOptions {
    // Evaluation steps allowed per round; exceeding it throws
    // StepBudgetExceeded (divergent programs abort the round).
    std::size_t step_budget = 1'000'000;
    // Called at every exchange with the device ids it aligned with.
    std::function<void(const std::vector<DeviceId>&)> exchange_observer;
};

struct EvalResult {
    NValue value;
    ValueTree tree;
};

// Runs one round of `program` (core forms, annotated) on device `self`.
// `neighbour_trees` holds the most recent tree from each reachable device,
// including this device's own previous tree under its own id.
EvalResult evaluate_round(const ExprPtr& program, DeviceId self, const TreeMap& neighbour_trees,
                          const SensorMap& sensors, const EvalOptions& opts = {});

}  // namespace xc
