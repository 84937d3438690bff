#include "xc/sim.hpp"

#include <cstdio>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <set>

#include "xc/diag.hpp"
#include "xc/stdlib.hpp"
#include "xc/value.hpp"

namespace xc {

namespace {

struct BufferEntry {
    ValueTree tree;
    double receive_time = 0;
    Position sender_pos;
    std::string event_id;
};

// Per-sender mailbox. The previous message is kept until the latest one
// becomes consumable, so a sender firing at the same instant as (but ahead
// of) the receiver does not mask its own earlier message.
struct SenderBuffer {
    BufferEntry latest;
    std::optional<BufferEntry> prev;

    void deliver(BufferEntry e, bool fresh) {
        if (!fresh && latest.receive_time < e.receive_time) prev = std::move(latest);
        latest = std::move(e);
    }

    // Most recent entry received strictly before t, if any.
    const BufferEntry* visible_at(double t) const {
        if (latest.receive_time < t) return &latest;
        if (prev && prev->receive_time < t) return &*prev;
        return nullptr;
    }
};

double dist(const Position& a, const Position& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

struct AdminEvent {
    double time = 0;
    int order = 0;  // original config order, for stable processing
    bool is_move = false;
    DeviceId device = 0;
    Position to;
};

}  // namespace

SimResult simulate(const SimConfig& cfg) {
    Program prog = load_program(cfg.program);

    std::mt19937_64 rng(cfg.seed);
    auto uniform = [&](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };

    std::vector<Position> positions;
    if (cfg.grid) {
        for (int r = 0; r < cfg.grid->rows; ++r)
            for (int c = 0; c < cfg.grid->cols; ++c)
                positions.push_back({c * cfg.grid->spacing, r * cfg.grid->spacing});
    } else if (cfg.positions) {
        positions = *cfg.positions;
    } else if (cfg.random_placement) {
        for (int i = 0; i < cfg.random_placement->count; ++i) {
            double x = uniform(0.0, cfg.random_placement->width);
            double y = uniform(0.0, cfg.random_placement->height);
            positions.push_back({x, y});
        }
    } else {
        throw ConfigError("no device placement configured");
    }
    size_t n = positions.size();

    SimResult result;
    result.initial_positions = positions;

    std::set<std::pair<double, DeviceId>> queue;
    for (size_t d = 0; d < n; ++d) {
        double t = cfg.period + uniform(-cfg.jitter, cfg.jitter);
        queue.emplace(t, DeviceId(d));
    }

    std::vector<AdminEvent> admin;
    for (size_t i = 0; i < cfg.moves.size(); ++i)
        admin.push_back({cfg.moves[i].time, int(i), true, cfg.moves[i].device, cfg.moves[i].to});
    for (size_t i = 0; i < cfg.reboots.size(); ++i)
        admin.push_back({cfg.reboots[i].time, int(cfg.moves.size() + i), false,
                         cfg.reboots[i].device, {}});
    std::sort(admin.begin(), admin.end(), [](const AdminEvent& a, const AdminEvent& b) {
        return a.time != b.time ? a.time < b.time : a.order < b.order;
    });
    size_t admin_next = 0;

    std::vector<std::map<DeviceId, SenderBuffer>> buffers(n);
    std::vector<int> rounds(n, 0);

    EvalOptions opts;
    opts.step_budget = cfg.step_budget;

    while (!queue.empty()) {
        auto [t, d] = *queue.begin();
        if (t > cfg.end_time) break;
        queue.erase(queue.begin());

        while (admin_next < admin.size() && admin[admin_next].time <= t) {
            const AdminEvent& a = admin[admin_next++];
            if (a.device < 0 || size_t(a.device) >= n)
                throw ConfigError("admin event for unknown device " + std::to_string(a.device));
            if (a.is_move)
                positions[a.device] = a.to;
            else
                buffers[a.device].clear();
        }

        int round = ++rounds[d];
        TraceEvent ev;
        ev.device = d;
        ev.time = t;
        ev.round = round;
        ev.id = std::to_string(d) + ":" + std::to_string(round);

        // Messages received strictly before this firing and still within ttl.
        TreeMap visible;
        for (auto it = buffers[d].begin(); it != buffers[d].end();) {
            SenderBuffer& sb = it->second;
            if (sb.prev && t - sb.prev->receive_time > cfg.ttl) sb.prev.reset();
            if (t - sb.latest.receive_time > cfg.ttl) {
                it = buffers[d].erase(it);
                continue;
            }
            if (const BufferEntry* e = sb.visible_at(t)) {
                visible.emplace(it->first, e->tree);
                ev.precursors.push_back(e->event_id);
            }
            ++it;
        }

        SensorMap sensors;
        sensors["time"] = NValue::lift(Literal{t});
        sensors["gps"] =
            NValue::lift(make_pair_lit(Literal{positions[d].x}, Literal{positions[d].y}));
        sensors["temperature"] = NValue::lift(Literal{0.0});
        sensors["smoke"] = NValue::lift(Literal{0.0});
        {
            std::map<DeviceId, Literal> dists;
            dists.emplace(d, Literal{0.0});
            for (const auto& [sender, sb] : buffers[d]) {
                if (sender == d) continue;
                if (const BufferEntry* e = sb.visible_at(t))
                    dists.emplace(sender, Literal{dist(positions[d], e->sender_pos)});
            }
            sensors["senseDist"] =
                NValue(Literal{std::numeric_limits<double>::infinity()}, std::move(dists));
        }
        for (const auto& [name, v] : cfg.sensor_defaults) sensors[name] = v;
        if (auto it = cfg.device_sensors.find(d); it != cfg.device_sensors.end())
            for (const auto& [name, v] : it->second) sensors[name] = v;

        bool ok = true;
        EvalResult er;
        try {
            er = evaluate_round(prog.core, d, visible, sensors, opts);
        } catch (const StepBudgetExceeded&) {
            ok = false;
        }

        // The next firing interval is drawn before any delivery draws, so the
        // schedule does not depend on the neighbourhood.
        double next = t + cfg.period + uniform(-cfg.jitter, cfg.jitter);
        if (next <= cfg.end_time) queue.emplace(next, d);

        if (!ok) {
            ev.aborted = true;
            ++result.aborted_rounds;
            result.trace.events.push_back(std::move(ev));
            continue;
        }

        ev.result = er.value.render();
        result.trace.events.push_back(std::move(ev));

        BufferEntry sent{er.tree, t, positions[d],
                         std::to_string(d) + ":" + std::to_string(round)};
        auto deliver_to = [&](size_t r) {
            auto [it, fresh] = buffers[r].try_emplace(DeviceId(d));
            it->second.deliver(sent, fresh);
        };
        deliver_to(d);
        for (size_t r = 0; r < n; ++r) {
            if (DeviceId(r) == d) continue;
            if (dist(positions[d], positions[r]) > cfg.radius) continue;
            if (cfg.drop > 0 && uniform(0.0, 1.0) < cfg.drop) continue;
            deliver_to(r);
        }
    }
    return result;
}

std::vector<DeviceSnapshot> snapshot_at(const Trace& trace, const std::vector<Position>& initial,
                                        const std::vector<MoveEvent>& moves, double time) {
    std::vector<DeviceSnapshot> out;
    out.reserve(initial.size());
    for (size_t d = 0; d < initial.size(); ++d)
        out.push_back({DeviceId(d), initial[d].x, initial[d].y, ""});
    for (const MoveEvent& m : moves) {
        if (m.time > time) continue;
        if (m.device >= 0 && size_t(m.device) < out.size()) {
            out[m.device].x = m.to.x;
            out[m.device].y = m.to.y;
        }
    }
    for (const TraceEvent& e : trace.events) {
        if (e.time > time || e.aborted) continue;
        if (e.device >= 0 && size_t(e.device) < out.size()) out[e.device].value = e.result;
    }
    return out;
}

std::string snapshot_to_csv(const std::vector<DeviceSnapshot>& snap) {
    std::string out = "device,x,y,value\n";
    for (const DeviceSnapshot& s : snap) {
        out += std::to_string(s.device) + "," + render_number(s.x) + "," +
               render_number(s.y) + ",\"";
        for (char c : s.value) {
            if (c == '"') out += "\"\"";
            else out += c;
        }
        out += "\"\n";
    }
    return out;
}

std::string text_digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace xc
