#include "xc/trace.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "xc/diag.hpp"
#include "xc/value.hpp"

namespace xc {

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_row(const std::string& line, int line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted)
        throw ConfigError("trace line " + std::to_string(line_no) + ": unterminated quote");
    fields.push_back(std::move(cur));
    return fields;
}

double parse_num(const std::string& s, const char* what, int line_no) {
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("trace line " + std::to_string(line_no) + ": bad " + what + " '" + s +
                          "'");
    }
}

}  // namespace

std::string trace_to_csv(const Trace& t) {
    std::string out = "event_id,device,time,round,precursors,aborted,result\n";
    for (const TraceEvent& e : t.events) {
        out += e.id + "," + std::to_string(e.device) + "," + render_number(e.time) + "," +
               std::to_string(e.round) + ",";
        for (size_t i = 0; i < e.precursors.size(); ++i) {
            if (i) out += ";";
            out += e.precursors[i];
        }
        out += e.aborted ? ",1," : ",0,";
        out += csv_quote(e.result);
        out += "\n";
    }
    return out;
}

Trace parse_trace_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("trace is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "event_id,device,time,round,precursors,aborted,result")
        throw ConfigError("trace has an unexpected header: " + line);
    Trace t;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> f = split_row(line, line_no);
        if (f.size() != 7)
            throw ConfigError("trace line " + std::to_string(line_no) + ": expected 7 fields, got " +
                              std::to_string(f.size()));
        TraceEvent e;
        e.id = f[0];
        e.device = DeviceId(parse_num(f[1], "device", line_no));
        e.time = parse_num(f[2], "time", line_no);
        e.round = int(parse_num(f[3], "round", line_no));
        if (!f[4].empty()) {
            std::istringstream ps(f[4]);
            std::string p;
            while (std::getline(ps, p, ';')) e.precursors.push_back(p);
        }
        if (f[5] != "0" && f[5] != "1")
            throw ConfigError("trace line " + std::to_string(line_no) + ": bad aborted flag '" +
                              f[5] + "'");
        e.aborted = f[5] == "1";
        e.result = f[6];
        t.events.push_back(std::move(e));
    }
    return t;
}

std::vector<TraceViolation> validate_trace(const Trace& t) {
    std::vector<TraceViolation> out;
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < t.events.size(); ++i) {
        if (!index.emplace(t.events[i].id, i).second)
            out.push_back({"acyclicity", "duplicate event id " + t.events[i].id});
    }
    std::map<DeviceId, const TraceEvent*> last_per_device;
    for (size_t i = 0; i < t.events.size(); ++i) {
        const TraceEvent& e = t.events[i];
        std::set<DeviceId> precursor_devices;
        for (const std::string& p : e.precursors) {
            auto it = index.find(p);
            if (it == index.end()) {
                out.push_back({"local-finiteness",
                               "event " + e.id + " names missing precursor " + p});
                continue;
            }
            const TraceEvent& pe = t.events[it->second];
            if (it->second >= i || pe.time > e.time)
                out.push_back({"acyclicity", "event " + e.id + " depends on later event " + p});
            if (!precursor_devices.insert(pe.device).second)
                out.push_back({"distinct-device-precursors",
                               "event " + e.id + " has two precursors from device " +
                                   std::to_string(pe.device)});
        }
        auto [it, fresh] = last_per_device.emplace(e.device, &e);
        if (!fresh) {
            const TraceEvent& prev = *it->second;
            if (e.time <= prev.time || e.round <= prev.round)
                out.push_back({"device-monotonicity",
                               "event " + e.id + " does not advance past " + prev.id});
            it->second = &e;
        }
    }
    return out;
}

}  // namespace xc
