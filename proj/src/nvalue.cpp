#include "xc/nvalue.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "xc/diag.hpp"

namespace xc {

NValue::NValue(Literal def, std::map<DeviceId, Literal> entries) : default_(std::move(def)) {
    for (auto& [d, l] : entries) {
        if (!literal_equal(l, default_)) entries_.emplace(d, std::move(l));
    }
}

const Literal& NValue::lookup(DeviceId d) const {
    auto it = entries_.find(d);
    return it == entries_.end() ? default_ : it->second;
}

NValue NValue::update_at(DeviceId d, Literal l) const {
    auto entries = entries_;
    entries[d] = std::move(l);
    return NValue(default_, std::move(entries));
}

NValue NValue::update_default(Literal l) const {
    return NValue(std::move(l), entries_);
}

NValue NValue::restrict_to(const std::vector<DeviceId>& keep) const {
    std::map<DeviceId, Literal> kept;
    for (DeviceId d : keep) {
        auto it = entries_.find(d);
        if (it != entries_.end()) kept.emplace(d, it->second);
    }
    return NValue(default_, std::move(kept));
}

bool NValue::equals(const NValue& other) const {
    if (!literal_equal(default_, other.default_)) return false;
    if (entries_.size() != other.entries_.size()) return false;
    auto it = other.entries_.begin();
    for (const auto& [d, l] : entries_) {
        if (it->first != d || !literal_equal(l, it->second)) return false;
        ++it;
    }
    return true;
}

std::string NValue::render() const {
    std::string out = render_literal(default_) + "[";
    bool first = true;
    for (const auto& [d, l] : entries_) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(d) + "->" + render_literal(l);
    }
    return out + "]";
}

NValue pointwise_apply(const LiteralFn& f, std::span<const NValue> args) {
    std::vector<Literal> defaults;
    defaults.reserve(args.size());
    std::set<DeviceId> keys;
    for (const NValue& w : args) {
        defaults.push_back(w.default_value());
        for (const auto& [d, l] : w.entries()) keys.insert(d);
    }
    Literal def = f(defaults);
    std::map<DeviceId, Literal> entries;
    std::vector<Literal> row(args.size());
    for (DeviceId d : keys) {
        for (size_t i = 0; i < args.size(); ++i) row[i] = args[i].lookup(d);
        entries.emplace(d, f(row));
    }
    return NValue(std::move(def), std::move(entries));
}

Literal nfold_local(const std::function<Literal(const Literal&, const Literal&)>& f,
                    const NValue& w, Literal init, const std::vector<DeviceId>& neighbours,
                    DeviceId self) {
    Literal acc = std::move(init);
    for (DeviceId d : neighbours) {
        if (d == self) continue;
        acc = f(acc, w.lookup(d));
    }
    return acc;
}

NValue parse_nvalue(const std::string& text) {
    auto open = text.rfind('[');
    if (open == std::string::npos || text.empty() || text.back() != ']') {
        // Bare literal: treated as a promoted value.
        return NValue::lift(parse_literal(text));
    }
    // Find the bracket that starts the entry list: the last '[' at depth zero
    // of parentheses.
    int depth = 0;
    size_t bracket = std::string::npos;
    for (size_t i = 0; i + 1 < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '[' && depth == 0) bracket = i;
    }
    if (bracket == std::string::npos) return NValue::lift(parse_literal(text));
    Literal def = parse_literal(text.substr(0, bracket));
    std::string body = text.substr(bracket + 1, text.size() - bracket - 2);
    std::map<DeviceId, Literal> entries;
    size_t pos = 0;
    while (pos < body.size()) {
        while (pos < body.size() && (body[pos] == ' ' || body[pos] == ',')) ++pos;
        if (pos >= body.size()) break;
        size_t arrow = body.find("->", pos);
        if (arrow == std::string::npos) throw RuntimeTypeError("bad nvalue text: " + text);
        DeviceId d = std::stoll(body.substr(pos, arrow - pos));
        size_t end = arrow + 2;
        int pdepth = 0;
        while (end < body.size() && (pdepth > 0 || body[end] != ',')) {
            if (body[end] == '(') ++pdepth;
            if (body[end] == ')') --pdepth;
            ++end;
        }
        entries[d] = parse_literal(body.substr(arrow + 2, end - arrow - 2));
        pos = end;
    }
    return NValue(std::move(def), std::move(entries));
}

}  // namespace xc
