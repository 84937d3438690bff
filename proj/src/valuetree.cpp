#include "xc/valuetree.hpp"

#include "xc/diag.hpp"
#include "xc/value.hpp"

namespace xc {

ValueTree branch(std::vector<ValueTree> children, std::uint32_t origin) {
    return ValueTree{std::nullopt, std::move(children), origin};
}

ValueTree payload_node(NValue payload, std::vector<ValueTree> children, std::uint32_t origin) {
    return ValueTree{std::move(payload), std::move(children), origin};
}

bool tree_equal(const ValueTree& a, const ValueTree& b) {
    if (a.payload.has_value() != b.payload.has_value()) return false;
    if (a.payload && !a.payload->equals(*b.payload)) return false;
    if (a.children.size() != b.children.size()) return false;
    for (size_t i = 0; i < a.children.size(); ++i)
        if (!tree_equal(a.children[i], b.children[i])) return false;
    return true;
}

TreeMap project(const TreeMap& trees, size_t i) {
    TreeMap out;
    for (const auto& [d, t] : trees) {
        if (i >= 1 && i <= t.children.size()) out.emplace(d, t.children[i - 1]);
    }
    return out;
}

TreeMap filter_by_function(const TreeMap& trees, const std::string& name) {
    TreeMap out;
    for (const auto& [d, t] : trees) {
        if (!t.payload) continue;
        if (literal_name(t.payload->lookup(d)) == name) out.emplace(d, t);
    }
    return out;
}

namespace {

std::string serialize_rec(const ValueTree& t, std::string& out) {
    if (t.payload) {
        out += "P(";
        out += t.payload->render();
        for (const ValueTree& c : t.children) {
            out += "; ";
            serialize_rec(c, out);
        }
    } else {
        out += "B(";
        for (size_t i = 0; i < t.children.size(); ++i) {
            if (i) out += "; ";
            serialize_rec(t.children[i], out);
        }
    }
    out += ")";
    return out;
}

struct TreeParser {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n')) ++pos;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw RuntimeTypeError("bad tree text: expected '" + std::string(1, c) + "' at " +
                                   std::to_string(pos));
        ++pos;
    }

    // Consumes text up to the next ';' or the closing ')' at the current
    // nesting level; used for the payload slot.
    std::string payload_text() {
        skip_ws();
        size_t start = pos;
        int paren = 0, bracket = 0;
        while (pos < s.size()) {
            char c = s[pos];
            if (c == '(') ++paren;
            if (c == ')') {
                if (paren == 0) break;
                --paren;
            }
            if (c == '[') ++bracket;
            if (c == ']') --bracket;
            if (c == ';' && paren == 0 && bracket == 0) break;
            ++pos;
        }
        return s.substr(start, pos - start);
    }

    ValueTree node() {
        skip_ws();
        if (pos >= s.size()) throw RuntimeTypeError("bad tree text: unexpected end");
        char tag = s[pos++];
        if (tag != 'B' && tag != 'P')
            throw RuntimeTypeError("bad tree text: unknown node tag '" + std::string(1, tag) +
                                   "'");
        expect('(');
        ValueTree t;
        if (tag == 'P') {
            t.payload = parse_nvalue(payload_text());
            skip_ws();
            while (pos < s.size() && s[pos] == ';') {
                ++pos;
                t.children.push_back(node());
                skip_ws();
            }
        } else {
            skip_ws();
            if (pos < s.size() && s[pos] != ')') {
                t.children.push_back(node());
                skip_ws();
                while (pos < s.size() && s[pos] == ';') {
                    ++pos;
                    t.children.push_back(node());
                    skip_ws();
                }
            }
        }
        expect(')');
        return t;
    }
};

}  // namespace

std::string serialize_tree(const ValueTree& t) {
    std::string out;
    serialize_rec(t, out);
    return out;
}

ValueTree parse_tree(const std::string& text) {
    TreeParser p{text};
    ValueTree t = p.node();
    p.skip_ws();
    if (p.pos != text.size())
        throw RuntimeTypeError("bad tree text: trailing characters at " + std::to_string(p.pos));
    return t;
}

}  // namespace xc
