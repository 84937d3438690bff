#include "xc/value.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "xc/diag.hpp"

namespace xc {

Literal make_pair_lit(Literal a, Literal b) {
    ConsLit c;
    c.name = "Pair";
    c.args.push_back(std::move(a));
    c.args.push_back(std::move(b));
    return Literal(std::move(c));
}

bool literal_equal(const Literal& a, const Literal& b) {
    if (a.is_num() && b.is_num()) {
        return a.num() == b.num();  // NaN != NaN
    }
    if (a.is_bool() && b.is_bool()) {
        return a.boolean() == b.boolean();
    }
    if (a.is_function() && b.is_function()) {
        return literal_name(a) == literal_name(b);
    }
    const auto* ca = std::get_if<ConsLit>(&a.v);
    const auto* cb = std::get_if<ConsLit>(&b.v);
    if (ca && cb) {
        if (ca->name != cb->name || ca->args.size() != cb->args.size()) return false;
        for (size_t i = 0; i < ca->args.size(); ++i) {
            if (!literal_equal(ca->args[i], cb->args[i])) return false;
        }
        return true;
    }
    return false;
}

std::string literal_name(const Literal& l) {
    if (const auto* b = std::get_if<BuiltinRef>(&l.v)) return b->name;
    if (const auto* f = std::get_if<FunClosure>(&l.v)) return f->tau;
    if (const auto* o = std::get_if<OpaqueFun>(&l.v)) return o->name;
    return "";
}

std::string render_number(double d) {
    if (std::isnan(d)) return "NaN";
    if (std::isinf(d)) return d > 0 ? "Infinity" : "-Infinity";
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), d);
    return std::string(buf, end);
}

std::string render_literal(const Literal& l) {
    if (l.is_num()) return render_number(l.num());
    if (l.is_bool()) return l.boolean() ? "True" : "False";
    if (const auto* c = std::get_if<ConsLit>(&l.v)) {
        std::string out = c->name + "(";
        for (size_t i = 0; i < c->args.size(); ++i) {
            if (i) out += ", ";
            out += render_literal(c->args[i]);
        }
        return out + ")";
    }
    return "<" + literal_name(l) + ">";
}

namespace {

struct LitParser {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw RuntimeTypeError("bad literal text '" + s + "': " + msg);
    }

    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    bool try_char(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string word() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '%')) {
            ++pos;
        }
        if (start == pos) fail("expected a name");
        return s.substr(start, pos - start);
    }

    Literal literal() {
        skip_ws();
        if (pos >= s.size()) fail("empty literal");
        char c = s[pos];
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return number();
        if (c == '<') {
            ++pos;
            size_t start = pos;
            while (pos < s.size() && s[pos] != '>') ++pos;
            if (pos >= s.size()) fail("unterminated function token");
            std::string name = s.substr(start, pos - start);
            ++pos;
            return Literal(OpaqueFun{name});
        }
        std::string w = word();
        if (w == "True") return Literal(true);
        if (w == "False") return Literal(false);
        if (w == "Infinity") return Literal(std::numeric_limits<double>::infinity());
        if (w == "NaN") return Literal(std::numeric_limits<double>::quiet_NaN());
        if (try_char('(')) {
            ConsLit cons;
            cons.name = w;
            if (!try_char(')')) {
                cons.args.push_back(literal());
                while (try_char(',')) cons.args.push_back(literal());
                expect(')');
            }
            return Literal(std::move(cons));
        }
        fail("unknown literal '" + w + "'");
    }

    Literal number() {
        skip_ws();
        bool neg = try_char('-');
        skip_ws();
        if (pos < s.size() && !std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::string w = word();
            if (w == "Infinity") {
                double inf = std::numeric_limits<double>::infinity();
                return Literal(neg ? -inf : inf);
            }
            fail("expected number after '-'");
        }
        size_t start = pos;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' || s[pos] == 'e' ||
                s[pos] == 'E' || ((s[pos] == '+' || s[pos] == '-') && (s[pos - 1] == 'e' || s[pos - 1] == 'E')))) {
            ++pos;
        }
        double d = std::stod(s.substr(start, pos - start));
        return Literal(neg ? -d : d);
    }
};

}  // namespace

Literal parse_literal(const std::string& text) {
    LitParser p{text};
    Literal l = p.literal();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters");
    return l;
}

}  // namespace xc
