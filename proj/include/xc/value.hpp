#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "xc/ast.hpp"

namespace xc {

using DeviceId = std::int64_t;

struct Env;
using EnvPtr = std::shared_ptr<const Env>;

struct Literal;

// Constructor application, e.g. Pair(1, 2).
struct ConsLit {
    std::string name;
    std::vector<Literal> args;
};

// Reference to a builtin function; name() of a builtin is its own name.
struct BuiltinRef {
    std::string name;
};

// A function value with its captured environment; aligned by tau only.
struct FunClosure {
    std::string tau;
    std::string self_name;
    std::vector<std::string> params;
    ExprPtr body;
    EnvPtr env;
};

// A function value deserialized from a foreign value-tree: carries only its
// alignment name and cannot be applied.
struct OpaqueFun {
    std::string name;
};

struct Literal {
    std::variant<double, bool, ConsLit, BuiltinRef, FunClosure, OpaqueFun> v;

    Literal() : v(0.0) {}
    Literal(double d) : v(d) {}
    Literal(bool b) : v(b) {}
    Literal(ConsLit c) : v(std::move(c)) {}
    Literal(BuiltinRef b) : v(std::move(b)) {}
    Literal(FunClosure f) : v(std::move(f)) {}
    Literal(OpaqueFun o) : v(std::move(o)) {}

    bool is_num() const { return std::holds_alternative<double>(v); }
    bool is_bool() const { return std::holds_alternative<bool>(v); }
    bool is_function() const {
        return std::holds_alternative<BuiltinRef>(v) || std::holds_alternative<FunClosure>(v) ||
               std::holds_alternative<OpaqueFun>(v);
    }
    double num() const { return std::get<double>(v); }
    bool boolean() const { return std::get<bool>(v); }
};

Literal make_pair_lit(Literal a, Literal b);

// Structural equality. NaN compares unequal to everything (including itself);
// function values compare by alignment name only.
bool literal_equal(const Literal& a, const Literal& b);

// Alignment name of a function literal: builtin name or tau. Empty string for
// non-function literals.
std::string literal_name(const Literal& l);

// Shortest round-trip decimal rendering; Infinity/-Infinity/NaN spelled out.
std::string render_number(double d);

// Canonical text rendering: 3, 0.25, Infinity, True, Pair(1, 2), <+>, <%t0>.
std::string render_literal(const Literal& l);

// Parses the canonical literal grammar (used by sensor flags and tree files).
Literal parse_literal(const std::string& text);

}  // namespace xc
