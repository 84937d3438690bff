#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "xc/diag.hpp"

namespace xc {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Core forms (the only ones surviving desugaring).
struct Var {
    std::string name;
};

struct Fun {
    std::string tau;  // alignment name; empty until annotate_names runs
    std::string self_name;
    std::vector<std::string> params;
    ExprPtr body;
};

struct App {
    ExprPtr callee;
    std::vector<ExprPtr> args;
};

struct Val {
    std::string name;
    ExprPtr bound;
    ExprPtr body;
};

struct NumLit {
    double value = 0;
};

struct BoolLit {
    bool value = false;
};

// Surface-only forms, removed by desugar().
struct If {
    ExprPtr cond;
    ExprPtr then_branch;
    ExprPtr else_branch;
};

struct Lambda {
    std::vector<std::string> params;
    ExprPtr body;
};

// `retsend e` (shared == true, send unused) or `return e_r send e_s`.
struct RetSend {
    bool shared = false;
    ExprPtr ret;
    ExprPtr send;
};

struct Expr {
    Span span;
    std::uint32_t id = 0;  // assigned by annotate_names, 0 = unassigned
    std::variant<Var, Fun, App, Val, NumLit, BoolLit, If, Lambda, RetSend> node;
};

inline ExprPtr make_expr(Span span, auto node) {
    auto e = std::make_shared<Expr>();
    e->span = span;
    e->node = std::move(node);
    return e;
}

struct DefItem {
    std::string name;
    std::vector<std::string> params;
    ExprPtr body;
    Span span;
    bool from_prelude = false;
};

struct SourceProgram {
    std::vector<DefItem> items;
    ExprPtr main;
};

}  // namespace xc
