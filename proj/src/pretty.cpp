#include "xc/pretty.hpp"

#include <set>

#include "xc/value.hpp"

namespace xc {

namespace {

const std::set<std::string> kInfix = {"+", "-", "*", "/", "==", "<=", ">=", "and", "or"};

std::string render(const ExprPtr& e) {
    return std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Var>) {
                return n.name;
            } else if constexpr (std::is_same_v<T, NumLit>) {
                return render_literal(Literal{n.value});
            } else if constexpr (std::is_same_v<T, BoolLit>) {
                return n.value ? "True" : "False";
            } else if constexpr (std::is_same_v<T, Fun>) {
                std::string out = "fun " + n.self_name + "(";
                for (size_t i = 0; i < n.params.size(); ++i) {
                    if (i) out += ", ";
                    out += n.params[i];
                }
                return out + ") { " + render(n.body) + " }";
            } else if constexpr (std::is_same_v<T, App>) {
                if (const Var* v = std::get_if<Var>(&n.callee->node);
                    v && n.args.size() == 2 && kInfix.count(v->name)) {
                    return "(" + render(n.args[0]) + " " + v->name + " " + render(n.args[1]) + ")";
                }
                std::string out = render(n.callee) + "(";
                for (size_t i = 0; i < n.args.size(); ++i) {
                    if (i) out += ", ";
                    out += render(n.args[i]);
                }
                return out + ")";
            } else if constexpr (std::is_same_v<T, Val>) {
                return "val " + n.name + " = " + render(n.bound) + "; " + render(n.body);
            } else if constexpr (std::is_same_v<T, If>) {
                return "if (" + render(n.cond) + ") { " + render(n.then_branch) + " } else { " +
                       render(n.else_branch) + " }";
            } else if constexpr (std::is_same_v<T, Lambda>) {
                std::string out = "(";
                for (size_t i = 0; i < n.params.size(); ++i) {
                    if (i) out += ", ";
                    out += n.params[i];
                }
                return out + ") => " + render(n.body);
            } else {
                static_assert(std::is_same_v<T, RetSend>);
                if (n.shared) return "retsend " + render(n.ret);
                return "return " + render(n.ret) + " send " + render(n.send);
            }
        },
        e->node);
}

}  // namespace

std::string pretty(const ExprPtr& e) { return render(e); }

}  // namespace xc
