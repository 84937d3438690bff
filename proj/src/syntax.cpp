#include "xc/syntax.hpp"

#include <map>

#include "xc/diag.hpp"

namespace xc {

namespace {

struct Desugarer {
    std::uint32_t fresh = 0;

    std::string fresh_name(const char* stem) {
        return std::string("%") + stem + std::to_string(fresh++);
    }

    ExprPtr thunk(Span span, ExprPtr body) {
        return make_expr(span, Fun{"", fresh_name("f"), {}, std::move(body)});
    }

    ExprPtr go(const ExprPtr& e) {
        return std::visit(
            [&](const auto& n) -> ExprPtr {
                using T = std::decay_t<decltype(n)>;
                Span span = e->span;
                if constexpr (std::is_same_v<T, Var> || std::is_same_v<T, NumLit> ||
                              std::is_same_v<T, BoolLit>) {
                    return make_expr(span, n);
                } else if constexpr (std::is_same_v<T, Fun>) {
                    return make_expr(span, Fun{n.tau, n.self_name, n.params, go(n.body)});
                } else if constexpr (std::is_same_v<T, App>) {
                    std::vector<ExprPtr> args;
                    args.reserve(n.args.size());
                    bool is_exchange = false;
                    if (const Var* v = std::get_if<Var>(&n.callee->node))
                        is_exchange = v->name == "exchange";
                    for (size_t i = 0; i < n.args.size(); ++i) {
                        ExprPtr arg = n.args[i];
                        // A one-parameter exchange handler only looks at the
                        // incoming values; give it an unused binder for the
                        // previously-sent ones.
                        if (is_exchange && i == 1) {
                            if (const Lambda* lam = std::get_if<Lambda>(&arg->node);
                                lam && lam->params.size() == 1) {
                                arg = make_expr(arg->span,
                                                Lambda{{fresh_name("o"), lam->params[0]},
                                                       lam->body});
                            }
                        }
                        args.push_back(go(arg));
                    }
                    return make_expr(span, App{go(n.callee), std::move(args)});
                } else if constexpr (std::is_same_v<T, Val>) {
                    return make_expr(span, Val{n.name, go(n.bound), go(n.body)});
                } else if constexpr (std::is_same_v<T, If>) {
                    std::vector<ExprPtr> mux_args = {go(n.cond), thunk(span, go(n.then_branch)),
                                                     thunk(span, go(n.else_branch))};
                    ExprPtr mux_call =
                        make_expr(span, App{make_expr(span, Var{"mux"}), std::move(mux_args)});
                    return make_expr(span, App{std::move(mux_call), {}});
                } else if constexpr (std::is_same_v<T, Lambda>) {
                    return make_expr(span, Fun{"", fresh_name("f"), n.params, go(n.body)});
                } else {
                    static_assert(std::is_same_v<T, RetSend>);
                    std::vector<ExprPtr> args = {go(n.ret), go(n.send)};
                    return make_expr(span, App{make_expr(span, Var{"Pair"}), std::move(args)});
                }
            },
            e->node);
    }
};

ExprPtr annotate_rec(const ExprPtr& e, std::uint32_t& next_id, std::uint32_t& next_tau) {
    std::uint32_t id = next_id++;
    ExprPtr out = std::visit(
        [&](const auto& n) -> ExprPtr {
            using T = std::decay_t<decltype(n)>;
            Span span = e->span;
            if constexpr (std::is_same_v<T, Var> || std::is_same_v<T, NumLit> ||
                          std::is_same_v<T, BoolLit>) {
                return make_expr(span, n);
            } else if constexpr (std::is_same_v<T, Fun>) {
                std::string tau = "%t" + std::to_string(next_tau++);
                return make_expr(span, Fun{std::move(tau), n.self_name, n.params,
                                           annotate_rec(n.body, next_id, next_tau)});
            } else if constexpr (std::is_same_v<T, App>) {
                ExprPtr callee = annotate_rec(n.callee, next_id, next_tau);
                std::vector<ExprPtr> args;
                args.reserve(n.args.size());
                for (const ExprPtr& a : n.args) args.push_back(annotate_rec(a, next_id, next_tau));
                return make_expr(span, App{std::move(callee), std::move(args)});
            } else if constexpr (std::is_same_v<T, Val>) {
                ExprPtr bound = annotate_rec(n.bound, next_id, next_tau);
                ExprPtr body = annotate_rec(n.body, next_id, next_tau);
                return make_expr(span, Val{n.name, std::move(bound), std::move(body)});
            } else {
                throw ParseError("internal: annotate called on sugared form", e->span);
            }
        },
        e->node);
    const_cast<Expr*>(out.get())->id = id;
    return out;
}

void free_vars_rec(const ExprPtr& e, std::set<std::string>& bound, std::set<std::string>& out) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Var>) {
                if (!bound.count(n.name)) out.insert(n.name);
            } else if constexpr (std::is_same_v<T, Fun>) {
                std::set<std::string> inner = bound;
                inner.insert(n.self_name);
                inner.insert(n.params.begin(), n.params.end());
                free_vars_rec(n.body, inner, out);
            } else if constexpr (std::is_same_v<T, App>) {
                free_vars_rec(n.callee, bound, out);
                for (const ExprPtr& a : n.args) free_vars_rec(a, bound, out);
            } else if constexpr (std::is_same_v<T, Val>) {
                free_vars_rec(n.bound, bound, out);
                std::set<std::string> inner = bound;
                inner.insert(n.name);
                free_vars_rec(n.body, inner, out);
            } else if constexpr (std::is_same_v<T, If>) {
                free_vars_rec(n.cond, bound, out);
                free_vars_rec(n.then_branch, bound, out);
                free_vars_rec(n.else_branch, bound, out);
            } else if constexpr (std::is_same_v<T, Lambda>) {
                std::set<std::string> inner = bound;
                inner.insert(n.params.begin(), n.params.end());
                free_vars_rec(n.body, inner, out);
            } else if constexpr (std::is_same_v<T, RetSend>) {
                free_vars_rec(n.ret, bound, out);
                if (!n.shared) free_vars_rec(n.send, bound, out);
            }
        },
        e->node);
}

using Renaming = std::map<std::string, std::string>;

bool alpha_rec(const ExprPtr& a, const ExprPtr& b, Renaming ab, Renaming ba);

bool same_var(const std::string& x, const std::string& y, const Renaming& ab, const Renaming& ba) {
    auto ix = ab.find(x);
    auto iy = ba.find(y);
    if (ix != ab.end() || iy != ba.end())
        return ix != ab.end() && iy != ba.end() && ix->second == y && iy->second == x;
    return x == y;  // both free
}

void bind(Renaming& ab, Renaming& ba, const std::string& x, const std::string& y) {
    ab[x] = y;
    ba[y] = x;
}

bool alpha_rec(const ExprPtr& a, const ExprPtr& b, Renaming ab, Renaming ba) {
    if (a->node.index() != b->node.index()) return false;
    return std::visit(
        [&](const auto& na) {
            using T = std::decay_t<decltype(na)>;
            const T& nb = std::get<T>(b->node);
            if constexpr (std::is_same_v<T, Var>) {
                return same_var(na.name, nb.name, ab, ba);
            } else if constexpr (std::is_same_v<T, NumLit>) {
                return na.value == nb.value || (na.value != na.value && nb.value != nb.value);
            } else if constexpr (std::is_same_v<T, BoolLit>) {
                return na.value == nb.value;
            } else if constexpr (std::is_same_v<T, Fun>) {
                if (na.params.size() != nb.params.size()) return false;
                Renaming ab2 = ab, ba2 = ba;
                bind(ab2, ba2, na.self_name, nb.self_name);
                for (size_t i = 0; i < na.params.size(); ++i)
                    bind(ab2, ba2, na.params[i], nb.params[i]);
                return alpha_rec(na.body, nb.body, std::move(ab2), std::move(ba2));
            } else if constexpr (std::is_same_v<T, App>) {
                if (na.args.size() != nb.args.size()) return false;
                if (!alpha_rec(na.callee, nb.callee, ab, ba)) return false;
                for (size_t i = 0; i < na.args.size(); ++i)
                    if (!alpha_rec(na.args[i], nb.args[i], ab, ba)) return false;
                return true;
            } else if constexpr (std::is_same_v<T, Val>) {
                if (!alpha_rec(na.bound, nb.bound, ab, ba)) return false;
                Renaming ab2 = ab, ba2 = ba;
                bind(ab2, ba2, na.name, nb.name);
                return alpha_rec(na.body, nb.body, std::move(ab2), std::move(ba2));
            } else if constexpr (std::is_same_v<T, If>) {
                return alpha_rec(na.cond, nb.cond, ab, ba) &&
                       alpha_rec(na.then_branch, nb.then_branch, ab, ba) &&
                       alpha_rec(na.else_branch, nb.else_branch, ab, ba);
            } else if constexpr (std::is_same_v<T, Lambda>) {
                if (na.params.size() != nb.params.size()) return false;
                Renaming ab2 = ab, ba2 = ba;
                for (size_t i = 0; i < na.params.size(); ++i)
                    bind(ab2, ba2, na.params[i], nb.params[i]);
                return alpha_rec(na.body, nb.body, std::move(ab2), std::move(ba2));
            } else {
                static_assert(std::is_same_v<T, RetSend>);
                return na.shared == nb.shared && alpha_rec(na.ret, nb.ret, ab, ba) &&
                       (na.shared || alpha_rec(na.send, nb.send, ab, ba));
            }
        },
        a->node);
}

}  // namespace

ExprPtr desugar(const ExprPtr& e) {
    Desugarer d;
    return d.go(e);
}

ExprPtr annotate(const ExprPtr& e, std::uint32_t& next_id, std::uint32_t& next_tau) {
    return annotate_rec(e, next_id, next_tau);
}

ExprPtr annotate(const ExprPtr& e) {
    std::uint32_t next_id = 1, next_tau = 0;
    return annotate_rec(e, next_id, next_tau);
}

std::set<std::string> free_vars(const ExprPtr& e) {
    std::set<std::string> bound, out;
    free_vars_rec(e, bound, out);
    return out;
}

bool alpha_equal(const ExprPtr& a, const ExprPtr& b) {
    return alpha_rec(a, b, {}, {});
}

ExprPtr program_to_expr(const SourceProgram& prog) {
    ExprPtr out = prog.main;
    for (auto it = prog.items.rbegin(); it != prog.items.rend(); ++it) {
        ExprPtr fn = make_expr(it->span, Fun{"", it->name, it->params, it->body});
        out = make_expr(it->span, Val{it->name, std::move(fn), std::move(out)});
    }
    return out;
}

}  // namespace xc
