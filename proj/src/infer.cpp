#include "xc/infer.hpp"

#include <algorithm>
#include <set>

#include "xc/diag.hpp"
#include "xc/syntax.hpp"

namespace xc {

namespace {

TypePtr substitute(const TypePtr& t, const std::unordered_map<int, TypePtr>& subst) {
    switch (t->kind) {
        case Type::Kind::Var: {
            auto it = subst.find(t->var_id);
            return it == subst.end() ? t : it->second;
        }
        case Type::Kind::Data: {
            std::vector<TypePtr> args;
            args.reserve(t->args.size());
            for (const TypePtr& a : t->args) args.push_back(substitute(a, subst));
            return data(t->name, std::move(args));
        }
        case Type::Kind::Field:
            return field(substitute(t->inner, subst));
        case Type::Kind::Arrow: {
            std::vector<TypePtr> params;
            params.reserve(t->args.size());
            for (const TypePtr& a : t->args) params.push_back(substitute(a, subst));
            return arrow(std::move(params), substitute(t->inner, subst));
        }
    }
    return t;
}

}  // namespace

TypingEnv default_typing_env() {
    TypingEnv env;
    for (const auto& [name, entry] : builtin_registry())
        env.emplace(name, TypingEntry{entry.scheme, entry.lifted ? &entry : nullptr});
    env.emplace("senseDist", TypingEntry{sense_dist_scheme(), nullptr});
    return env;
}

TypePtr Inferencer::fresh(VarFlags flags) {
    int id = next_var_++;
    if (flags.comparable || flags.local_only) flags_[id] = flags;
    return tvar(id);
}

TypePtr Inferencer::walk(const TypePtr& t) const {
    TypePtr cur = t;
    while (cur->kind == Type::Kind::Var) {
        auto it = bindings_.find(cur->var_id);
        if (it == bindings_.end()) break;
        cur = it->second;
    }
    return cur;
}

TypePtr Inferencer::deep_resolve(const TypePtr& t) const {
    TypePtr w = walk(t);
    switch (w->kind) {
        case Type::Kind::Var:
            return w;
        case Type::Kind::Data: {
            std::vector<TypePtr> args;
            for (const TypePtr& a : w->args) args.push_back(deep_resolve(a));
            return data(w->name, std::move(args));
        }
        case Type::Kind::Field:
            return field(deep_resolve(w->inner));
        case Type::Kind::Arrow: {
            std::vector<TypePtr> params;
            for (const TypePtr& a : w->args) params.push_back(deep_resolve(a));
            return arrow(std::move(params), deep_resolve(w->inner));
        }
    }
    return w;
}

bool Inferencer::occurs(int id, const TypePtr& t) const {
    TypePtr w = walk(t);
    if (w->kind == Type::Kind::Var) return w->var_id == id;
    for (const TypePtr& a : w->args)
        if (occurs(id, a)) return true;
    return w->inner && occurs(id, w->inner);
}

void Inferencer::set_comparable(int id) {
    VarFlags& f = flags_[id];
    if (f.comparable) return;
    f.comparable = true;
    log_.push_back({LogItem::Op::SetComparable, id});
}

void Inferencer::set_local(int id) {
    VarFlags& f = flags_[id];
    if (f.local_only) return;
    f.local_only = true;
    log_.push_back({LogItem::Op::SetLocal, id});
}

void Inferencer::apply_flags(const VarFlags& f, const TypePtr& t, Span span) {
    TypePtr w = walk(t);
    if (w->kind == Type::Kind::Var) {
        if (f.comparable) set_comparable(w->var_id);
        if (f.local_only) set_local(w->var_id);
        return;
    }
    if (f.local_only && w->kind == Type::Kind::Field)
        throw TypeError("a field cannot hold another field", span);
    if (f.comparable) {
        if (w->kind == Type::Kind::Field)
            throw TypeError("fields cannot be compared", span);
        if (w->kind == Type::Kind::Arrow)
            throw TypeError("functions cannot be compared", span);
        // PAIR/LIST are comparable when their components are.
        for (const TypePtr& a : w->args) apply_flags(VarFlags{true, false}, a, span);
    }
}

void Inferencer::add_pending(int id, TypePtr elem) {
    pending_.emplace_back(id, std::move(elem));
    log_.push_back({LogItem::Op::AddPending, id});
}

void Inferencer::bind_var(int id, const TypePtr& t, Span span) {
    TypePtr w = walk(t);
    if (w->kind == Type::Kind::Var && w->var_id == id) return;
    if (occurs(id, w)) throw TypeError("cannot construct an infinite type", span);
    auto it = flags_.find(id);
    if (it != flags_.end()) apply_flags(it->second, w, span);
    bindings_[id] = w;
    log_.push_back({LogItem::Op::Bind, id});
    // Settle promotion constraints now that the variable's shape is known.
    std::vector<TypePtr> elems;
    for (const auto& [v, elem] : pending_)
        if (v == id) elems.push_back(elem);
    for (const TypePtr& elem : elems) {
        if (w->kind == Type::Kind::Var)
            add_pending(w->var_id, elem);
        else if (w->kind == Type::Kind::Field)
            unify_at(elem, w->inner, span);
        else
            unify_at(elem, w, span);
    }
}

void Inferencer::rollback(size_t m) {
    while (log_.size() > m) {
        LogItem item = log_.back();
        log_.pop_back();
        switch (item.op) {
            case LogItem::Op::Bind:
                bindings_.erase(item.var);
                break;
            case LogItem::Op::SetComparable:
                flags_[item.var].comparable = false;
                break;
            case LogItem::Op::SetLocal:
                flags_[item.var].local_only = false;
                break;
            case LogItem::Op::AddPending:
                pending_.pop_back();
                break;
        }
    }
}

void Inferencer::unify(const TypePtr& expected, const TypePtr& actual) {
    unify_at(expected, actual, Span{});
}

void Inferencer::unify_at(const TypePtr& expected, const TypePtr& actual, Span span) {
    TypePtr e = walk(expected);
    TypePtr a = walk(actual);
    if (e->kind == Type::Kind::Var && a->kind == Type::Kind::Var && e->var_id == a->var_id) return;
    if (a->kind == Type::Kind::Var) {
        if (e->kind == Type::Kind::Field) {
            // The value may stay local (promoted at use) or be a field; defer
            // the decision.
            add_pending(a->var_id, e->inner);
            return;
        }
        bind_var(a->var_id, e, span);
        return;
    }
    if (e->kind == Type::Kind::Var) {
        bind_var(e->var_id, a, span);
        return;
    }
    if (e->kind == Type::Kind::Field) {
        if (a->kind == Type::Kind::Field) {
            unify_at(e->inner, a->inner, span);
            return;
        }
        // Promotion: a local value is usable wherever a field is expected.
        unify_at(e->inner, a, span);
        return;
    }
    if (e->kind == Type::Kind::Data && a->kind == Type::Kind::Data) {
        if (e->name == a->name && e->args.size() == a->args.size()) {
            for (size_t i = 0; i < e->args.size(); ++i) unify_at(e->args[i], a->args[i], span);
            return;
        }
    } else if (e->kind == Type::Kind::Arrow && a->kind == Type::Kind::Arrow) {
        if (e->args.size() == a->args.size()) {
            for (size_t i = 0; i < e->args.size(); ++i) unify_at(e->args[i], a->args[i], span);
            unify_at(e->inner, a->inner, span);
            return;
        }
    }
    throw TypeError("type mismatch: expected " + show(e) + ", got " + show(a), span);
}

TypePtr Inferencer::instantiate(const Scheme& s) {
    if (s.num_vars == 0) return s.body;
    std::unordered_map<int, TypePtr> subst;
    for (int i = 0; i < s.num_vars; ++i)
        subst[i] = fresh(i < int(s.flags.size()) ? s.flags[i] : VarFlags{});
    return substitute(s.body, subst);
}

void Inferencer::free_type_vars(const TypePtr& t, std::vector<int>& out) const {
    TypePtr w = walk(t);
    if (w->kind == Type::Kind::Var) {
        if (std::find(out.begin(), out.end(), w->var_id) == out.end()) out.push_back(w->var_id);
        return;
    }
    for (const TypePtr& a : w->args) free_type_vars(a, out);
    if (w->inner) free_type_vars(w->inner, out);
}

Scheme Inferencer::generalize(const TypingEnv& env, const TypePtr& t) {
    std::set<int> env_vars;
    for (const auto& [_, entry] : env) {
        std::vector<int> vs;
        free_type_vars(entry.scheme.body, vs);
        for (int v : vs)
            if (v >= entry.scheme.num_vars) env_vars.insert(v);
    }
    // Unresolved promotion constraints on variables being generalized default
    // to the field shape (the more general reading).
    for (size_t i = 0; i < pending_.size(); ++i) {
        TypePtr w = walk(tvar(pending_[i].first));
        if (w->kind == Type::Kind::Var && !env_vars.count(w->var_id))
            bind_var(w->var_id, field(pending_[i].second), Span{});
    }
    std::vector<int> candidates;
    free_type_vars(t, candidates);
    TypePtr body = deep_resolve(t);
    Scheme s;
    std::unordered_map<int, TypePtr> subst;
    for (int v : candidates) {
        if (env_vars.count(v)) continue;
        auto it = flags_.find(v);
        s.flags.push_back(it == flags_.end() ? VarFlags{} : it->second);
        subst[v] = tvar(s.num_vars++);
    }
    s.body = subst.empty() ? body : substitute(body, subst);
    return s;
}

TypePtr Inferencer::infer(const TypingEnv& env, const ExprPtr& e) {
    return std::visit(
        [&](const auto& n) -> TypePtr {
            using T = std::decay_t<decltype(n)>;
            Span span = e->span;
            if constexpr (std::is_same_v<T, NumLit>) {
                return num_type();
            } else if constexpr (std::is_same_v<T, BoolLit>) {
                return bool_type();
            } else if constexpr (std::is_same_v<T, Var>) {
                auto it = env.find(n.name);
                if (it == env.end())
                    throw TypeError("unbound variable '" + n.name + "'", span);
                return instantiate(it->second.scheme);
            } else if constexpr (std::is_same_v<T, Fun>) {
                std::vector<TypePtr> params;
                for (size_t i = 0; i < n.params.size(); ++i) params.push_back(fresh());
                TypePtr ret = fresh();
                TypePtr fn = arrow(params, ret);
                TypingEnv inner = env;
                inner[n.self_name] = TypingEntry{mono(fn)};
                for (size_t i = 0; i < n.params.size(); ++i)
                    inner[n.params[i]] = TypingEntry{mono(params[i])};
                TypePtr body = infer(inner, n.body);
                unify_at(ret, body, span);
                return fn;
            } else if constexpr (std::is_same_v<T, Val>) {
                TypePtr bound = infer(env, n.bound);
                TypingEnv inner = env;
                inner[n.name] = TypingEntry{generalize(env, bound)};
                return infer(inner, n.body);
            } else if constexpr (std::is_same_v<T, App>) {
                // Builtins with an entrywise variant: try the plain scheme
                // first, and fall back to the field version on failure.
                if (const Var* v = std::get_if<Var>(&n.callee->node)) {
                    auto it = env.find(v->name);
                    if (it == env.end())
                        throw TypeError("unbound variable '" + v->name + "'", span);
                    const TypingEntry& entry = it->second;
                    if (entry.builtin) {
                        size_t m = mark();
                        try {
                            return infer_call(env, instantiate(entry.builtin->scheme), n, span);
                        } catch (const TypeError& plain_err) {
                            rollback(m);
                            try {
                                return infer_call(env, instantiate(*entry.builtin->lifted), n,
                                                  span);
                            } catch (const TypeError&) {
                                rollback(m);
                                throw plain_err;
                            }
                        }
                    }
                    return infer_call(env, instantiate(entry.scheme), n, span);
                }
                return infer_call(env, infer(env, n.callee), n, span);
            } else {
                throw TypeError("internal: sugared form reached the type checker", span);
            }
        },
        e->node);
}

TypePtr Inferencer::infer_call(const TypingEnv& env, TypePtr fn_type, const App& app, Span span) {
    TypePtr fn = walk(fn_type);
    if (fn->kind == Type::Kind::Arrow) {
        if (fn->args.size() != app.args.size())
            throw TypeError("expected " + std::to_string(fn->args.size()) + " argument(s), got " +
                                std::to_string(app.args.size()),
                            span);
        for (size_t i = 0; i < app.args.size(); ++i) {
            const ExprPtr& arg = app.args[i];
            TypePtr expected = walk(fn->args[i]);
            const Fun* fun_node = std::get_if<Fun>(&arg->node);
            // Function literals are checked against the expected parameter
            // type directly, so their own parameters pick up field types from
            // the context (crucial for exchange handlers).
            if (fun_node && expected->kind == Type::Kind::Arrow &&
                expected->args.size() == fun_node->params.size()) {
                TypingEnv inner = env;
                inner[fun_node->self_name] = TypingEntry{mono(expected)};
                for (size_t k = 0; k < fun_node->params.size(); ++k)
                    inner[fun_node->params[k]] = TypingEntry{mono(expected->args[k])};
                TypePtr body = infer(inner, fun_node->body);
                unify_at(expected->inner, body, arg->span);
            } else {
                TypePtr actual = infer(env, arg);
                unify_at(expected, actual, arg->span);
            }
        }
        return fn->inner;
    }
    if (fn->kind == Type::Kind::Var) {
        std::vector<TypePtr> params;
        for (const ExprPtr& arg : app.args) params.push_back(infer(env, arg));
        TypePtr ret = fresh();
        unify_at(fn, arrow(std::move(params), ret), span);
        return ret;
    }
    throw TypeError("cannot call a value of type " + show(fn), span);
}

std::string Inferencer::show(const TypePtr& t) const {
    std::map<int, std::string> names;
    auto var_name = [&](int id) -> std::string {
        auto it = names.find(id);
        if (it != names.end()) return it->second;
        size_t k = names.size();
        std::string name;
        do {
            name.insert(name.begin(), char('A' + k % 26));
            k = k / 26;
        } while (k > 0);
        names[id] = name;
        return name;
    };
    auto rec = [&](auto&& self_fn, const TypePtr& ty) -> std::string {
        TypePtr w = walk(ty);
        switch (w->kind) {
            case Type::Kind::Var:
                return var_name(w->var_id);
            case Type::Kind::Data: {
                if (w->args.empty()) return w->name;
                std::string out = w->name + "[";
                for (size_t i = 0; i < w->args.size(); ++i) {
                    if (i) out += ",";
                    out += self_fn(self_fn, w->args[i]);
                }
                return out + "]";
            }
            case Type::Kind::Field:
                return "field[" + self_fn(self_fn, w->inner) + "]";
            case Type::Kind::Arrow: {
                std::string out = "(";
                for (size_t i = 0; i < w->args.size(); ++i) {
                    if (i) out += ", ";
                    out += self_fn(self_fn, w->args[i]);
                }
                return out + ") -> " + self_fn(self_fn, w->inner);
            }
        }
        return "?";
    };
    return rec(rec, t);
}

std::string Inferencer::show_scheme(const Scheme& s) const { return show(s.body); }

TypeReport typecheck_program(const SourceProgram& prog) {
    Inferencer inf;
    TypingEnv env = default_typing_env();
    TypeReport report;
    for (const DefItem& item : prog.items) {
        ExprPtr fn = make_expr(item.span, Fun{"", item.name, item.params, item.body});
        TypePtr t = inf.infer(env, desugar(fn));
        Scheme s = inf.generalize(env, t);
        report.defs.push_back({item.name, inf.show_scheme(s), item.from_prelude});
        env[item.name] = TypingEntry{std::move(s)};
    }
    report.main_type = inf.show(inf.deep_resolve(inf.infer(env, desugar(prog.main))));
    return report;
}

}  // namespace xc
