#include "xc/eval.hpp"

#include <algorithm>
#include <set>

#include "xc/builtins.hpp"
#include "xc/diag.hpp"
#include "xc/value.hpp"

namespace xc {

EnvPtr env_bind(EnvPtr parent, std::string name, NValue value) {
    auto e = std::make_shared<Env>();
    e->name = std::move(name);
    e->value = std::move(value);
    e->parent = std::move(parent);
    return e;
}

const NValue* env_lookup(const EnvPtr& env, const std::string& name) {
    for (const Env* e = env.get(); e; e = e->parent.get())
        if (e->name == name) return &e->value;
    return nullptr;
}

namespace {

// During a round the neighbours' trees are only ever read, so the evaluator
// navigates them by pointer; copying subtrees at every node dominated the
// runtime otherwise.
using TreeRefs = std::map<DeviceId, const ValueTree*>;

class Evaluator {
public:
    Evaluator(DeviceId self, const SensorMap& sensors, const EvalOptions& opts)
        : self_(self), sensors_(sensors), opts_(opts) {}

    EvalResult eval(const ExprPtr& e, const EnvPtr& env, const TreeRefs& trees) {
        if (++steps_ > opts_.step_budget)
            throw StepBudgetExceeded("evaluation exceeded " +
                                     std::to_string(opts_.step_budget) + " steps");
        // Guard the host stack as well: unbounded recursion must surface as a
        // budget failure, not a crash.
        struct DepthGuard {
            std::size_t& d;
            explicit DepthGuard(std::size_t& depth) : d(depth) {
                if (++d > kMaxDepth)
                    throw StepBudgetExceeded("evaluation exceeded recursion depth " +
                                             std::to_string(kMaxDepth));
            }
            ~DepthGuard() { --d; }
        } guard(depth_);
        TreeRefs aligned = align(trees, e->id);
        return std::visit(
            [&](const auto& n) -> EvalResult {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, NumLit>) {
                    return {NValue::lift(Literal{n.value}), branch({}, e->id)};
                } else if constexpr (std::is_same_v<T, BoolLit>) {
                    return {NValue::lift(Literal{n.value}), branch({}, e->id)};
                } else if constexpr (std::is_same_v<T, Var>) {
                    return {lookup_var(n.name, env, e->span), branch({}, e->id)};
                } else if constexpr (std::is_same_v<T, Fun>) {
                    FunClosure c{n.tau, n.self_name, n.params, n.body, env};
                    return {NValue::lift(Literal{std::move(c)}), branch({}, e->id)};
                } else if constexpr (std::is_same_v<T, Val>) {
                    EvalResult bound = eval(n.bound, env, project(aligned, 1));
                    EnvPtr inner = env_bind(env, n.name, bound.value);
                    EvalResult body = eval(n.body, inner, project(aligned, 2));
                    return {body.value,
                            branch({std::move(bound.tree), std::move(body.tree)}, e->id)};
                } else if constexpr (std::is_same_v<T, App>) {
                    return eval_app(n, e, env, aligned);
                } else {
                    throw RuntimeTypeError("internal: sugared form reached the evaluator");
                }
            },
            e->node);
    }

private:
    static constexpr std::size_t kMaxDepth = 2000;

    DeviceId self_;
    const SensorMap& sensors_;
    const EvalOptions& opts_;
    std::size_t steps_ = 0;
    std::size_t depth_ = 0;

    // Drops entries produced by a different expression than the one being
    // evaluated (only detectable for trees that kept their origins).
    static TreeRefs align(const TreeRefs& trees, std::uint32_t id) {
        bool all_ok = true;
        for (const auto& [d, t] : trees)
            if (t->origin != 0 && t->origin != id) {
                all_ok = false;
                break;
            }
        if (all_ok) return trees;
        TreeRefs out;
        for (const auto& [d, t] : trees)
            if (t->origin == 0 || t->origin == id) out.emplace(d, t);
        return out;
    }

    static TreeRefs project(const TreeRefs& trees, size_t i) {
        TreeRefs out;
        for (const auto& [d, t] : trees)
            if (i >= 1 && i <= t->children.size()) out.emplace(d, &t->children[i - 1]);
        return out;
    }

    static TreeRefs filter_by_function(const TreeRefs& trees, const std::string& name) {
        TreeRefs out;
        for (const auto& [d, t] : trees) {
            if (!t->payload) continue;
            if (literal_name(t->payload->lookup(d)) == name) out.emplace(d, t);
        }
        return out;
    }

    NValue lookup_var(const std::string& name, const EnvPtr& env, Span span) {
        if (const NValue* v = env_lookup(env, name)) return *v;
        if (builtin_registry().count(name)) return NValue::lift(Literal{BuiltinRef{name}});
        auto it = sensors_.find(name);
        if (it != sensors_.end()) return it->second;
        throw RuntimeTypeError("unbound variable '" + name + "' at line " +
                               std::to_string(span.line));
    }

    EvalResult eval_app(const App& app, const ExprPtr& node, const EnvPtr& env,
                        const TreeRefs& trees) {
        size_t n = app.args.size();
        std::vector<ValueTree> children;
        children.reserve(n + 2);
        EvalResult callee = eval(app.callee, env, project(trees, 1));
        children.push_back(std::move(callee.tree));
        std::vector<NValue> args;
        args.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            EvalResult r = eval(app.args[i], env, project(trees, i + 2));
            children.push_back(std::move(r.tree));
            args.push_back(std::move(r.value));
        }
        Literal f = callee.value.lookup(self_);
        if (!f.is_function())
            throw RuntimeTypeError("cannot call non-function value " + render_literal(f));
        std::string fname = literal_name(f);
        TreeRefs call_trees = project(filter_by_function(trees, fname), n + 2);
        auto [result, apply_tree] = apply(f, args, call_trees);
        children.push_back(std::move(apply_tree));
        return {std::move(result),
                payload_node(NValue::lift(f), std::move(children), node->id)};
    }

    std::pair<NValue, ValueTree> apply(const Literal& f, const std::vector<NValue>& args,
                                       const TreeRefs& trees) {
        if (const FunClosure* c = std::get_if<FunClosure>(&f.v)) {
            if (c->params.size() != args.size())
                throw RuntimeTypeError("function " + c->self_name + " expects " +
                                       std::to_string(c->params.size()) + " argument(s), got " +
                                       std::to_string(args.size()));
            EnvPtr env = env_bind(c->env, c->self_name, NValue::lift(f));
            for (size_t i = 0; i < args.size(); ++i) env = env_bind(env, c->params[i], args[i]);
            EvalResult body = eval(c->body, env, trees);
            return {std::move(body.value), std::move(body.tree)};
        }
        if (const BuiltinRef* b = std::get_if<BuiltinRef>(&f.v)) {
            return apply_builtin(*b, args, trees);
        }
        throw RuntimeTypeError("cannot apply foreign function " + render_literal(f));
    }

    std::pair<NValue, ValueTree> apply_builtin(const BuiltinRef& b,
                                               const std::vector<NValue>& args,
                                               const TreeRefs& trees) {
        const BuiltinEntry& entry = builtin_registry().at(b.name);
        size_t arity = entry.scheme.body->args.size();
        if (args.size() != arity)
            throw RuntimeTypeError(b.name + " expects " + std::to_string(arity) +
                                   " argument(s), got " + std::to_string(args.size()));
        switch (entry.kind) {
            case BuiltinKind::Pointwise:
                return {pointwise_apply(entry.fn, args), branch()};
            case BuiltinKind::Exchange:
                return eval_exchange(args[0], args[1], trees);
            case BuiltinKind::Nfold:
                return {eval_nfold(args[0], args[1], args[2], trees), branch()};
            case BuiltinKind::Self:
                return {NValue::lift(args[0].lookup(self_)), branch()};
            case BuiltinKind::UpdateSelf:
                return {args[0].update_at(self_, args[1].lookup(self_)), branch()};
            case BuiltinKind::UpdateDef: {
                // Entries present in the neighbourhood (and the device itself)
                // keep their values; everything absent falls to the new
                // default.
                std::map<DeviceId, Literal> kept;
                kept.emplace(self_, args[0].lookup(self_));
                for (const auto& [d, t] : trees) kept.emplace(d, args[0].lookup(d));
                return {NValue(args[1].lookup(self_), std::move(kept)), branch()};
            }
            case BuiltinKind::Uid:
                return {NValue::lift(Literal{double(self_)}), branch()};
            case BuiltinKind::Sensor: {
                auto it = sensors_.find(b.name);
                if (it == sensors_.end())
                    throw RuntimeTypeError("sensor '" + b.name + "' is not available");
                return {it->second, branch()};
            }
        }
        throw RuntimeTypeError("unknown builtin " + b.name);
    }

    std::pair<NValue, ValueTree> eval_exchange(const NValue& init, const NValue& handler,
                                               const TreeRefs& trees) {
        // Usable neighbour entries carry the value field they sent last round.
        TreeRefs present;
        for (const auto& [d, t] : trees)
            if (t->payload) present.emplace(d, t);
        std::vector<DeviceId> keys;
        keys.reserve(present.size());
        for (const auto& [d, t] : present) keys.push_back(d);
        if (opts_.exchange_observer) opts_.exchange_observer(keys);

        NValue incoming = init;
        for (const auto& [d, t] : present)
            incoming = incoming.update_at(d, t->payload->lookup(self_));
        NValue previous = init;
        if (auto it = present.find(self_); it != present.end())
            previous = it->second->payload->restrict_to(keys);

        Literal f = handler.lookup(self_);
        if (!f.is_function())
            throw RuntimeTypeError("exchange: handler is not a function");
        auto [pairs, body_tree] = apply(f, {previous, incoming}, project(present, 1));

        auto split = [](size_t idx) {
            return [idx](std::span<const Literal> a) -> Literal {
                const ConsLit* c = std::get_if<ConsLit>(&a[0].v);
                if (!c || c->name != "Pair" || c->args.size() != 2)
                    throw RuntimeTypeError("exchange: handler must produce a pair, got " +
                                           render_literal(a[0]));
                return c->args[idx];
            };
        };
        std::vector<NValue> one = {pairs};
        NValue ret = pointwise_apply(split(0), one);
        NValue send = pointwise_apply(split(1), one);
        std::vector<ValueTree> children = {std::move(body_tree)};
        return {std::move(ret), payload_node(std::move(send), std::move(children))};
    }

    NValue eval_nfold(const NValue& combiner, const NValue& w, const NValue& init,
                      const TreeRefs& trees) {
        Literal f = combiner.lookup(self_);
        Literal acc = init.lookup(self_);
        for (const auto& [d, t] : trees) {
            if (d == self_) continue;
            const Literal& elem = w.lookup(d);
            if (const BuiltinRef* b = std::get_if<BuiltinRef>(&f.v)) {
                const BuiltinEntry& entry = builtin_registry().at(b->name);
                if (entry.kind != BuiltinKind::Pointwise || !entry.fn)
                    throw RuntimeTypeError("nfold: " + b->name + " cannot combine values");
                std::vector<Literal> pair = {acc, elem};
                acc = entry.fn(pair);
            } else if (std::holds_alternative<FunClosure>(f.v)) {
                auto [r, tree] = apply(f, {NValue::lift(acc), NValue::lift(elem)}, TreeRefs{});
                acc = r.lookup(self_);
            } else {
                throw RuntimeTypeError("nfold: combiner is not a function");
            }
        }
        return NValue::lift(std::move(acc));
    }
};

}  // namespace

EvalResult evaluate_round(const ExprPtr& program, DeviceId self, const TreeMap& neighbour_trees,
                          const SensorMap& sensors, const EvalOptions& opts) {
    Evaluator ev(self, sensors, opts);
    TreeRefs refs;
    for (const auto& [d, t] : neighbour_trees) refs.emplace(d, &t);
    return ev.eval(program, nullptr, refs);
}

}  // namespace xc
