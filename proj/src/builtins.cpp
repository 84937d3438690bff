#include "xc/builtins.hpp"

#include <algorithm>
#include <cmath>

#include "xc/diag.hpp"
#include "xc/value.hpp"

namespace xc {

namespace {

double want_num(const Literal& l, const char* who) {
    if (!l.is_num()) throw RuntimeTypeError(std::string(who) + ": expected a number, got " +
                                            render_literal(l));
    return l.num();
}

bool want_bool(const Literal& l, const char* who) {
    if (!l.is_bool()) throw RuntimeTypeError(std::string(who) + ": expected a boolean, got " +
                                             render_literal(l));
    return l.boolean();
}

// Total order used by <= and >=: numbers by value, bools False < True, pairs
// lexicographic. Throws on functions.
int compare_literals(const Literal& a, const Literal& b) {
    if (a.is_num() && b.is_num()) {
        double x = a.num(), y = b.num();
        if (x < y) return -1;
        if (x > y) return 1;
        return 0;
    }
    if (a.is_bool() && b.is_bool()) return int(a.boolean()) - int(b.boolean());
    const ConsLit* ca = std::get_if<ConsLit>(&a.v);
    const ConsLit* cb = std::get_if<ConsLit>(&b.v);
    if (ca && cb && ca->name == cb->name && ca->args.size() == cb->args.size()) {
        for (size_t i = 0; i < ca->args.size(); ++i) {
            int c = compare_literals(ca->args[i], cb->args[i]);
            if (c != 0) return c;
        }
        return 0;
    }
    throw RuntimeTypeError("cannot order " + render_literal(a) + " and " + render_literal(b));
}

LiteralFn arith(const char* name, double (*op)(double, double)) {
    return [name, op](std::span<const Literal> a) -> Literal {
        return Literal{op(want_num(a[0], name), want_num(a[1], name))};
    };
}

// Scheme construction: variable ids are indices into the scheme's own flag
// table.
Scheme scheme(int num_vars, std::vector<VarFlags> flags, TypePtr body) {
    return Scheme{num_vars, std::move(flags), std::move(body)};
}

Scheme binop_num() {
    return scheme(0, {}, arrow({num_type(), num_type()}, num_type()));
}
Scheme binop_num_lifted() {
    return scheme(0, {}, arrow({field(num_type()), field(num_type())}, field(num_type())));
}
Scheme binop_bool() {
    return scheme(0, {}, arrow({bool_type(), bool_type()}, bool_type()));
}
Scheme binop_bool_lifted() {
    return scheme(0, {}, arrow({field(bool_type()), field(bool_type())}, field(bool_type())));
}
Scheme compare_scheme() {
    return scheme(1, {{true, false}}, arrow({tvar(0), tvar(0)}, bool_type()));
}
Scheme compare_lifted() {
    return scheme(1, {{true, true}},
                  arrow({field(tvar(0)), field(tvar(0))}, field(bool_type())));
}

BuiltinEntry pointwise(std::string name, Scheme s, std::optional<Scheme> lifted, LiteralFn fn) {
    return BuiltinEntry{std::move(name), std::move(s), std::move(lifted), BuiltinKind::Pointwise,
                        std::move(fn)};
}

std::map<std::string, BuiltinEntry> build_registry() {
    std::map<std::string, BuiltinEntry> reg;
    auto add = [&](BuiltinEntry e) { reg.emplace(e.name, std::move(e)); };

    add(pointwise("+", binop_num(), binop_num_lifted(), arith("+", [](double x, double y) {
        return x + y;
    })));
    add(pointwise("-", binop_num(), binop_num_lifted(), arith("-", [](double x, double y) {
        return x - y;
    })));
    add(pointwise("*", binop_num(), binop_num_lifted(), arith("*", [](double x, double y) {
        return x * y;
    })));
    add(pointwise("/", binop_num(), binop_num_lifted(), arith("/", [](double x, double y) {
        return x / y;
    })));
    add(pointwise("min", binop_num(), binop_num_lifted(), arith("min", [](double x, double y) {
        return std::fmin(x, y);
    })));
    add(pointwise("max", binop_num(), binop_num_lifted(), arith("max", [](double x, double y) {
        return std::fmax(x, y);
    })));
    add(pointwise("and", binop_bool(), binop_bool_lifted(), [](std::span<const Literal> a) {
        return Literal{want_bool(a[0], "and") && want_bool(a[1], "and")};
    }));
    add(pointwise("or", binop_bool(), binop_bool_lifted(), [](std::span<const Literal> a) {
        return Literal{want_bool(a[0], "or") || want_bool(a[1], "or")};
    }));
    add(pointwise("==", compare_scheme(), compare_lifted(), [](std::span<const Literal> a) {
        return Literal{literal_equal(a[0], a[1])};
    }));
    add(pointwise("<=", compare_scheme(), compare_lifted(), [](std::span<const Literal> a) {
        return Literal{compare_literals(a[0], a[1]) <= 0};
    }));
    add(pointwise(">=", compare_scheme(), compare_lifted(), [](std::span<const Literal> a) {
        return Literal{compare_literals(a[0], a[1]) >= 0};
    }));

    // mux(c, a, b): both branches are evaluated; c selects entrywise.
    Scheme mux_plain = scheme(1, {{false, false}},
                              arrow({bool_type(), tvar(0), tvar(0)}, tvar(0)));
    Scheme mux_lift = scheme(1, {{false, true}},
                             arrow({field(bool_type()), field(tvar(0)), field(tvar(0))},
                                   field(tvar(0))));
    add(pointwise("mux", std::move(mux_plain), std::move(mux_lift),
                  [](std::span<const Literal> a) {
                      return want_bool(a[0], "mux") ? a[1] : a[2];
                  }));

    Scheme pair_plain = scheme(2, {{false, false}, {false, false}},
                               arrow({tvar(0), tvar(1)}, pair_type(tvar(0), tvar(1))));
    Scheme pair_lift = scheme(2, {{false, true}, {false, true}},
                              arrow({field(tvar(0)), field(tvar(1))},
                                    field(pair_type(tvar(0), tvar(1)))));
    LiteralFn pair_fn = [](std::span<const Literal> a) { return make_pair_lit(a[0], a[1]); };
    add(pointwise("pair", pair_plain, pair_lift, pair_fn));
    add(pointwise("Pair", std::move(pair_plain), std::move(pair_lift), std::move(pair_fn)));

    auto project = [](size_t idx, const char* who) -> LiteralFn {
        return [idx, who](std::span<const Literal> a) -> Literal {
            const ConsLit* c = std::get_if<ConsLit>(&a[0].v);
            if (!c || c->name != "Pair" || c->args.size() != 2)
                throw RuntimeTypeError(std::string(who) + ": expected a pair, got " +
                                       render_literal(a[0]));
            return c->args[idx];
        };
    };
    add(pointwise("fst",
                  scheme(2, {{false, false}, {false, false}},
                         arrow({pair_type(tvar(0), tvar(1))}, tvar(0))),
                  scheme(2, {{false, true}, {false, true}},
                         arrow({field(pair_type(tvar(0), tvar(1)))}, field(tvar(0)))),
                  project(0, "fst")));
    add(pointwise("snd",
                  scheme(2, {{false, false}, {false, false}},
                         arrow({pair_type(tvar(0), tvar(1))}, tvar(1))),
                  scheme(2, {{false, true}, {false, true}},
                         arrow({field(pair_type(tvar(0), tvar(1)))}, field(tvar(1)))),
                  project(1, "snd")));

    // exchange(init, handler): handler sees the field of previously-sent
    // values and the field of incoming neighbour values, and produces a pair
    // of (result, values to send). `init` fills in for absent neighbours.
    {
        TypePtr a = tvar(0), b = tvar(1);
        Scheme s = scheme(2, {{false, true}, {false, false}},
                          arrow({a, arrow({field(a), field(a)}, pair_type(b, field(a)))}, b));
        add(BuiltinEntry{"exchange", std::move(s), std::nullopt, BuiltinKind::Exchange, {}});
    }

    // nfold(f, w, init): folds f over w's neighbour entries (self excluded),
    // in ascending device order, starting from init.
    {
        TypePtr acc = tvar(0), elem = tvar(1);
        Scheme s = scheme(2, {{false, false}, {false, true}},
                          arrow({arrow({acc, elem}, acc), field(elem), acc}, acc));
        add(BuiltinEntry{"nfold", std::move(s), std::nullopt, BuiltinKind::Nfold, {}});
    }

    add(BuiltinEntry{"self",
                     scheme(1, {{false, true}}, arrow({field(tvar(0))}, tvar(0))),
                     std::nullopt, BuiltinKind::Self, {}});
    add(BuiltinEntry{"updateSelf",
                     scheme(1, {{false, true}},
                            arrow({field(tvar(0)), tvar(0)}, field(tvar(0)))),
                     std::nullopt, BuiltinKind::UpdateSelf, {}});
    add(BuiltinEntry{"updateDef",
                     scheme(1, {{false, true}},
                            arrow({field(tvar(0)), tvar(0)}, field(tvar(0)))),
                     std::nullopt, BuiltinKind::UpdateDef, {}});
    add(BuiltinEntry{"uid", scheme(0, {}, arrow({}, num_type())), std::nullopt, BuiltinKind::Uid,
                     {}});
    add(BuiltinEntry{"time", scheme(0, {}, arrow({}, num_type())), std::nullopt,
                     BuiltinKind::Sensor, {}});
    add(BuiltinEntry{"temperature", scheme(0, {}, arrow({}, num_type())), std::nullopt,
                     BuiltinKind::Sensor, {}});
    add(BuiltinEntry{"smoke", scheme(0, {}, arrow({}, num_type())), std::nullopt,
                     BuiltinKind::Sensor, {}});
    add(BuiltinEntry{"gps", scheme(0, {}, arrow({}, pair_type(num_type(), num_type()))),
                     std::nullopt, BuiltinKind::Sensor, {}});
    return reg;
}

}  // namespace

const std::map<std::string, BuiltinEntry>& builtin_registry() {
    static const std::map<std::string, BuiltinEntry> reg = build_registry();
    return reg;
}

const Scheme& sense_dist_scheme() {
    static const Scheme s{0, {}, field(num_type())};
    return s;
}

}  // namespace xc
