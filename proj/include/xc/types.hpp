#pragma once

#include <memory>
#include <string>
#include <vector>

namespace xc {

struct Type;
using TypePtr = std::shared_ptr<const Type>;

// Types are either type variables, data types (num, bool, PAIR[..], LIST[..]),
// neighbourhood-field types field[T], or function types (T..) -> T.
struct Type {
    enum class Kind { Var, Data, Field, Arrow };
    Kind kind;
    int var_id = -1;           // Kind::Var
    std::string name;          // Kind::Data
    std::vector<TypePtr> args; // Kind::Data arguments / Kind::Arrow parameters
    TypePtr inner;             // Kind::Field element / Kind::Arrow result
};

inline TypePtr tvar(int id) {
    auto t = std::make_shared<Type>();
    t->kind = Type::Kind::Var;
    t->var_id = id;
    return t;
}

inline TypePtr data(std::string name, std::vector<TypePtr> args = {}) {
    auto t = std::make_shared<Type>();
    t->kind = Type::Kind::Data;
    t->name = std::move(name);
    t->args = std::move(args);
    return t;
}

inline TypePtr num_type() { return data("num"); }
inline TypePtr bool_type() { return data("bool"); }
inline TypePtr pair_type(TypePtr a, TypePtr b) {
    return data("PAIR", {std::move(a), std::move(b)});
}

inline TypePtr field(TypePtr elem) {
    auto t = std::make_shared<Type>();
    t->kind = Type::Kind::Field;
    t->inner = std::move(elem);
    return t;
}

inline TypePtr arrow(std::vector<TypePtr> params, TypePtr ret) {
    auto t = std::make_shared<Type>();
    t->kind = Type::Kind::Arrow;
    t->args = std::move(params);
    t->inner = std::move(ret);
    return t;
}

// Constraints attached to a type variable.
struct VarFlags {
    bool comparable = false;  // usable with ==, <=, >=
    bool local_only = false;  // may not become a field (field elements)
};

// A polymorphic type: `body` uses variable ids 0..num_vars-1, instantiated
// fresh at every use site.
struct Scheme {
    int num_vars = 0;
    std::vector<VarFlags> flags;  // one per quantified variable
    TypePtr body;
};

inline Scheme mono(TypePtr t) { return Scheme{0, {}, std::move(t)}; }

}  // namespace xc
