#pragma once

#include <map>
#include <optional>
#include <string>

#include "xc/nvalue.hpp"
#include "xc/types.hpp"

namespace xc {

// How the evaluator runs a builtin.
enum class BuiltinKind {
    Pointwise,   // apply `fn` entrywise over nvalue arguments
    Exchange,    // neighbourhood state exchange
    Nfold,       // fold over neighbour entries of a field
    Self,        // read a field at the executing device
    UpdateSelf,  // overwrite a field's entry for the executing device
    UpdateDef,   // overwrite a field's default, keeping present entries
    Uid,         // device identifier
    Sensor,      // read a named sensor value
};

struct BuiltinEntry {
    std::string name;
    Scheme scheme;
    std::optional<Scheme> lifted;  // entrywise variant over fields, if any
    BuiltinKind kind = BuiltinKind::Pointwise;
    LiteralFn fn;  // set for Pointwise builtins
};

// All builtin functions keyed by name. `pair` and `Pair` are aliases.
const std::map<std::string, BuiltinEntry>& builtin_registry();

// Scheme of the distance sensor variable, field[num].
const Scheme& sense_dist_scheme();

}  // namespace xc
