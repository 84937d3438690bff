#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "xc/ast.hpp"
#include "xc/builtins.hpp"
#include "xc/types.hpp"

namespace xc {

struct TypingEntry {
    Scheme scheme;
    // Set when this entry is a builtin with an entrywise field variant; lets
    // call sites retry with the lifted scheme. Null for user bindings.
    const BuiltinEntry* builtin = nullptr;
};

using TypingEnv = std::map<std::string, TypingEntry>;

// Builtins plus the free distance-sensor variable senseDist : field[num].
TypingEnv default_typing_env();

// Hindley–Milner style inference over core expressions (post-desugar).
// Field types support one-way promotion: where a field[T] is expected, a
// local T is accepted. The reverse is an error.
class Inferencer {
public:
    TypePtr fresh(VarFlags flags = {});
    // Follows variable bindings until the top constructor is stable.
    TypePtr walk(const TypePtr& t) const;
    // Substitutes bindings everywhere in the type.
    TypePtr deep_resolve(const TypePtr& t) const;
    // Makes `actual` usable where `expected` is required; throws TypeError.
    void unify(const TypePtr& expected, const TypePtr& actual);
    TypePtr instantiate(const Scheme& s);
    Scheme generalize(const TypingEnv& env, const TypePtr& t);
    TypePtr infer(const TypingEnv& env, const ExprPtr& e);

    // Trial-unification support: rollback undoes all bindings and constraint
    // changes made after mark.
    size_t mark() const { return log_.size(); }
    void rollback(size_t m);

    // Renders a type with unresolved variables named A, B, ... in order of
    // first appearance.
    std::string show(const TypePtr& t) const;
    std::string show_scheme(const Scheme& s) const;

private:
    struct LogItem {
        enum class Op { Bind, SetComparable, SetLocal, AddPending } op;
        int var;
    };

    void bind_var(int id, const TypePtr& t, Span span);
    void apply_flags(const VarFlags& f, const TypePtr& t, Span span);
    void set_comparable(int id);
    void set_local(int id);
    bool occurs(int id, const TypePtr& t) const;
    void unify_at(const TypePtr& expected, const TypePtr& actual, Span span);
    TypePtr infer_call(const TypingEnv& env, TypePtr fn_type, const App& app, Span span);
    void free_type_vars(const TypePtr& t, std::vector<int>& out) const;

    std::unordered_map<int, TypePtr> bindings_;
    std::unordered_map<int, VarFlags> flags_;
    // Deferred promotions: the variable must become either T or field[T].
    // Resolved when the variable is bound; unresolved ones default to
    // field[T] at generalization.
    std::vector<std::pair<int, TypePtr>> pending_;
    void add_pending(int id, TypePtr elem);
    std::vector<LogItem> log_;
    // Fresh ids start above any id used inside a Scheme body, so quantified
    // ids (0, 1, ...) never collide with live inference variables.
    int next_var_ = 100;
};

struct TypeReport {
    struct Item {
        std::string name;
        std::string type;
        bool from_prelude = false;
    };
    std::vector<Item> defs;
    std::string main_type;
};

// Desugars and type-checks a whole parsed program; definitions are processed
// in order and may use everything defined before them. Throws TypeError.
TypeReport typecheck_program(const SourceProgram& prog);

}  // namespace xc
