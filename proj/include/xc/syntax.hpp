#pragma once

#include <set>
#include <string>

#include "xc/ast.hpp"

namespace xc {

// Rewrites surface-only forms into the five core forms:
//   - if (c) {a} else {b}        =>  mux(c, () => a, () => b)()
//   - (x...) => e                =>  fun %fN(x...) { e }
//   - retsend e                  =>  Pair(e, e)
//   - return e1 send e2          =>  Pair(e1, e2)
//   - exchange(i, (n) => b)      =>  exchange(i, (%oN, n) => b)
// Names starting with '%' cannot be written in source, so generated binders
// never capture user variables.
ExprPtr desugar(const ExprPtr& e);

// Assigns every node a distinct positive id (pre-order) and every function
// node a distinct alignment name %t0, %t1, ... Returns a fresh tree; input is
// untouched. `next_id`/`next_tau` let callers number several trees from one
// shared sequence.
ExprPtr annotate(const ExprPtr& e, std::uint32_t& next_id, std::uint32_t& next_tau);
ExprPtr annotate(const ExprPtr& e);

// Free variables of an expression (surface or core forms).
std::set<std::string> free_vars(const ExprPtr& e);

// Structural equality up to consistent renaming of bound variables. Ignores
// ids, alignment names, and spans.
bool alpha_equal(const ExprPtr& a, const ExprPtr& b);

// Flattens a program's definitions into one expression:
//   def f(x) { b }  ...  main    ==>   val f = fun f(x) { b }; ... main
ExprPtr program_to_expr(const SourceProgram& prog);

}  // namespace xc
