#pragma once

#include <string>

#include "xc/ast.hpp"

namespace xc {

// Library definitions every program gets implicitly (nbr, old), built on
// exchange. A user definition with the same name replaces the library one.
const std::string& prelude_source();

struct Program {
    SourceProgram surface;  // prelude items (unless shadowed) + user items
    ExprPtr core;           // whole program as one desugared, annotated expression
};

// Parse + prelude injection + desugar + name/id annotation.
Program load_program(const std::string& source);

std::string slurp(const std::string& path);

}  // namespace xc
