#pragma once

#include <string>

#include "xc/ast.hpp"

namespace xc {

// Renders an expression back to concrete syntax. Output reparses to an
// alpha-equivalent tree (generated '%' binders are printed as-is, so only
// trees whose binders are legal identifiers round-trip through the parser).
std::string pretty(const ExprPtr& e);

}  // namespace xc
