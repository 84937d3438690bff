#pragma once

#include <string>
#include <vector>

#include "xc/ast.hpp"

namespace xc {

enum class TokKind {
    Ident,
    Number,
    Keyword,   // def val if else fun retsend return send and or True False Infinity
    Op,        // + - * / == <= >= => = ( ) { } , ;
    End,
};

struct Token {
    TokKind kind;
    std::string text;
    Span span;
};

std::vector<Token> lex(const std::string& source);

// Parses a whole program: zero or more `def` items followed by a main
// expression. Throws ParseError on malformed input.
SourceProgram parse_program(const std::string& source);

// Parses a single expression (used by tests and tools).
ExprPtr parse_expression(const std::string& source);

}  // namespace xc
