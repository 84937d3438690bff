#pragma once

#include <stdexcept>
#include <string>

namespace xc {

struct Span {
    int line = 0;
    int col = 0;
};

inline std::string span_text(Span s) {
    return std::to_string(s.line) + ":" + std::to_string(s.col);
}

// Error carrying a source location; base of all lex/parse/type diagnostics.
class Diagnostic : public std::runtime_error {
public:
    Diagnostic(std::string kind, const std::string& msg, Span span)
        : std::runtime_error(kind + " at " + span_text(span) + ": " + msg),
          kind_(std::move(kind)),
          span_(span) {}

    const std::string& kind() const { return kind_; }
    Span span() const { return span_; }

private:
    std::string kind_;
    Span span_;
};

class LexError : public Diagnostic {
public:
    LexError(const std::string& msg, Span span) : Diagnostic("lex error", msg, span) {}
};

class ParseError : public Diagnostic {
public:
    ParseError(const std::string& msg, Span span) : Diagnostic("parse error", msg, span) {}
};

class TypeError : public Diagnostic {
public:
    TypeError(const std::string& msg, Span span) : Diagnostic("type error", msg, span) {}
};

// Raised when evaluation dispatches on a non-function, hits an arity mismatch
// or applies a builtin to the wrong kind of literal. Unreachable from
// well-typed programs.
class RuntimeTypeError : public std::runtime_error {
public:
    explicit RuntimeTypeError(const std::string& msg)
        : std::runtime_error("runtime type error: " + msg) {}
};

// Raised when a round exceeds its reduction budget.
class StepBudgetExceeded : public std::runtime_error {
public:
    StepBudgetExceeded() : std::runtime_error("step budget exceeded") {}
    explicit StepBudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error("config error: " + msg) {}
};

}  // namespace xc
