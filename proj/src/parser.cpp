#include <limits>

#include "xc/diag.hpp"
#include "xc/parse.hpp"

namespace xc {

namespace {

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    SourceProgram program() {
        SourceProgram prog;
        while (at_keyword("def")) prog.items.push_back(def_item());
        prog.main = expr();
        expect_end();
        return prog;
    }

    ExprPtr single_expr() {
        ExprPtr e = expr();
        expect_end();
        return e;
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;

    const Token& peek(size_t off = 0) const {
        size_t i = pos_ + off;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool at_op(const std::string& t) const {
        return peek().kind == TokKind::Op && peek().text == t;
    }
    bool at_keyword(const std::string& t) const {
        return peek().kind == TokKind::Keyword && peek().text == t;
    }
    void expect_op(const std::string& t) {
        if (!at_op(t)) throw ParseError("expected '" + t + "', got '" + peek().text + "'", peek().span);
        take();
    }
    void expect_keyword(const std::string& t) {
        if (!at_keyword(t))
            throw ParseError("expected '" + t + "', got '" + peek().text + "'", peek().span);
        take();
    }
    std::string expect_ident() {
        if (peek().kind != TokKind::Ident)
            throw ParseError("expected identifier, got '" + peek().text + "'", peek().span);
        return take().text;
    }
    void expect_end() {
        if (peek().kind != TokKind::End)
            throw ParseError("unexpected trailing input '" + peek().text + "'", peek().span);
    }

    std::vector<std::string> param_list() {
        expect_op("(");
        std::vector<std::string> params;
        if (!at_op(")")) {
            params.push_back(expect_ident());
            while (at_op(",")) {
                take();
                params.push_back(expect_ident());
            }
        }
        expect_op(")");
        return params;
    }

    DefItem def_item() {
        Span span = peek().span;
        expect_keyword("def");
        std::string name = expect_ident();
        std::vector<std::string> params = param_list();
        expect_op("{");
        ExprPtr body = expr();
        expect_op("}");
        return DefItem{std::move(name), std::move(params), std::move(body), span, false};
    }

    ExprPtr expr() {
        Span span = peek().span;
        if (at_keyword("val")) {
            take();
            std::string name = expect_ident();
            expect_op("=");
            ExprPtr bound = expr();
            expect_op(";");
            ExprPtr body = expr();
            return make_expr(span, Val{std::move(name), std::move(bound), std::move(body)});
        }
        if (at_keyword("retsend")) {
            take();
            ExprPtr e = expr();
            return make_expr(span, RetSend{true, e, e});
        }
        if (at_keyword("return")) {
            take();
            ExprPtr ret = or_expr();
            expect_keyword("send");
            ExprPtr send = expr();
            return make_expr(span, RetSend{false, std::move(ret), std::move(send)});
        }
        return or_expr();
    }

    ExprPtr binop(Span span, const std::string& op, ExprPtr lhs, ExprPtr rhs) {
        return make_expr(span, App{make_expr(span, Var{op}), {std::move(lhs), std::move(rhs)}});
    }

    ExprPtr or_expr() {
        ExprPtr lhs = and_expr();
        while (at_keyword("or")) {
            Span span = take().span;
            lhs = binop(span, "or", std::move(lhs), and_expr());
        }
        return lhs;
    }

    ExprPtr and_expr() {
        ExprPtr lhs = cmp_expr();
        while (at_keyword("and")) {
            Span span = take().span;
            lhs = binop(span, "and", std::move(lhs), cmp_expr());
        }
        return lhs;
    }

    ExprPtr cmp_expr() {
        ExprPtr lhs = add_expr();
        while (at_op("==") || at_op("<=") || at_op(">=")) {
            Token t = take();
            lhs = binop(t.span, t.text, std::move(lhs), add_expr());
        }
        return lhs;
    }

    ExprPtr add_expr() {
        ExprPtr lhs = mul_expr();
        while (at_op("+") || at_op("-")) {
            Token t = take();
            lhs = binop(t.span, t.text, std::move(lhs), mul_expr());
        }
        return lhs;
    }

    ExprPtr mul_expr() {
        ExprPtr lhs = postfix_expr();
        while (at_op("*") || at_op("/")) {
            Token t = take();
            lhs = binop(t.span, t.text, std::move(lhs), postfix_expr());
        }
        return lhs;
    }

    ExprPtr postfix_expr() {
        ExprPtr e = primary();
        while (at_op("(")) {
            Span span = peek().span;
            take();
            std::vector<ExprPtr> args;
            if (!at_op(")")) {
                args.push_back(expr());
                while (at_op(",")) {
                    take();
                    args.push_back(expr());
                }
            }
            expect_op(")");
            e = make_expr(span, App{std::move(e), std::move(args)});
        }
        return e;
    }

    // True when '(' opens a lambda parameter list, i.e. the matching ')' is
    // immediately followed by '=>'.
    bool lambda_ahead() const {
        int depth = 0;
        size_t i = pos_;
        while (i < toks_.size()) {
            const Token& t = toks_[i];
            if (t.kind == TokKind::Op && t.text == "(") ++depth;
            if (t.kind == TokKind::Op && t.text == ")") {
                --depth;
                if (depth == 0) {
                    const Token& next = i + 1 < toks_.size() ? toks_[i + 1] : toks_.back();
                    return next.kind == TokKind::Op && next.text == "=>";
                }
            }
            ++i;
        }
        return false;
    }

    ExprPtr primary() {
        const Token& t = peek();
        Span span = t.span;
        if (t.kind == TokKind::Number) {
            take();
            return make_expr(span, NumLit{std::stod(t.text)});
        }
        if (at_keyword("True") || at_keyword("False")) {
            bool v = take().text == "True";
            return make_expr(span, BoolLit{v});
        }
        if (at_keyword("Infinity")) {
            take();
            return make_expr(span, NumLit{std::numeric_limits<double>::infinity()});
        }
        if (at_keyword("fun")) {
            take();
            std::string name = expect_ident();
            std::vector<std::string> params = param_list();
            expect_op("{");
            ExprPtr body = expr();
            expect_op("}");
            return make_expr(span, Fun{"", std::move(name), std::move(params), std::move(body)});
        }
        if (at_keyword("if")) {
            take();
            expect_op("(");
            ExprPtr cond = expr();
            expect_op(")");
            expect_op("{");
            ExprPtr then_branch = expr();
            expect_op("}");
            expect_keyword("else");
            expect_op("{");
            ExprPtr else_branch = expr();
            expect_op("}");
            return make_expr(span,
                             If{std::move(cond), std::move(then_branch), std::move(else_branch)});
        }
        if (at_op("(")) {
            if (lambda_ahead()) {
                std::vector<std::string> params = param_list();
                expect_op("=>");
                ExprPtr body = expr();
                return make_expr(span, Lambda{std::move(params), std::move(body)});
            }
            take();
            ExprPtr inner = expr();
            expect_op(")");
            return inner;
        }
        if (t.kind == TokKind::Ident) {
            take();
            return make_expr(span, Var{t.text});
        }
        if (t.kind == TokKind::Op) {
            // Operators used as first-class values, e.g. nfold(min, ..) uses an
            // identifier but nfold(+, w, 0) passes the operator itself.
            static const char* kOpVars[] = {"+", "-", "*", "/", "==", "<=", ">="};
            for (const char* op : kOpVars) {
                if (t.text == op) {
                    const Token& next = peek(1);
                    bool value_position =
                        next.kind == TokKind::Op && (next.text == "," || next.text == ")");
                    if (t.text == "-" && !value_position) {
                        // Negative literal.
                        take();
                        if (peek().kind == TokKind::Number) {
                            double v = std::stod(take().text);
                            return make_expr(span, NumLit{-v});
                        }
                        if (at_keyword("Infinity")) {
                            take();
                            return make_expr(span,
                                             NumLit{-std::numeric_limits<double>::infinity()});
                        }
                        throw ParseError("expected number after unary '-'", span);
                    }
                    if (value_position) {
                        take();
                        return make_expr(span, Var{t.text});
                    }
                }
            }
        }
        throw ParseError("unexpected token '" + t.text + "'", span);
    }
};

}  // namespace

SourceProgram parse_program(const std::string& source) {
    Parser p(lex(source));
    return p.program();
}

ExprPtr parse_expression(const std::string& source) {
    Parser p(lex(source));
    return p.single_expr();
}

}  // namespace xc
