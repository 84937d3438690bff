#include <cctype>
#include <unordered_set>

#include "xc/diag.hpp"
#include "xc/parse.hpp"

namespace xc {

namespace {

const std::unordered_set<std::string> kKeywords = {
    "def", "val", "if", "else", "fun", "retsend", "return",
    "send", "and", "or", "True", "False", "Infinity",
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_cont(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    size_t i = 0;
    int line = 1, col = 1;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        Span span{line, col};
        if (ident_start(c)) {
            size_t start = i;
            while (i < src.size() && ident_cont(src[i])) advance(1);
            // A hyphen continues an identifier only when a letter follows, so
            // names like `ping-pong` lex as one token while `a-b` with digits
            // or spaces is still subtraction.
            while (i + 1 < src.size() && src[i] == '-' &&
                   std::isalpha(static_cast<unsigned char>(src[i + 1]))) {
                advance(1);
                while (i < src.size() && ident_cont(src[i])) advance(1);
            }
            std::string text = src.substr(start, i - start);
            TokKind kind = kKeywords.count(text) ? TokKind::Keyword : TokKind::Ident;
            out.push_back({kind, std::move(text), span});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
            size_t start = i;
            while (i < src.size() && (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '.'))
                advance(1);
            if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
                advance(1);
                if (i < src.size() && (src[i] == '+' || src[i] == '-')) advance(1);
                while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) advance(1);
            }
            out.push_back({TokKind::Number, src.substr(start, i - start), span});
            continue;
        }
        auto two = [&](const char* s) {
            return i + 1 < src.size() && src[i] == s[0] && src[i + 1] == s[1];
        };
        if (two("==") || two("<=") || two(">=") || two("=>")) {
            out.push_back({TokKind::Op, src.substr(i, 2), span});
            advance(2);
            continue;
        }
        if (std::string("+-*/=(){},;").find(c) != std::string::npos) {
            out.push_back({TokKind::Op, std::string(1, c), span});
            advance(1);
            continue;
        }
        throw LexError(std::string("unexpected character '") + c + "'", span);
    }
    out.push_back({TokKind::End, "", Span{line, col}});
    return out;
}

}  // namespace xc
