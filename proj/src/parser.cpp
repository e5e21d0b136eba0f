#include "ctab/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "ctab/errors.hpp"

namespace ctab {

namespace {

enum class Tok { Ident, Eq, Amp, Comma, Dot, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        std::size_t start = pos_;
        if (pos_ >= src_.size()) return {Tok::End, {}, start};
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_'))
                ++pos_;
            return {Tok::Ident, src_.substr(start, pos_ - start), start};
        }
        ++pos_;
        switch (c) {
            case '=': return {Tok::Eq, src_.substr(start, 1), start};
            case '&': return {Tok::Amp, src_.substr(start, 1), start};
            case ',': return {Tok::Comma, src_.substr(start, 1), start};
            case '.': return {Tok::Dot, src_.substr(start, 1), start};
            case '(': return {Tok::LParen, src_.substr(start, 1), start};
            case ')': return {Tok::RParen, src_.substr(start, 1), start};
            default: break;
        }
        fail("unexpected character '" + std::string(1, c) + "'", start);
    }

    [[noreturn]] void fail(const std::string& msg, std::size_t offset) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < offset && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + msg,
                         line, col);
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    Formula parse() {
        Formula f = formula();
        expect(Tok::End, "end of input");
        return f;
    }

private:
    Lexer lexer_;
    Token tok_{Tok::End, {}, 0};

    void advance() { tok_ = lexer_.next(); }

    void expect(Tok kind, const std::string& what) {
        if (tok_.kind != kind)
            lexer_.fail("expected " + what, tok_.offset);
        advance();
    }

    bool is_keyword(std::string_view kw) const {
        return tok_.kind == Tok::Ident && tok_.text == kw;
    }

    Variable variable() {
        if (tok_.kind != Tok::Ident || tok_.text == "exists" ||
            tok_.text == "true" || tok_.text == "false")
            lexer_.fail("expected a variable", tok_.offset);
        Variable x = Variable::named(tok_.text);
        advance();
        return x;
    }

    Formula formula() {
        if (is_keyword("exists")) {
            advance();
            std::vector<Variable> bound;
            bound.push_back(variable());
            while (tok_.kind == Tok::Comma) {
                advance();
                bound.push_back(variable());
            }
            expect(Tok::Dot, "'.' after the quantified variables");
            Formula body = formula();
            for (auto it = bound.rbegin(); it != bound.rend(); ++it)
                body = Formula::exists(*it, std::move(body));
            return body;
        }
        return conj();
    }

    Formula conj() {
        Formula f = atom();
        while (tok_.kind == Tok::Amp) {
            advance();
            f = Formula::conj(std::move(f), atom());
        }
        return f;
    }

    Formula atom() {
        if (tok_.kind == Tok::LParen) {
            advance();
            Formula f = formula();
            expect(Tok::RParen, "')'");
            return f;
        }
        if (is_keyword("true")) {
            advance();
            return Formula::truth();
        }
        if (is_keyword("false")) {
            advance();
            return Formula::falsity();
        }
        if (tok_.kind != Tok::Ident)
            lexer_.fail("expected an atom", tok_.offset);
        Token head = tok_;
        advance();
        if (tok_.kind == Tok::LParen) {
            advance();
            std::vector<Variable> args;
            args.push_back(variable());
            while (tok_.kind == Tok::Comma) {
                advance();
                args.push_back(variable());
            }
            expect(Tok::RParen, "')'");
            return Formula::rel(std::string(head.text), std::move(args));
        }
        if (tok_.kind == Tok::Eq) {
            if (head.text == "exists")
                lexer_.fail("'exists' cannot be used as a variable", head.offset);
            advance();
            Variable lhs = Variable::named(head.text);
            return Formula::eq(lhs, variable());
        }
        lexer_.fail("expected '=' or '(' after '" + std::string(head.text) + "'",
                    tok_.offset);
    }
};

}  // namespace

Formula parse_formula(std::string_view src) { return Parser(src).parse(); }

}  // namespace ctab
