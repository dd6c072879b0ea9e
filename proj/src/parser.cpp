#include "cycgm/parser.hpp"

#include <cctype>

namespace cycgm {

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::size_t at = pos_;
        if (pos_ >= src_.size()) return {Tok::End, "", at};
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
            Token t{Tok::Number, src_.substr(pos_, end - pos_), at};
            pos_ = end;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
                ++end;
            Token t{Tok::Name, src_.substr(pos_, end - pos_), at};
            pos_ = end;
            return t;
        }
        ++pos_;
        switch (c) {
            case '+': return {Tok::Plus, "+", at};
            case '-': return {Tok::Minus, "-", at};
            case '*': return {Tok::Star, "*", at};
            case '^': return {Tok::Caret, "^", at};
            case '/': return {Tok::Slash, "/", at};
            case '(': return {Tok::LParen, "(", at};
            case ')': return {Tok::RParen, ")", at};
            default: throw ParseError(std::string("unexpected character '") + c + "'", at);
        }
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(const std::string& src, VarTablePtr table)
        : lexer_(src), table_(std::move(table)), cur_(lexer_.next()) {}

    MultiPoly parse() {
        MultiPoly e = expr();
        if (cur_.kind != Tok::End) throw ParseError("unexpected token '" + cur_.text + "'", cur_.offset);
        return e;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    MultiPoly expr() {
        MultiPoly acc = term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const bool minus = cur_.kind == Tok::Minus;
            advance();
            MultiPoly rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (cur_.kind == Tok::Star) {
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    MultiPoly factor() {
        if (cur_.kind == Tok::Minus) {
            advance();
            return -factor();
        }
        MultiPoly base = atom();
        if (cur_.kind == Tok::Caret) {
            advance();
            if (cur_.kind != Tok::Number)
                throw ParseError("exponent must be a nonnegative integer", cur_.offset);
            const unsigned long e = std::stoul(cur_.text);
            advance();
            if (cur_.kind == Tok::Caret) throw ParseError("chained '^' is not allowed", cur_.offset);
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    MultiPoly atom() {
        switch (cur_.kind) {
            case Tok::Number: {
                Integer num(cur_.text);
                advance();
                if (cur_.kind == Tok::Slash) {
                    const std::size_t slash_at = cur_.offset;
                    advance();
                    if (cur_.kind != Tok::Number)
                        throw ParseError("expected an integer after '/'", cur_.offset);
                    Integer den(cur_.text);
                    if (den == 0) throw ParseError("zero denominator in rational literal", slash_at);
                    advance();
                    return MultiPoly::constant(table_, make_rational(num, den));
                }
                return MultiPoly::constant(table_, Rational(num));
            }
            case Tok::Name: {
                auto idx = table_->index_of(cur_.text);
                if (!idx) throw ParseError("unknown variable '" + cur_.text + "'", cur_.offset);
                advance();
                return MultiPoly::variable(table_, *idx);
            }
            case Tok::LParen: {
                advance();
                MultiPoly inner = expr();
                if (cur_.kind != Tok::RParen) throw ParseError("expected ')'", cur_.offset);
                advance();
                return inner;
            }
            default:
                throw ParseError("expected a number, variable or '('", cur_.offset);
        }
    }

    Lexer lexer_;
    VarTablePtr table_;
    Token cur_;
};

}  // namespace

MultiPoly parse_poly(const std::string& src, const VarTablePtr& table) {
    return Parser(src, table).parse();
}

PolyInX parse_poly_in_x(const std::string& src, const VarTablePtr& table) {
    return PolyInX::from_multipoly(parse_poly(src, table));
}

}  // namespace cycgm
