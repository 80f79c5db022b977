#include "parayam/parser.hpp"

#include <cctype>
#include <string>

namespace parayam {

namespace {

struct Token {
    enum Kind { Integer, Symbol, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string_view text;
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Token::End, {}, start};
            return;
        }
        const char ch = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            current_ = {Token::Integer, text_.substr(start, pos_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            current_ = {Token::Symbol, text_.substr(start, pos_ - start), start};
            return;
        }
        ++pos_;
        switch (ch) {
        case '+': current_ = {Token::Plus, text_.substr(start, 1), start}; return;
        case '-': current_ = {Token::Minus, text_.substr(start, 1), start}; return;
        case '*': current_ = {Token::Star, text_.substr(start, 1), start}; return;
        case '/': current_ = {Token::Slash, text_.substr(start, 1), start}; return;
        case '^': current_ = {Token::Caret, text_.substr(start, 1), start}; return;
        case '(': current_ = {Token::LParen, text_.substr(start, 1), start}; return;
        case ')': current_ = {Token::RParen, text_.substr(start, 1), start}; return;
        default:
            throw ParseError(std::string("unexpected character '") + ch + "'", start);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_{Token::End, {}, 0};
};

class Parser {
public:
    Parser(std::string_view text, const SymbolTable& table) : lexer_(text), table_(table) {}

    ScalarExpr parse() {
        ScalarExpr e = parse_sum();
        const Token& t = lexer_.peek();
        if (t.kind != Token::End)
            throw ParseError("unexpected trailing input", t.offset);
        return e;
    }

private:
    ScalarExpr parse_sum() {
        ScalarExpr acc = parse_product();
        while (true) {
            const Token::Kind k = lexer_.peek().kind;
            if (k == Token::Plus) {
                lexer_.next();
                acc += parse_product();
            } else if (k == Token::Minus) {
                lexer_.next();
                acc -= parse_product();
            } else {
                return acc;
            }
        }
    }

    ScalarExpr parse_product() {
        ScalarExpr acc = parse_unary();
        while (true) {
            const Token::Kind k = lexer_.peek().kind;
            if (k == Token::Star) {
                lexer_.next();
                acc *= parse_unary();
            } else if (k == Token::Slash) {
                const Token t = lexer_.next();
                const ScalarExpr rhs = parse_unary();
                if (rhs.is_zero()) throw ParseError("division by zero", t.offset);
                acc /= rhs;
            } else {
                return acc;
            }
        }
    }

    ScalarExpr parse_unary() {
        const Token::Kind k = lexer_.peek().kind;
        if (k == Token::Minus) {
            lexer_.next();
            return -parse_unary();
        }
        if (k == Token::Plus) {
            lexer_.next();
            return parse_unary();
        }
        return parse_power();
    }

    ScalarExpr parse_power() {
        ScalarExpr base = parse_atom();
        if (lexer_.peek().kind != Token::Caret) return base;
        const Token caret = lexer_.next();
        const long e = parse_exponent();
        if (e < 0 && base.is_zero())
            throw ParseError("zero raised to a negative power", caret.offset);
        return base.pow(e);
    }

    long parse_exponent() {
        bool parenthesized = false;
        if (lexer_.peek().kind == Token::LParen) {
            parenthesized = true;
            lexer_.next();
        }
        long sign = 1;
        if (lexer_.peek().kind == Token::Minus) {
            lexer_.next();
            sign = -1;
        }
        const Token t = lexer_.next();
        if (t.kind != Token::Integer)
            throw ParseError("exponent must be an integer literal", t.offset);
        long value = 0;
        try {
            value = std::stol(std::string(t.text));
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", t.offset);
        }
        if (parenthesized) {
            const Token close = lexer_.next();
            if (close.kind != Token::RParen)
                throw ParseError("expected ')' after exponent", close.offset);
        }
        return sign * value;
    }

    ScalarExpr parse_atom() {
        const Token t = lexer_.next();
        switch (t.kind) {
        case Token::Integer:
            return ScalarExpr::constant(Rational(Integer(std::string(t.text))));
        case Token::Symbol: {
            if (t.text == "exp") {
                const Token open = lexer_.next();
                if (open.kind != Token::LParen)
                    throw ParseError("expected '(' after exp", open.offset);
                const ScalarExpr arg = parse_sum();
                const Token close = lexer_.next();
                if (close.kind != Token::RParen)
                    throw ParseError("expected ')' to close exp", close.offset);
                try {
                    return ScalarExpr::exponential(arg);
                } catch (const Error& err) {
                    throw ParseError(err.what(), t.offset);
                }
            }
            const auto id = table_.find(t.text);
            if (!id)
                throw ParseError("unknown symbol '" + std::string(t.text) + "'", t.offset);
            return ScalarExpr::symbol(*id);
        }
        case Token::LParen: {
            const ScalarExpr e = parse_sum();
            const Token close = lexer_.next();
            if (close.kind != Token::RParen)
                throw ParseError("expected ')'", close.offset);
            return e;
        }
        case Token::End:
            throw ParseError("unexpected end of input", t.offset);
        default:
            throw ParseError("unexpected token '" + std::string(t.text) + "'", t.offset);
        }
    }

    Lexer lexer_;
    const SymbolTable& table_;
};

} // namespace

ScalarExpr parse_expr(std::string_view text, const SymbolTable& table) {
    return Parser(text, table).parse();
}

} // namespace parayam
