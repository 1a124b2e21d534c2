#include "adq/expr.hpp"

#include "adq/error.hpp"

#include <cctype>
#include <string>

namespace adq {

ExprPtr Expr::literal(Rational v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::literal;
    e->value = std::move(v);
    return e;
}

ExprPtr Expr::variable(VarId v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::variable;
    e->var = v;
    return e;
}

ExprPtr Expr::binary(Kind k, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

ExprPtr Expr::power(ExprPtr base, unsigned exp) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::pow;
    e->lhs = std::move(base);
    e->exponent = exp;
    return e;
}

ExprPtr Expr::sqrt(ExprPtr arg) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::sqrt;
    e->lhs = std::move(arg);
    return e;
}

namespace {

struct Token {
    enum class Kind { number, letter, ident, op, lparen, rparen, caret, end };
    Kind kind;
    Rational number;
    char ch = '\0';        // letter or operator
    std::string ident;     // multi-letter word ("sqrt")
    int line = 1, column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token current_;

    void bump(char c) {
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            bump(text_[pos_]);
        current_ = Token{};
        current_.line = line_;
        current_.column = col_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::end;
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            bool seen_dot = false;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (std::isdigit(static_cast<unsigned char>(d))) {
                    digits += d;
                } else if (d == '.' && !seen_dot && pos_ + 1 < text_.size() &&
                           std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                    seen_dot = true;
                    digits += d;
                } else {
                    break;
                }
                bump(d);
            }
            current_.kind = Token::Kind::number;
            current_.number = Rational::parse(digits);
            return;
        }
        if (c >= 'a' && c <= 'z') {
            std::string word;
            while (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') {
                word += text_[pos_];
                bump(text_[pos_]);
            }
            if (word.size() == 1) {
                current_.kind = Token::Kind::letter;
                current_.ch = word[0];
            } else {
                current_.kind = Token::Kind::ident;
                current_.ident = word;
            }
            return;
        }
        switch (c) {
            case '+':
            case '-':
            case '*':
            case '/':
                current_.kind = Token::Kind::op;
                current_.ch = c;
                break;
            case '(':
                current_.kind = Token::Kind::lparen;
                break;
            case ')':
                current_.kind = Token::Kind::rparen;
                break;
            case '^':
                current_.kind = Token::Kind::caret;
                break;
            default:
                throw ParseError(std::string("unknown token '") + c + "'", line_, col_);
        }
        bump(c);
    }
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::end)
            throw ParseError("unexpected trailing input", t.line, t.column);
        return e;
    }

private:
    Lexer lex_;

    bool at_op(char c) const {
        return lex_.peek().kind == Token::Kind::op && lex_.peek().ch == c;
    }

    ExprPtr expr() {
        bool negate = false;
        if (at_op('+') || at_op('-')) negate = lex_.take().ch == '-';
        ExprPtr e = term();
        if (negate) e = Expr::binary(Expr::Kind::sub, Expr::literal(Rational(0)), e);
        while (at_op('+') || at_op('-')) {
            char op = lex_.take().ch;
            e = Expr::binary(op == '+' ? Expr::Kind::add : Expr::Kind::sub, e, term());
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (at_op('*') || at_op('/')) {
            char op = lex_.take().ch;
            e = Expr::binary(op == '*' ? Expr::Kind::mul : Expr::Kind::div, e, factor());
        }
        return e;
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (lex_.peek().kind == Token::Kind::caret) {
            Token caret = lex_.take();
            Token t = lex_.peek();
            if (t.kind != Token::Kind::number || !t.number.is_integer() ||
                t.number.is_negative())
                throw ParseError("exponent must be a natural number", t.line, t.column);
            lex_.take();
            unsigned e = static_cast<unsigned>(t.number.num().convert_to<unsigned long long>());
            (void)caret;
            return Expr::power(base, e);
        }
        return base;
    }

    ExprPtr atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::number:
                return Expr::literal(t.number);
            case Token::Kind::letter:
                return Expr::variable(t.ch);
            case Token::Kind::lparen: {
                ExprPtr e = expr();
                expect_rparen();
                return e;
            }
            case Token::Kind::ident: {
                if (t.ident != "sqrt")
                    throw ParseError("unknown token '" + t.ident + "'", t.line, t.column);
                Token open = lex_.take();
                if (open.kind != Token::Kind::lparen)
                    throw ParseError("expected '(' after sqrt", open.line, open.column);
                ExprPtr arg = expr();
                expect_rparen();
                return Expr::sqrt(arg);
            }
            default:
                throw ParseError("expected a value", t.line, t.column);
        }
    }

    void expect_rparen() {
        Token t = lex_.take();
        if (t.kind != Token::Kind::rparen) throw ParseError("expected ')'", t.line, t.column);
    }
};

RationalForm sqrt_of(const RationalForm& arg) {
    if (arg.num().has_radicals() || arg.den().has_radicals())
        throw UnsupportedError("nested radicals unsupported");
    const Poly& n = arg.num().poly_part();
    const Poly& d = arg.den().poly_part();
    if (arg.den_is_one()) return RationalForm(RadicalSum::radical(Poly(1), n));
    // sqrt(n/d) = sqrt(n*d)/d, keeping the radicand polynomial
    return RationalForm(RadicalSum::radical(Poly(1), n * d), RadicalSum(d));
}

void check_radicand_budget(const RadicalSum& s) {
    if (s.radical_terms().size() > 2)
        throw UnsupportedError("more than 2 distinct radicands unsupported");
}

}  // namespace

ExprPtr parse_expr(std::string_view text) {
    return Parser(text).parse();
}

RationalForm to_canonical(const ExprPtr& e) {
    if (!e) throw Error("empty expression");
    RationalForm out;
    switch (e->kind) {
        case Expr::Kind::literal:
            out = RationalForm(Poly(e->value));
            break;
        case Expr::Kind::variable:
            out = RationalForm(Poly::variable(e->var));
            break;
        case Expr::Kind::add:
            out = to_canonical(e->lhs) + to_canonical(e->rhs);
            break;
        case Expr::Kind::sub:
            out = to_canonical(e->lhs) - to_canonical(e->rhs);
            break;
        case Expr::Kind::mul:
            out = to_canonical(e->lhs) * to_canonical(e->rhs);
            break;
        case Expr::Kind::div:
            out = to_canonical(e->lhs) / to_canonical(e->rhs);
            break;
        case Expr::Kind::pow:
            out = to_canonical(e->lhs).pow(e->exponent);
            break;
        case Expr::Kind::sqrt:
            out = sqrt_of(to_canonical(e->lhs));
            break;
    }
    check_radicand_budget(out.num());
    check_radicand_budget(out.den());
    return out;
}

RationalForm canonical_form(std::string_view text) {
    return to_canonical(parse_expr(text));
}

}  // namespace adq
