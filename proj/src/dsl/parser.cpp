#include "babbage/dsl/parser.hpp"

#include <cctype>
#include <numeric>

#include "babbage/errors.hpp"
#include "babbage/exact/cyclotomic.hpp"

namespace babbage::dsl {

namespace {

constexpr std::size_t kMaxDepth = 256;
constexpr std::size_t kMaxSmallIntDigits = 9;

enum class Tok { number, ident, lparen, rparen, comma, equals, plus, minus, star, slash, caret, end };

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::end:
            return "end of input";
        case Tok::number:
        case Tok::ident:
            return "'" + t.text + "'";
        default:
            return "'" + t.text + "'";
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            const SourcePos pos{line_, col_};
            if (i_ == text_.size()) {
                out.push_back({Tok::end, "", pos});
                return out;
            }
            const char c = text_[i_];
            const auto uc = static_cast<unsigned char>(c);
            if (std::isdigit(uc)) {
                std::string digits;
                while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
                    digits += text_[i_];
                    advance();
                }
                out.push_back({Tok::number, digits, pos});
            } else if (std::isalpha(uc) || c == '_') {
                std::string ident;
                while (i_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) {
                    ident += text_[i_];
                    advance();
                }
                out.push_back({Tok::ident, ident, pos});
            } else {
                Tok kind;
                switch (c) {
                    case '(': kind = Tok::lparen; break;
                    case ')': kind = Tok::rparen; break;
                    case ',': kind = Tok::comma; break;
                    case '=': kind = Tok::equals; break;
                    case '+': kind = Tok::plus; break;
                    case '-': kind = Tok::minus; break;
                    case '*': kind = Tok::star; break;
                    case '/': kind = Tok::slash; break;
                    case '^': kind = Tok::caret; break;
                    default: {
                        std::string shown = std::isprint(uc) ? std::string(1, c) : "byte " + std::to_string(uc);
                        throw ParseError("unexpected character " + shown, pos.line, pos.column);
                    }
                }
                out.push_back({kind, std::string(1, c), pos});
                advance();
            }
        }
    }

private:
    void advance() {
        if (text_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    void skip_ws() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) {
            advance();
        }
    }

    std::string_view text_;
    std::size_t i_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, std::size_t arity) : toks_(std::move(tokens)), arity_(arity) {}

    MapDefinition definition() {
        const Token& head = peek();
        if (head.kind != Tok::ident || head.text != "f") {
            fail("expected 'f' to start a definition", head);
        }
        next();
        expect(Tok::lparen, "'('");
        std::size_t count = 0;
        while (true) {
            const Token& t = peek();
            const std::size_t idx = variable_index(t);
            if (idx != count + 1) {
                fail("parameters must be x1, x2, ... in order; expected x" + std::to_string(count + 1), t);
            }
            next();
            ++count;
            if (peek().kind == Tok::comma) {
                next();
                continue;
            }
            break;
        }
        expect(Tok::rparen, "')' or ','");
        expect(Tok::equals, "'='");
        arity_ = count;
        MapDefinition def;
        def.arity = count;
        def.body = expression(0);
        expect(Tok::end, "end of input");
        def.field_order = checked_field_order(*def.body, head);
        return def;
    }

    ExprPtr lone_expression() {
        ExprPtr e = expression(0);
        expect(Tok::end, "end of input");
        checked_field_order(*e, toks_.front());
        return e;
    }

    std::vector<ExprPtr> list() {
        std::vector<ExprPtr> out;
        out.push_back(expression(0));
        while (peek().kind == Tok::comma) {
            next();
            out.push_back(expression(0));
        }
        expect(Tok::end, "',' or end of input");
        for (const auto& e : out) {
            checked_field_order(*e, toks_.front());
        }
        return out;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] static void fail(const std::string& message, const Token& at) {
        throw ParseError(message, at.pos.line, at.pos.column);
    }

    void expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) {
            fail("expected " + what + ", found " + describe(peek()), peek());
        }
        next();
    }

    static std::size_t small_int(const Token& t, const std::string& what) {
        if (t.kind != Tok::number) {
            fail("expected " + what + ", found " + describe(t), t);
        }
        if (t.text.size() > kMaxSmallIntDigits) {
            fail(what + " too large", t);
        }
        return static_cast<std::size_t>(std::stoul(t.text));
    }

    // 0 when t is not a variable token.
    static std::size_t variable_index(const Token& t) {
        if (t.kind != Tok::ident || t.text.size() < 2 || t.text[0] != 'x') {
            return 0;
        }
        for (std::size_t i = 1; i < t.text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) {
                return 0;
            }
        }
        if (t.text.size() - 1 > kMaxSmallIntDigits) {
            fail("variable index too large", t);
        }
        return static_cast<std::size_t>(std::stoul(t.text.substr(1)));
    }

    static std::size_t checked_field_order(const Expr& e, const Token& at) {
        // Individual orders are capped at parse time; their lcm must fit the same cap.
        const std::size_t order = field_order(e);
        if (order > kMaxCyclotomicOrder) {
            fail("combined root-of-unity order " + std::to_string(order) + " exceeds " +
                     std::to_string(kMaxCyclotomicOrder),
                 at);
        }
        return order;
    }

    ExprPtr make(SourcePos pos, auto node) { return std::make_shared<const Expr>(Expr{std::move(node), pos}); }

    void enter(std::size_t depth) const {
        if (depth > kMaxDepth) {
            fail("expression nested too deeply", peek());
        }
    }

    ExprPtr expression(std::size_t depth) {
        enter(depth);
        ExprPtr lhs = term(depth + 1);
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token op = next();
            ExprPtr rhs = term(depth + 1);
            lhs = make(op.pos, Binary{op.kind == Tok::plus ? BinaryOp::add : BinaryOp::subtract, lhs, rhs});
        }
        return lhs;
    }

    ExprPtr term(std::size_t depth) {
        enter(depth);
        ExprPtr lhs = factor(depth + 1);
        while (peek().kind == Tok::star) {
            const Token op = next();
            ExprPtr rhs = factor(depth + 1);
            lhs = make(op.pos, Binary{BinaryOp::multiply, lhs, rhs});
        }
        return lhs;
    }

    ExprPtr factor(std::size_t depth) {
        enter(depth);
        const Token t = peek();
        switch (t.kind) {
            case Tok::number: {
                next();
                Integer num(t.text);
                Integer den(1);
                if (peek().kind == Tok::slash) {
                    next();
                    const Token d = peek();
                    if (d.kind != Tok::number) {
                        fail("expected denominator, found " + describe(d), d);
                    }
                    next();
                    den = Integer(d.text);
                    if (den == 0) {
                        fail("zero denominator", d);
                    }
                }
                return make(t.pos, Literal{Rational(num, den)});
            }
            case Tok::minus: {
                next();
                return make(t.pos, Negate{factor(depth + 1)});
            }
            case Tok::lparen: {
                next();
                ExprPtr inner = expression(depth + 1);
                expect(Tok::rparen, "')'");
                return make(t.pos, Group{inner});
            }
            case Tok::ident: {
                if (t.text == "zeta") {
                    next();
                    expect(Tok::lparen, "'(' after zeta");
                    const Token ot = peek();
                    const std::size_t order = small_int(ot, "root-of-unity order");
                    if (order < 1 || order > kMaxCyclotomicOrder) {
                        fail("zeta order must lie in 1.." + std::to_string(kMaxCyclotomicOrder), ot);
                    }
                    next();
                    expect(Tok::rparen, "')'");
                    std::size_t power = 1;
                    if (peek().kind == Tok::caret) {
                        next();
                        power = small_int(peek(), "exponent");
                        next();
                    }
                    return make(t.pos, RootOfUnity{order, power});
                }
                const std::size_t idx = variable_index(t);
                if (idx == 0) {
                    fail("unknown identifier '" + t.text + "'", t);
                }
                if (idx > arity_) {
                    fail("undeclared variable '" + t.text + "'", t);
                }
                next();
                return make(t.pos, Variable{idx});
            }
            default:
                fail("expected a number, variable, zeta(n), '(' or '-', found " + describe(t), t);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t arity_;
};

}  // namespace

MapDefinition parse_map_def(std::string_view text) {
    return Parser(Lexer(text).run(), 0).definition();
}

ExprPtr parse_expression(std::string_view text, std::size_t arity) {
    return Parser(Lexer(text).run(), arity).lone_expression();
}

std::vector<ExprPtr> parse_scalar_list(std::string_view text) {
    return Parser(Lexer(text).run(), 0).list();
}

std::string render(const MapDefinition& def) {
    std::string out = "f(";
    for (std::size_t i = 1; i <= def.arity; ++i) {
        out += (i > 1 ? ", x" : "x") + std::to_string(i);
    }
    return out + ") = " + render(*def.body);
}

}  // namespace babbage::dsl
