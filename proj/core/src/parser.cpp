#include "stori/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

namespace stori {

namespace {

enum class Tok {
    True,
    Ident,
    Number,
    Bang,
    Amp,
    Arrow,
    UntilKw,
    FinallyKw,
    GloballyKw,
    Ge,
    Le,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    double value = 0.0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            Token t = next();
            out.push_back(t);
            if (t.kind == Tok::End) break;
        }
        return out;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

    Token make(Tok k, size_t len) {
        Token t{k, std::string(src_.substr(pos_, len)), 0.0, line_, col_};
        pos_ += len;
        col_ += static_cast<int>(len);
        return t;
    }

    Token next() {
        if (pos_ >= src_.size()) return Token{Tok::End, "", 0.0, line_, col_};
        char c = src_[pos_];
        switch (c) {
            case '!': return make(Tok::Bang, 1);
            case '&': return make(Tok::Amp, 1);
            case '(': return make(Tok::LParen, 1);
            case ')': return make(Tok::RParen, 1);
            case '[': return make(Tok::LBracket, 1);
            case ']': return make(Tok::RBracket, 1);
            case ',': return make(Tok::Comma, 1);
            case '-':
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') return make(Tok::Arrow, 2);
                return lex_number();
            case '>':
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') return make(Tok::Ge, 2);
                fail("expected '>=' ('>' alone is not a comparison)");
            case '<':
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') return make(Tok::Le, 2);
                fail("expected '<=' ('<' alone is not a comparison)");
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return lex_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return lex_ident();
        fail(std::string("unexpected character '") + c + "'");
    }

    Token lex_number() {
        size_t start = pos_;
        size_t p = pos_;
        if (p < src_.size() && src_[p] == '-') ++p;
        while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p;
        if (p < src_.size() && src_[p] == '.') {
            ++p;
            while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p;
        }
        if (p < src_.size() && (src_[p] == 'e' || src_[p] == 'E')) {
            size_t q = p + 1;
            if (q < src_.size() && (src_[q] == '+' || src_[q] == '-')) ++q;
            if (q < src_.size() && std::isdigit(static_cast<unsigned char>(src_[q]))) {
                p = q;
                while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p;
            }
        }
        double value = 0.0;
        auto [end, ec] = std::from_chars(src_.data() + start, src_.data() + p, value);
        if (ec != std::errc() || end != src_.data() + p) fail("malformed number");
        Token t = make(Tok::Number, p - start);
        t.value = value;
        return t;
    }

    Token lex_ident() {
        size_t p = pos_;
        while (p < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[p])) || src_[p] == '_'))
            ++p;
        std::string_view word = src_.substr(pos_, p - pos_);
        Tok kind = Tok::Ident;
        if (word == "T") kind = Tok::True;
        else if (word == "U") kind = Tok::UntilKw;
        else if (word == "F") kind = Tok::FinallyKw;
        else if (word == "G") kind = Tok::GloballyKw;
        return make(kind, p - pos_);
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> toks, VariableMap vars) : toks_(std::move(toks)), vars_(std::move(vars)) {}

    Formula run() {
        Formula f = parse_until();
        expect(Tok::End, "end of input");
        return f;
    }

    const VariableMap& variables() const { return vars_; }

private:
    const Token& peek() const { return toks_[idx_]; }
    Token advance() { return toks_[idx_++]; }

    [[noreturn]] void fail_at(const Token& t, const std::string& msg) {
        throw ParseError(msg, t.line, t.col);
    }

    Token expect(Tok k, const std::string& what) {
        if (peek().kind != k)
            fail_at(peek(), "expected " + what + (peek().kind == Tok::End
                                                      ? " but input ended"
                                                      : " before '" + peek().text + "'"));
        return advance();
    }

    // until := implies ('U' interval until)?
    Formula parse_until() {
        Formula lhs = parse_implies();
        if (peek().kind == Tok::UntilKw) {
            advance();
            TimeInterval window = parse_interval();
            Formula rhs = parse_until();
            return Formula::until(window, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    // implies := and ('->' implies)?   with a -> b == !(a & !b)
    Formula parse_implies() {
        Formula lhs = parse_and();
        if (peek().kind == Tok::Arrow) {
            advance();
            Formula rhs = parse_implies();
            return Formula::negation(
                Formula::conjunction(std::move(lhs), Formula::negation(std::move(rhs))));
        }
        return lhs;
    }

    Formula parse_and() {
        Formula lhs = parse_unary();
        while (peek().kind == Tok::Amp) {
            advance();
            Formula rhs = parse_unary();
            lhs = Formula::conjunction(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Formula parse_unary() {
        switch (peek().kind) {
            case Tok::Bang:
                advance();
                return Formula::negation(parse_unary());
            case Tok::FinallyKw: {
                advance();
                TimeInterval window = parse_interval();
                return Formula::eventually(window, parse_unary());
            }
            case Tok::GloballyKw: {
                advance();
                TimeInterval window = parse_interval();
                return Formula::globally(window, parse_unary());
            }
            default:
                return parse_primary();
        }
    }

    Formula parse_primary() {
        switch (peek().kind) {
            case Tok::True:
                advance();
                return Formula::truth();
            case Tok::LParen: {
                advance();
                Formula f = parse_until();
                expect(Tok::RParen, "')'");
                return f;
            }
            case Tok::Ident:
                return parse_atom();
            default:
                fail_at(peek(), peek().kind == Tok::End ? "unexpected end of formula"
                                                        : "unexpected token '" + peek().text + "'");
        }
    }

    Formula parse_atom() {
        Token name = advance();
        auto index = vars_.index_of(name.text);
        if (!index) fail_at(name, "unbound variable name '" + name.text + "'");
        bool ge;
        if (peek().kind == Tok::Ge) ge = true;
        else if (peek().kind == Tok::Le) ge = false;
        else fail_at(peek(), "expected '>=' or '<=' after variable '" + name.text + "'");
        advance();
        Token num = expect(Tok::Number, "a number");
        Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(vars_.state_dim());
        // var >= c  is  h(x) = x_i - c >= 0;  var <= c  is  h(x) = c - x_i >= 0.
        coeffs[*index] = ge ? 1.0 : -1.0;
        double offset = ge ? -num.value : num.value;
        return Formula::predicate(LinearPredicate(std::move(coeffs), offset));
    }

    TimeInterval parse_interval() {
        bool lower_open;
        const Token& open = peek();
        if (open.kind == Tok::LBracket) lower_open = false;
        else if (open.kind == Tok::LParen) lower_open = true;
        else fail_at(open, "expected '[' or '(' to start a time interval");
        advance();
        Token lo = expect(Tok::Number, "interval lower bound");
        expect(Tok::Comma, "','");
        Token hi = expect(Tok::Number, "interval upper bound");
        bool upper_open;
        if (peek().kind == Tok::RBracket) upper_open = false;
        else if (peek().kind == Tok::RParen) upper_open = true;
        else fail_at(peek(), "expected ']' or ')' to close the time interval");
        advance();
        if (lo.value < 0.0) fail_at(lo, "malformed interval: lower bound must be >= 0");
        if (!(lo.value < hi.value))
            fail_at(hi, "malformed interval: requires lower < upper, got " + lo.text + " >= " + hi.text);
        return TimeInterval(lo.value, hi.value, lower_open, upper_open);
    }

    std::vector<Token> toks_;
    VariableMap vars_;
    size_t idx_ = 0;
};

}  // namespace

ParseResult parse_formula(std::string_view text, const std::optional<VariableMap>& variables) {
    std::vector<Token> toks = Lexer(text).run();
    VariableMap vars;
    if (variables) {
        vars = *variables;
    } else {
        // Auto-bind identifiers to indices in order of first appearance.
        std::vector<std::string> names;
        for (const Token& t : toks)
            if (t.kind == Tok::Ident &&
                std::find(names.begin(), names.end(), t.text) == names.end())
                names.push_back(t.text);
        vars = VariableMap::sequential(names);
    }
    Parser p(std::move(toks), std::move(vars));
    Formula f = p.run();
    return ParseResult{std::move(f), p.variables()};
}

}  // namespace stori
