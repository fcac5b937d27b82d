#include "liefield/parse.hpp"

#include "liefield/error.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace liefield {

namespace {

enum class Tok { Number, Imag, Var, Dir, Exp, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text; // digits for Number, index digits for Var/Dir
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token next() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
        cur_.line = line_;
        cur_.col = col_;
        cur_.text.clear();
        if (pos_ >= src_.size()) {
            cur_.kind = Tok::End;
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                cur_.text += src_[pos_];
                bump();
            }
            if (pos_ < src_.size() && src_[pos_] == '.')
                throw ParseError("non-rational numeric literal", line_, col_);
            cur_.kind = Tok::Number;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
                word += src_[pos_];
                bump();
            }
            if (word == "i") {
                cur_.kind = Tok::Imag;
                return;
            }
            if (word == "exp") {
                cur_.kind = Tok::Exp;
                return;
            }
            if ((word[0] == 'x' || word[0] == 'd') && word.size() > 1) {
                bool digits = true;
                for (size_t k = 1; k < word.size(); ++k)
                    if (!std::isdigit(static_cast<unsigned char>(word[k]))) digits = false;
                if (digits) {
                    cur_.kind = (word[0] == 'x') ? Tok::Var : Tok::Dir;
                    cur_.text = word.substr(1);
                    return;
                }
            }
            throw ParseError("unknown symbol '" + word + "'", cur_.line, cur_.col);
        }
        switch (c) {
            case '+': cur_.kind = Tok::Plus; break;
            case '-': cur_.kind = Tok::Minus; break;
            case '*': cur_.kind = Tok::Star; break;
            case '^': cur_.kind = Tok::Caret; break;
            case '/': cur_.kind = Tok::Slash; break;
            case '(': cur_.kind = Tok::LParen; break;
            case ')': cur_.kind = Tok::RParen; break;
            case '.': throw ParseError("non-rational numeric literal", line_, col_);
            default: throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
        bump();
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token cur_;
};

/// Either a scalar function or a field; products may involve at most one
/// direction, sums must stay within one kind (a scalar summand is only
/// tolerated when it is exactly zero).
struct Value {
    GPoly scalar;
    std::optional<GField> field;

    explicit Value(GPoly s) : scalar(std::move(s)) {}
    explicit Value(GField f) : scalar(f.dim()), field(std::move(f)) {}
};

class Parser {
public:
    Parser(std::string_view text, int dim) : lex_(text), dim_(dim) {}

    Value parse_expression_to_end() {
        Value v = parse_sum();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End) throw ParseError("unexpected trailing input", t.line, t.col);
        return v;
    }

private:
    Value parse_sum() {
        Value acc = parse_term();
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            Token op = lex_.next();
            Value rhs = parse_term();
            bool minus = (op.kind == Tok::Minus);
            add_into(acc, rhs, minus, op);
        }
        return acc;
    }

    void add_into(Value& acc, Value& rhs, bool minus, const Token& at) {
        if (acc.field || rhs.field) {
            // Promote both sides to fields; a scalar side must be zero.
            if (!acc.field) {
                if (!acc.scalar.is_zero()) throw ParseError("term without a direction", at.line, at.col);
                acc.field = GField(dim_);
            }
            if (!rhs.field) {
                if (!rhs.scalar.is_zero()) throw ParseError("term without a direction", at.line, at.col);
                rhs.field = GField(dim_);
            }
            if (minus)
                *acc.field -= *rhs.field;
            else
                *acc.field += *rhs.field;
        } else {
            if (minus)
                acc.scalar -= rhs.scalar;
            else
                acc.scalar += rhs.scalar;
        }
    }

    Value parse_term() {
        Token at = lex_.peek();
        Value acc = parse_factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.next();
            Value rhs = parse_factor();
            multiply_into(acc, rhs, at);
        }
        return acc;
    }

    void multiply_into(Value& acc, Value& rhs, const Token& at) {
        if (acc.field && rhs.field)
            throw ParseError("product of two directions", at.line, at.col);
        if (acc.field) {
            acc.field = rhs.scalar * *acc.field;
        } else if (rhs.field) {
            GField f = acc.scalar * *rhs.field;
            acc = Value(std::move(f));
        } else {
            acc.scalar = acc.scalar * rhs.scalar;
        }
    }

    Value parse_factor() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::Minus:
            case Tok::Number:
                return Value(GPoly::constant(dim_, GaussianRational(parse_rational())));
            case Tok::Imag:
                lex_.next();
                return Value(GPoly::constant(dim_, GaussianRational::i()));
            case Tok::Var: {
                Token v = lex_.next();
                int idx = index_of(v, "variable");
                int power = 1;
                if (lex_.peek().kind == Tok::Caret) {
                    lex_.next();
                    Token e = lex_.peek();
                    if (e.kind != Tok::Number) throw ParseError("exponent must be a nonnegative integer", e.line, e.col);
                    lex_.next();
                    power = to_small_int(e);
                }
                GPoly p = GPoly::constant(dim_, GaussianRational::one());
                GPoly x = GPoly::variable(dim_, idx);
                for (int k = 0; k < power; ++k) p = p * x;
                return Value(std::move(p));
            }
            case Tok::Dir: {
                Token d = lex_.next();
                int idx = index_of(d, "direction");
                return Value(GField::direction(dim_, idx));
            }
            case Tok::Exp:
                return Value(parse_exponential());
            case Tok::LParen: {
                lex_.next();
                Value v = parse_sum();
                expect(Tok::RParen, "expected ')'");
                return v;
            }
            default:
                throw ParseError("expected a factor", t.line, t.col);
        }
    }

    GPoly parse_exponential() {
        lex_.next(); // exp
        expect(Tok::LParen, "expected '(' after exp");
        // Parse as a general scalar and insist on an exact rational linear form.
        Token at = lex_.peek();
        Value arg = parse_sum();
        expect(Tok::RParen, "expected ')'");
        if (arg.field) throw ParseError("direction inside exp", at.line, at.col);
        std::vector<Rat> freq(static_cast<size_t>(dim_), Rat(0));
        for (const auto& [m, c] : arg.scalar.terms()) {
            if (m.total_degree() > 1 || m.has_exp())
                throw ParseError("exponential argument must be a rational linear form", at.line, at.col);
            if (!c.is_real())
                throw ParseError("exponential argument must have rational coefficients", at.line, at.col);
            if (m.total_degree() == 0)
                throw ParseError("exponential argument must have no constant part", at.line, at.col);
            for (int k = 0; k < dim_; ++k)
                if (m.pow[static_cast<size_t>(k)] == 1) freq[static_cast<size_t>(k)] += c.re();
        }
        return GPoly::exponential(dim_, std::move(freq));
    }

    Rat parse_rational() {
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.next();
            neg = true;
            if (lex_.peek().kind != Tok::Number)
                throw ParseError("expected digits after '-'", lex_.peek().line, lex_.peek().col);
        }
        Token num = lex_.next();
        std::string text = num.text;
        if (lex_.peek().kind == Tok::Slash) {
            lex_.next();
            Token den = lex_.peek();
            if (den.kind != Tok::Number) throw ParseError("expected denominator digits", den.line, den.col);
            lex_.next();
            if (den.text.find_first_not_of('0') == std::string::npos)
                throw ParseError("zero denominator", den.line, den.col);
            text += "/" + den.text;
        }
        Rat r(text);
        r.canonicalize();
        if (neg) r = -r;
        return r;
    }

    int index_of(const Token& t, const char* what) {
        if (t.text.size() > 6) throw ParseError(std::string(what) + " index out of range", t.line, t.col);
        int idx = std::stoi(t.text);
        const char* prefix = (what[0] == 'v') ? "x" : "d";
        if (idx < 1 || idx > dim_)
            throw ParseError(std::string(what) + " index " + prefix + t.text + " exceeds dimension " +
                                 std::to_string(dim_),
                             t.line, t.col);
        return idx;
    }

    int to_small_int(const Token& t) {
        if (t.text.size() > 4) throw ParseError("exponent too large", t.line, t.col);
        return std::stoi(t.text);
    }

    void expect(Tok kind, const char* msg) {
        const Token& t = lex_.peek();
        if (t.kind != kind) throw ParseError(msg, t.line, t.col);
        lex_.next();
    }

    Lexer lex_;
    int dim_;
};

} // namespace

GField parse_field(std::string_view text, int dim) {
    Parser parser(text, dim);
    Value v = parser.parse_expression_to_end();
    if (v.field) return std::move(*v.field);
    if (v.scalar.is_zero()) return GField::zero(dim);
    throw ParseError("expression has no direction", 1, 1);
}

GPoly parse_poly(std::string_view text, int dim) {
    Parser parser(text, dim);
    Value v = parser.parse_expression_to_end();
    if (v.field) throw ParseError("unexpected direction in scalar expression", 1, 1);
    return std::move(v.scalar);
}

} // namespace liefield
