#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folia/errors.hpp"
#include "folia/forms.hpp"
#include "folia/polynomial.hpp"

namespace folia {

// Surface syntax for polynomials and forms.
//
//   poly  :=  [sign] term (('+'|'-') term)*
//   term  :=  primary ('*' primary)*
//   primary := rational | var ['^' posint] | '(' poly ')'
//   rational := int ['/' posint]
//   var   := 'X' | 'Y' | 'Z' | 'x' index | 'z' index
//
// Form terms append differentials, wedged by juxtaposition:
//   "Z*Y^2 dX + Z*X^2 dY - (X*Y^2+X^2*Y) dZ",  "dx0 dx1"
//
// Whitespace insensitive. The printer emits grevlex term order with minus
// signs folded into coefficients, and round-trips bit-exactly.

enum class VarStyle { Auto, XYZ, Xi, Zi };

inline std::string var_name(int i, int nvars, VarStyle style) {
    switch (style) {
        case VarStyle::XYZ:
            return std::string(1, "XYZ"[i]);
        case VarStyle::Xi:
            return "x" + std::to_string(i);
        case VarStyle::Zi:
            return "z" + std::to_string(i);
        case VarStyle::Auto:
        default:
            if (nvars == 3) return std::string(1, "XYZ"[i]);
            return "z" + std::to_string(i);
    }
}

namespace detail {

struct Token {
    enum Kind { Num, Plus, Minus, Star, Caret, Slash, LParen, RParen, Var, Diff, End } kind;
    long value = 0;   // Num
    int var = -1;     // Var, Diff
    size_t line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= src_.size()) {
            t.kind = Token::End;
            return t;
        }
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Num;
            t.value = read_number();
            return t;
        }
        switch (c) {
            case '+': advance(); t.kind = Token::Plus; return t;
            case '-': advance(); t.kind = Token::Minus; return t;
            case '*': advance(); t.kind = Token::Star; return t;
            case '^': advance(); t.kind = Token::Caret; return t;
            case '/': advance(); t.kind = Token::Slash; return t;
            case '(': advance(); t.kind = Token::LParen; return t;
            case ')': advance(); t.kind = Token::RParen; return t;
            default: break;
        }
        if (c == 'd') {
            advance();
            t.kind = Token::Diff;
            t.var = read_var();
            return t;
        }
        if (c == 'X' || c == 'Y' || c == 'Z' || c == 'x' || c == 'z') {
            t.kind = Token::Var;
            t.var = read_var();
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }

  private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
    }
    long read_number() {
        long v = 0;
        size_t digits = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            if (++digits > 18) throw ParseError("integer literal too large", line_, col_);
            advance();
        }
        return v;
    }
    int read_var() {
        if (pos_ >= src_.size())
            throw ParseError("expected variable", line_, col_);
        const char c = src_[pos_];
        if (c == 'X' || c == 'Y' || c == 'Z') {
            advance();
            return c - 'X';
        }
        if (c == 'x' || c == 'z') {
            advance();
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw ParseError("indexed variable needs a numeric index", line_, col_);
            const long idx = read_number();
            if (idx > 255) throw ParseError("variable index too large", line_, col_);
            return static_cast<int>(idx);
        }
        throw ParseError(std::string("invalid variable start '") + c + "'", line_, col_);
    }

    std::string_view src_;
    size_t pos_ = 0;
    size_t line_ = 1, col_ = 1;
};

struct RawTerm {
    // Wedge indices in written order plus a handle to the factor list held by
    // the parser; the polynomial part is materialized once the ring is known.
    std::vector<int> diffs;
    int pending_index = -1;
};

class FormParser {
  public:
    explicit FormParser(std::string_view src) : lex_(src) { bump(); }

    // Returns raw terms plus the maximal variable index seen (or -1).
    std::vector<RawTerm> parse_terms(int& max_var) {
        std::vector<RawTerm> out;
        bool negative = false;
        if (tok_.kind == Token::Minus) {
            negative = true;
            bump();
        } else if (tok_.kind == Token::Plus) {
            bump();
        }
        while (true) {
            out.push_back(parse_term(negative));
            if (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
                negative = tok_.kind == Token::Minus;
                bump();
                continue;
            }
            break;
        }
        if (tok_.kind != Token::End)
            throw ParseError("trailing input after expression", tok_.line, tok_.col);
        max_var = max_var_;
        return out;
    }

  private:
    void bump() { tok_ = lex_.next(); }

    void see_var(int v) { max_var_ = std::max(max_var_, v); }

    // Symbolic product tree; evaluated against a concrete ring later.
    struct Factor {
        enum Kind { Rat, Power, Sub } kind;
        Rational value;                  // Rat
        int var = -1, exp = 1;           // Power
        std::vector<RawTerm> sub;        // Sub (parenthesized polynomial)
    };

    RawTerm parse_term(bool negative) {
        std::vector<Factor> factors;
        bool expect_primary = true;
        while (true) {
            if (tok_.kind == Token::Num) {
                factors.push_back(parse_rational());
            } else if (tok_.kind == Token::Var) {
                factors.push_back(parse_power());
            } else if (tok_.kind == Token::LParen) {
                bump();
                Factor f;
                f.kind = Factor::Sub;
                f.sub = parse_sum_until_rparen();
                factors.push_back(std::move(f));
            } else if (expect_primary && factors.empty() && tok_.kind == Token::Diff) {
                break;  // coefficientless differential, e.g. "dX"
            } else {
                throw ParseError("expected a term", tok_.line, tok_.col);
            }
            expect_primary = false;
            if (tok_.kind == Token::Star) {
                bump();
                expect_primary = true;
                continue;
            }
            break;
        }
        std::vector<int> diffs;
        while (tok_.kind == Token::Diff) {
            see_var(tok_.var);
            diffs.push_back(tok_.var);
            bump();
        }
        if (factors.empty() && diffs.empty())
            throw ParseError("empty term", tok_.line, tok_.col);
        RawTerm t;
        t.diffs = std::move(diffs);
        pending_.push_back({negative, std::move(factors)});
        t.pending_index = static_cast<int>(pending_.size()) - 1;
        return t;
    }

    Factor parse_rational() {
        Factor f;
        f.kind = Factor::Rat;
        long num = tok_.value;
        bump();
        long den = 1;
        if (tok_.kind == Token::Slash) {
            bump();
            if (tok_.kind != Token::Num || tok_.value == 0)
                throw ParseError("expected positive denominator", tok_.line, tok_.col);
            den = tok_.value;
            bump();
        }
        f.value = rat(num, den);
        return f;
    }

    Factor parse_power() {
        Factor f;
        f.kind = Factor::Power;
        f.var = tok_.var;
        see_var(f.var);
        bump();
        f.exp = 1;
        if (tok_.kind == Token::Caret) {
            bump();
            if (tok_.kind != Token::Num || tok_.value <= 0)
                throw ParseError("expected positive exponent", tok_.line, tok_.col);
            f.exp = static_cast<int>(tok_.value);
            bump();
        }
        return f;
    }

    std::vector<RawTerm> parse_sum_until_rparen() {
        std::vector<RawTerm> out;
        bool negative = false;
        if (tok_.kind == Token::Minus) {
            negative = true;
            bump();
        } else if (tok_.kind == Token::Plus) {
            bump();
        }
        while (true) {
            out.push_back(parse_term(negative));
            if (!out.back().diffs.empty())
                throw ParseError("differential inside parentheses", tok_.line, tok_.col);
            if (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
                negative = tok_.kind == Token::Minus;
                bump();
                continue;
            }
            break;
        }
        if (tok_.kind != Token::RParen)
            throw ParseError("expected ')'", tok_.line, tok_.col);
        bump();
        return out;
    }

  public:
    // Materialize a parsed term list against a ring of nvars variables.
    MultiPoly build_poly(const std::vector<RawTerm>& terms, int nvars) {
        MultiPoly acc = MultiPoly::zero(nvars);
        for (const auto& t : terms) acc = acc + build_term_poly(t, nvars);
        return acc;
    }

    MultiPoly build_term_poly(const RawTerm& t, int nvars) {
        const auto& [negative, factors] = pending_[static_cast<size_t>(t.pending_index)];
        MultiPoly p = MultiPoly::constant(nvars, Rational(negative ? -1 : 1));
        for (const auto& f : factors) {
            switch (f.kind) {
                case Factor::Rat:
                    p = p * f.value;
                    break;
                case Factor::Power: {
                    if (f.var >= nvars) throw Error("variable index out of declared range");
                    p = p * MultiPoly::variable(nvars, f.var).pow(f.exp);
                    break;
                }
                case Factor::Sub:
                    p = p * build_poly(f.sub, nvars);
                    break;
            }
        }
        return p;
    }

  private:
    Lexer lex_;
    Token tok_;
    int max_var_ = -1;
    std::vector<std::pair<bool, std::vector<Factor>>> pending_;
};

}  // namespace detail

// Parse a polynomial. nvars < 0 infers the variable count: XYZ variables
// force at least three slots, indexed variables force max index + 1.
inline MultiPoly parse_poly(std::string_view src, int nvars = -1) {
    detail::FormParser parser(src);
    int max_var = -1;
    auto terms = parser.parse_terms(max_var);
    for (const auto& t : terms)
        if (!t.diffs.empty()) throw ParseError("differential in polynomial context", 1, 1);
    int n = nvars >= 0 ? nvars : max_var + 1;
    if (nvars < 0 && n < 1) n = 1;
    if (max_var >= n) throw Error("variable index exceeds declared variable count");
    return parser.build_poly(terms, n);
}

// Parse a k-form (k >= 0 inferred from the wedge length; all terms must agree).
inline KForm parse_form(std::string_view src, int nvars = -1) {
    detail::FormParser parser(src);
    int max_var = -1;
    auto terms = parser.parse_terms(max_var);
    int n = nvars >= 0 ? nvars : max_var + 1;
    if (nvars < 0 && n < 1) n = 1;
    if (max_var >= n) throw Error("variable index exceeds declared variable count");
    int k = -1;
    for (const auto& t : terms) {
        const int tk = static_cast<int>(t.diffs.size());
        if (k == -1)
            k = tk;
        else if (k != tk)
            throw ParseError("mixed form degrees in expression", 1, 1);
    }
    if (k <= 0) {
        // Pure polynomial: a 0-form, unless it is literally zero.
        return KForm::from_poly(parser.build_poly(terms, n));
    }
    KForm f(n, k);
    for (const auto& t : terms) f.add_term(t.diffs, parser.build_term_poly(t, n));
    return f;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace detail {

inline std::string print_monomial(const Monomial& m, int nvars, VarStyle style) {
    std::string out;
    for (int i = 0; i < nvars; ++i) {
        const int e = m.exp(i);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += var_name(i, nvars, style);
        if (e >= 2) out += "^" + std::to_string(e);
    }
    return out;
}

// Magnitude of one term, sign handled by the caller.
inline std::string print_term_magnitude(const MultiPoly::Term& t, int nvars, VarStyle style) {
    const Rational c = abs(t.coeff);
    std::string mono = print_monomial(t.mono, nvars, style);
    if (mono.empty()) return to_string(c);
    if (c == 1) return mono;
    return to_string(c) + "*" + mono;
}

}  // namespace detail

inline std::string print_poly(const MultiPoly& p, VarStyle style = VarStyle::Auto) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool neg = sgn(t.coeff) < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += detail::print_term_magnitude(t, p.nvars(), style);
    }
    return out;
}

inline std::string print_form(const KForm& f, VarStyle style = VarStyle::Auto) {
    if (f.k() == 0) return f.is_zero() ? "0" : print_poly(f.coeff({}), style);
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : f.coeffs()) {
        std::string diffs;
        for (int i : idx) {
            if (!diffs.empty()) diffs += " ";
            diffs += "d" + var_name(i, f.nvars(), style);
        }
        if (c.term_count() == 1) {
            const auto& t = c.terms()[0];
            const bool neg = sgn(t.coeff) < 0;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            const Rational mag = abs(t.coeff);
            if (t.mono.is_constant() && mag == 1)
                out += diffs;
            else
                out += detail::print_term_magnitude(t, f.nvars(), style) + " " + diffs;
        } else {
            if (first)
                first = false;
            else
                out += " + ";
            out += "(" + print_poly(c, style) + ") " + diffs;
        }
    }
    return out;
}

}  // namespace folia
