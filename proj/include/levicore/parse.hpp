#pragma once

#include "errors.hpp"
#include "polynomial.hpp"

#include <cctype>
#include <map>
#include <string>

namespace levicore {

// Recursive-descent parser for the engine's expression grammar:
//
//   expr   := ('-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := rational | varname | '(' expr ')'
//
// Rationals are "p/q" or integers; variable names match
// [A-Za-z][A-Za-z0-9_]*. When form atoms are enabled, "d<varname>" names the
// frame covector of <varname> (a ring variable of that exact name wins over
// the covector reading).
//
// The value of an expression is scalar + sum_i coeff_i * d(var_i); plain
// polynomials are values with no covector part.
struct ParsedValue {
    Polynomial scalar;
    std::map<int, Polynomial> covector;  // covector index -> coefficient

    bool has_covector() const { return !covector.empty(); }
};

namespace detail {

class ExprParser {
  public:
    ExprParser(const std::string& text, const Ring& ring, bool allow_forms)
        : text_(text), ring_(ring), forms_(allow_forms) {}

    ParsedValue parse() {
        ParsedValue v = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return v;
    }

  private:
    ParsedValue expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        ParsedValue acc = term();
        if (neg) acc = negate(acc);
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                ParsedValue t = term();
                if (c == '-') t = negate(t);
                acc = add(acc, t);
            } else {
                return acc;
            }
        }
    }

    ParsedValue term() {
        ParsedValue acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                std::size_t at = pos_;
                acc = mul(acc, factor(), at);
            } else {
                return acc;
            }
        }
    }

    ParsedValue factor() {
        ParsedValue a = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            if (!std::isdigit(peek())) throw ParseError("expected exponent", pos_);
            long n = read_nat();
            if (a.has_covector()) {
                if (n != 1) throw ParseError("covector atoms admit no powers", at);
                return a;
            }
            a.scalar = a.scalar.pow(static_cast<int>(n));
        }
        return a;
    }

    ParsedValue atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            ParsedValue v = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (std::isdigit(c)) {
            Integer num = read_int();
            Integer den(1);
            if (peek() == '/') {
                ++pos_;
                std::size_t at = pos_;
                if (!std::isdigit(peek())) throw ParseError("expected denominator", pos_);
                den = read_int();
                if (den == 0) throw ParseError("zero denominator", at);
            }
            ParsedValue v;
            v.scalar = Polynomial::constant(ring_, Rational(num, den));
            return v;
        }
        if (std::isalpha(c)) {
            std::size_t at = pos_;
            std::string name = read_name();
            if (ring_.has_variable(name)) {
                ParsedValue v;
                v.scalar = Polynomial::variable(ring_, name);
                return v;
            }
            if (forms_ && name.size() > 1 && name[0] == 'd' && ring_.has_variable(name.substr(1))) {
                ParsedValue v;
                v.scalar = Polynomial::zero(ring_);
                v.covector[ring_.index_of(name.substr(1))] = Polynomial::constant(ring_, 1);
                return v;
            }
            throw ParseError("unknown variable '" + name + "'", at);
        }
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    ParsedValue negate(ParsedValue v) const {
        v.scalar = -v.scalar;
        for (auto& [i, p] : v.covector) p = -p;
        return v;
    }

    ParsedValue add(ParsedValue a, const ParsedValue& b) const {
        a.scalar += b.scalar;
        for (const auto& [i, p] : b.covector) {
            auto it = a.covector.find(i);
            if (it == a.covector.end()) {
                a.covector.emplace(i, p);
            } else {
                it->second += p;
                if (it->second.is_zero()) a.covector.erase(it);
            }
        }
        return a;
    }

    ParsedValue mul(const ParsedValue& a, const ParsedValue& b, std::size_t at) const {
        if (a.has_covector() && b.has_covector())
            throw ParseError("wedge products are not part of this grammar", at);
        const ParsedValue& form = a.has_covector() ? a : b;
        const ParsedValue& poly = a.has_covector() ? b : a;
        ParsedValue v;
        v.scalar = form.scalar * poly.scalar;
        for (const auto& [i, p] : form.covector) {
            Polynomial q = p * poly.scalar;
            if (!q.is_zero()) v.covector.emplace(i, std::move(q));
        }
        return v;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    Integer read_int() {
        std::string s;
        while (std::isdigit(peek())) s += text_[pos_++];
        return Integer(s);
    }
    long read_nat() {
        std::string s;
        while (std::isdigit(peek())) s += text_[pos_++];
        if (s.size() > 6) throw ParseError("exponent too large", pos_);
        return std::stol(s);
    }
    std::string read_name() {
        std::string s;
        s += text_[pos_++];
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') s += text_[pos_++];
        return s;
    }

    const std::string& text_;
    const Ring& ring_;
    bool forms_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
    detail::ExprParser p(text, ring, /*allow_forms=*/false);
    ParsedValue v = p.parse();
    return v.scalar;
}

// Parses "p1*dx + p2*dy" style expressions; the scalar part must vanish.
inline ParsedValue parse_one_form_value(const std::string& text, const Ring& ring) {
    detail::ExprParser p(text, ring, /*allow_forms=*/true);
    ParsedValue v = p.parse();
    if (!v.scalar.is_zero()) throw ParseError("expression mixes degree 0 and degree 1 parts", 0);
    return v;
}

}  // namespace levicore
