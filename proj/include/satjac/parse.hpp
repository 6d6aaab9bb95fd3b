#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "satjac/polynomial.hpp"

namespace satjac {

/// Recursive-descent parser for the polynomial grammar:
///   expr   := ['+'|'-'] term { ('+'|'-') term }
///   term   := factor { '*' factor }
///   factor := atom [ '^' nat ]
///   atom   := '(' expr ')' | var | nat [ '/' nat ]
/// Variables are x0..x<n>. '/' occurs only inside a rational literal;
/// juxtaposition is rejected (an explicit '*' is required).
class PolynomialParser {
public:
    static constexpr Exponent kMaxExponent = 100000;

    PolynomialParser(std::string_view text, RingPtr ring)
        : text_(text), ring_(std::move(ring)) {}

    Polynomial parse() {
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Polynomial parse_expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = (peek() == '-');
            ++pos_;
        }
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Polynomial rhs = parse_term();
            acc = (c == '+') ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            unsigned long long e = parse_natural("exponent");
            if (e > kMaxExponent) throw ParseError("exponent overflow", at);
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial parse_atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == 'x') {
            std::size_t at = pos_;
            ++pos_;
            unsigned long long idx = parse_natural("variable index");
            if (idx >= static_cast<unsigned long long>(ring_->num_vars()))
                throw ParseError("unknown variable x" + std::to_string(idx), at);
            return Polynomial::variable(ring_, static_cast<int>(idx));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_integer();
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t at = pos_;
                Integer den = parse_integer();
                if (den == 0) throw ParseError("zero denominator", at);
                Rational r(num, den);
                r.canonicalize();
                return Polynomial::constant(ring_, r);
            }
            return Polynomial::constant(ring_, Rational(num));
        }
        fail("expected '(', variable, or number");
    }

    Integer parse_integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    unsigned long long parse_natural(const char* what) {
        std::size_t at = pos_;
        Integer z = parse_integer();
        if (!z.fits_ulong_p()) throw ParseError(std::string(what) + " overflow", at);
        return z.get_ui();
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    std::string_view text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

inline Polynomial parse_poly(std::string_view text, RingPtr ring) {
    return PolynomialParser(text, std::move(ring)).parse();
}

}  // namespace satjac
