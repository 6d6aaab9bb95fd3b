#pragma once

#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "satjac/monomial.hpp"
#include "satjac/rational.hpp"
#include "satjac/ring.hpp"

namespace satjac {

struct Term {
    Monomial mono;
    Rational coeff;
};

struct Homogeneity {
    bool is_homogeneous = false;
    std::optional<int> degree;  // empty exactly for the zero polynomial
};

/// Sparse polynomial over Q. Terms are kept in strictly descending grevlex
/// order with no zero coefficients; the zero polynomial has no terms.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, const Rational& c) {
        Polynomial p(std::move(ring));
        if (c != 0) p.terms_.push_back({Monomial(p.ring_->num_vars()), c});
        return p;
    }

    static Polynomial variable(RingPtr ring, int i, Exponent k = 1) {
        if (i < 0 || i >= ring->num_vars()) throw InvalidArgumentError("variable index out of range");
        Polynomial p(ring);
        p.terms_.push_back({Monomial::variable(ring->num_vars(), static_cast<std::size_t>(i), k),
                            Rational(1)});
        return p;
    }

    static Polynomial monomial_term(RingPtr ring, Monomial m, const Rational& c) {
        Polynomial p(std::move(ring));
        if (c != 0) p.terms_.push_back({std::move(m), c});
        return p;
    }

    /// Builds from arbitrary terms: merges duplicates, drops zeros, sorts.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
        std::map<Monomial, Rational, decltype(&grevlex_greater)> acc(&grevlex_greater);
        for (auto& t : terms) {
            auto [it, fresh] = acc.try_emplace(std::move(t.mono), t.coeff);
            if (!fresh) it->second += t.coeff;
        }
        Polynomial p(std::move(ring));
        for (auto& [m, c] : acc)
            if (c != 0) p.terms_.push_back({m, c});
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw InvalidArgumentError("zero polynomial has no leading term");
        return terms_.front();
    }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
        return d;
    }

    Homogeneity homogeneity() const {
        if (terms_.empty()) return {true, std::nullopt};
        Exponent d = terms_.front().mono.degree();
        for (const auto& t : terms_)
            if (t.mono.degree() != d) return {false, std::nullopt};
        return {true, static_cast<int>(d)};
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        Polynomial out(a.ring_);
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = grevlex_cmp(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                out.terms_.push_back(b.terms_[j++]);
            } else {
                Rational s = a.terms_[i].coeff + b.terms_[j].coeff;
                if (s != 0) out.terms_.push_back({a.terms_[i].mono, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
        return out;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial operator-() const {
        Polynomial out(ring_);
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
        return out;
    }

    Polynomial scaled(const Rational& c) const {
        Polynomial out(ring_);
        if (c == 0) return out;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
        return out;
    }

    /// this * (c * m): monomial multiples preserve term order.
    Polynomial times_term(const Monomial& m, const Rational& c) const {
        Polynomial out(ring_);
        if (c == 0) return out;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        std::map<Monomial, Rational, decltype(&grevlex_greater)> acc(&grevlex_greater);
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                Monomial m = ta.mono * tb.mono;
                auto [it, fresh] = acc.try_emplace(std::move(m), ta.coeff * tb.coeff);
                if (!fresh) it->second += ta.coeff * tb.coeff;
            }
        }
        Polynomial out(a.ring_);
        for (auto& [m, c] : acc)
            if (c != 0) out.terms_.push_back({m, c});
        return out;
    }

    Polynomial pow(unsigned e) const {
        Polynomial result = Polynomial::constant(ring_, Rational(1));
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1u) result = result * base;
            e >>= 1u;
            if (e > 0) base = base * base;
        }
        return result;
    }

    Polynomial derivative(int var) const {
        if (var < 0 || var >= ring_->num_vars()) throw InvalidArgumentError("variable index out of range");
        Polynomial out(ring_);
        auto v = static_cast<std::size_t>(var);
        for (const auto& t : terms_) {
            Exponent e = t.mono.exponent(v);
            if (e == 0) continue;
            std::vector<Exponent> exps = t.mono.exponents();
            exps[v] -= 1;
            out.terms_.push_back({Monomial(std::move(exps)), t.coeff * static_cast<long>(e)});
        }
        // term order is preserved under x_v -> x_v - 1 within fixed other exponents,
        // but terms with e == 0 were dropped; resort via from_terms to stay canonical
        return from_terms(ring_, std::move(out.terms_));
    }

    /// Evaluates this (a polynomial in k variables) at the given k polynomials,
    /// which must all live in one common ring.
    Polynomial substitute(std::span<const Polynomial> args) const {
        if (args.size() != static_cast<std::size_t>(ring_->num_vars()))
            throw InvalidArgumentError("substitute: argument count must match variable count");
        RingPtr target = args.empty() ? ring_ : args[0].ring();
        for (const auto& a : args) require_same_ring(target, a.ring());

        // cache powers of each argument up to the largest exponent used
        std::vector<std::vector<Polynomial>> powers(args.size());
        for (std::size_t v = 0; v < args.size(); ++v) {
            Exponent maxe = 0;
            for (const auto& t : terms_) maxe = std::max(maxe, t.mono.exponent(v));
            powers[v].reserve(maxe + 1);
            powers[v].push_back(Polynomial::constant(target, Rational(1)));
            for (Exponent e = 1; e <= maxe; ++e) powers[v].push_back(powers[v].back() * args[v]);
        }
        Polynomial out(target);
        for (const auto& t : terms_) {
            Polynomial prod = Polynomial::constant(target, t.coeff);
            for (std::size_t v = 0; v < args.size(); ++v) {
                Exponent e = t.mono.exponent(v);
                if (e > 0) prod = prod * powers[v][e];
            }
            out = out + prod;
        }
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!(*a.ring_ == *b.ring_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Canonical text form; parsing it back yields the same polynomial.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coeff;
            bool negative = c < 0;
            if (first) {
                if (negative) os << "-";
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            if (negative) c = -c;
            bool printed_coeff = false;
            if (t.mono.is_unit() || c != 1) {
                os << satjac::to_string(c);
                printed_coeff = true;
            }
            bool first_var = true;
            for (std::size_t i = 0; i < t.mono.num_vars(); ++i) {
                Exponent e = t.mono.exponent(i);
                if (e == 0) continue;
                if (printed_coeff || !first_var) os << "*";
                os << "x" << i;
                if (e > 1) os << "^" << e;
                first_var = false;
                printed_coeff = true;
            }
        }
        return os.str();
    }

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

inline Polynomial partial_derivative(const Polynomial& f, int var) { return f.derivative(var); }

}  // namespace satjac
