#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "satjac/errors.hpp"

namespace satjac {

using Exponent = std::uint32_t;

/// Exponent vector with cached total degree. Immutable after construction.
class Monomial {
public:
    explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0), degree_(0) {}

    explicit Monomial(std::vector<Exponent> exps)
        : exps_(std::move(exps)),
          degree_(std::accumulate(exps_.begin(), exps_.end(), Exponent(0))) {}

    static Monomial variable(std::size_t num_vars, std::size_t i, Exponent k = 1) {
        std::vector<Exponent> e(num_vars, 0);
        e.at(i) = k;
        return Monomial(std::move(e));
    }

    std::size_t num_vars() const { return exps_.size(); }
    Exponent exponent(std::size_t i) const { return exps_[i]; }
    Exponent degree() const { return degree_; }
    bool is_unit() const { return degree_ == 0; }
    const std::vector<Exponent>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const {
        std::vector<Exponent> e(exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
        return Monomial(std::move(e));
    }

    /// Does this divide m?
    bool divides(const Monomial& m) const {
        if (degree_ > m.degree_) return false;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }

    /// this / d; caller guarantees divisibility.
    Monomial divide(const Monomial& d) const {
        std::vector<Exponent> e(exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] -= d.exps_[i];
        return Monomial(std::move(e));
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        std::vector<Exponent> e(a.exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
        return Monomial(std::move(e));
    }

    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0 && o.exps_[i] > 0) return false;
        return true;
    }

    /// Exponents rearranged so that position i holds the old exponent perm[i].
    Monomial permuted(const std::vector<std::size_t>& perm) const {
        std::vector<Exponent> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[perm[i]];
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<Exponent> exps_;
    Exponent degree_;
};

/// grevlex: higher total degree wins; on ties the rightmost differing exponent
/// decides, smaller being greater. Returns <0, 0, >0 as a < b, a == b, a > b.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = a.num_vars(); i-- > 0;) {
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? -1 : 1;
    }
    return 0;
}

inline bool grevlex_less(const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) < 0; }
inline bool grevlex_greater(const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; }

/// Block order eliminating variable 0: compare its exponent first, then
/// grevlex on the remaining variables. A global order; elements of a Groebner
/// basis free of variable 0 generate the elimination ideal.
inline int elim_first_cmp(const Monomial& a, const Monomial& b) {
    if (a.exponent(0) != b.exponent(0)) return a.exponent(0) < b.exponent(0) ? -1 : 1;
    Exponent da = a.degree() - a.exponent(0);
    Exponent db = b.degree() - b.exponent(0);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.num_vars(); i-- > 1;) {
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? -1 : 1;
    }
    return 0;
}

}  // namespace satjac
