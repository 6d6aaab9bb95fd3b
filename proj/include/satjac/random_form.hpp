#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "satjac/polynomial.hpp"
#include "satjac/rng.hpp"

namespace satjac {

/// Coefficients a "general" form may draw from. The default pool is the
/// nonzero integers in [-9, 9], listed in ascending order.
struct CoefficientPool {
    std::vector<Rational> values;

    static CoefficientPool default_pool() {
        CoefficientPool p;
        for (int v = -9; v <= 9; ++v)
            if (v != 0) p.values.emplace_back(v);
        return p;
    }
};

/// All monomials of the given total degree, in descending grevlex order.
inline std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<Exponent> current(static_cast<std::size_t>(ring->num_vars()), 0);
    auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
        if (var + 1 == current.size()) {
            current[var] = static_cast<Exponent>(remaining);
            out.emplace_back(current);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current[var] = static_cast<Exponent>(e);
            self(self, var + 1, remaining - e);
        }
        current[var] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), grevlex_greater);
    return out;
}

/// Dense homogeneous form of the given degree: every monomial receives a pool
/// coefficient, drawn in descending grevlex order from SplitMix64(seed).
inline Polynomial random_general_form(const RingPtr& ring, int degree, std::uint64_t seed,
                                      const CoefficientPool& pool = CoefficientPool::default_pool()) {
    if (degree < 0) throw InvalidArgumentError("degree must be nonnegative");
    if (pool.values.empty()) throw InvalidArgumentError("empty coefficient pool");
    SplitMix64 rng(seed);
    std::vector<Term> terms;
    for (const Monomial& m : monomials_of_degree(ring, degree)) {
        const Rational& c = pool.values[rng.next() % pool.values.size()];
        terms.push_back({m, c});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace satjac
