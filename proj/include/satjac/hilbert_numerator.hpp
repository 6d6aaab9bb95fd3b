#pragma once

#include <algorithm>
#include <vector>

#include "satjac/monomial.hpp"
#include "satjac/rational.hpp"

namespace satjac::detail {

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), grevlex_less);
    std::vector<Monomial> minimal;
    for (auto& g : gens) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(g));
    }
    return minimal;
}

inline void series_sub_shifted(std::vector<Integer>& acc, const std::vector<Integer>& q,
                               std::size_t shift) {
    if (acc.size() < q.size() + shift) acc.resize(q.size() + shift, Integer(0));
    for (std::size_t i = 0; i < q.size(); ++i) acc[i + shift] -= q[i];
}

inline void series_add_shifted(std::vector<Integer>& acc, const std::vector<Integer>& q,
                               std::size_t shift) {
    if (acc.size() < q.size() + shift) acc.resize(q.size() + shift, Integer(0));
    for (std::size_t i = 0; i < q.size(); ++i) acc[i + shift] += q[i];
}

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^{num_vars} of R/M for a
/// monomial ideal M, by the variable-splitting recursion
///   N(M) = N(M + (x_v)) + t * N(M : x_v),
/// with closed forms for the empty set and for pure powers of distinct
/// variables (where N = prod (1 - t^{a_i})).
inline std::vector<Integer> hilbert_numerator_of(std::vector<Monomial> gens) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return {Integer(1)};
    if (gens.front().is_unit()) return {Integer(0)};

    std::size_t nv = gens.front().num_vars();
    bool pure_powers = true;
    for (const auto& g : gens) {
        std::size_t support = 0;
        for (std::size_t i = 0; i < nv; ++i)
            if (g.exponent(i) > 0) ++support;
        if (support != 1) {
            pure_powers = false;
            break;
        }
    }
    if (pure_powers) {
        // minimal generators that are pure powers sit on distinct variables
        std::vector<Integer> num{Integer(1)};
        for (const auto& g : gens) {
            std::vector<Integer> factor(static_cast<std::size_t>(g.degree()) + 1, Integer(0));
            factor[0] = 1;
            factor[static_cast<std::size_t>(g.degree())] = -1;
            std::vector<Integer> prod(num.size() + factor.size() - 1, Integer(0));
            for (std::size_t i = 0; i < num.size(); ++i)
                for (std::size_t j = 0; j < factor.size(); ++j) prod[i + j] += num[i] * factor[j];
            num = std::move(prod);
        }
        return num;
    }

    // pivot: the variable appearing in the most generators, preferring mixed ones
    std::vector<int> freq(nv, 0);
    for (const auto& g : gens)
        for (std::size_t i = 0; i < nv; ++i)
            if (g.exponent(i) > 0) ++freq[i];
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < nv; ++i)
        if (freq[i] > freq[pivot]) pivot = i;

    std::vector<Monomial> plus;   // M + (x_pivot)
    std::vector<Monomial> colon;  // M : x_pivot
    plus.push_back(Monomial::variable(nv, pivot));
    for (const auto& g : gens) {
        if (g.exponent(pivot) == 0) {
            plus.push_back(g);
            colon.push_back(g);
        } else {
            std::vector<Exponent> e = g.exponents();
            e[pivot] -= 1;
            colon.emplace_back(std::move(e));
        }
    }
    std::vector<Integer> out = hilbert_numerator_of(std::move(plus));
    std::vector<Integer> shifted = hilbert_numerator_of(std::move(colon));
    series_add_shifted(out, shifted, 1);
    return out;
}

}  // namespace satjac::detail
