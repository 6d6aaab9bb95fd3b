#pragma once

#include <map>

#include "satjac/ideal.hpp"

namespace satjac {

/// dim_Q R_e for R = Q[x0..xn]: binomial(e+n, n), zero for e < 0.
inline long long graded_dim(const RingPtr& ring, long long e) {
    if (e < 0) return 0;
    return binomial_i64(e + ring->n(), ring->n());
}

/// h_{R/I}(e) from the cached Hilbert numerator:
/// h(e) = sum_j N[j] * dim R_{e-j}.
inline long long hilbert_function(const Ideal& I, long long e, const Budget& budget = Budget{}) {
    if (e < 0) return 0;
    const std::vector<Integer>& num = I.hilbert_numerator(budget);
    Integer h = 0;
    long long nv = I.ring()->num_vars();
    for (std::size_t j = 0; j < num.size(); ++j) {
        long long shift = e - static_cast<long long>(j);
        if (shift < 0) break;
        h += num[j] * binomial(shift + nv - 1, nv - 1);
    }
    return to_i64(h);
}

/// Hilbert function of a zero-dimensional projective quotient, tabulated until
/// it stabilizes. stable_value is the scheme length.
struct HilbertProfile {
    std::map<long long, long long> values;
    long long stabilization_degree = 0;
    long long stable_value = 0;
};

/// Requires a saturated ideal of a zero-dimensional scheme (Krull dimension 1
/// of the cone); such Hilbert functions increase strictly and then stay flat,
/// so the first repeated value is the length.
inline HilbertProfile hilbert_profile_zero_dim(const Ideal& I_sat, const Budget& budget = Budget{}) {
    int dim = krull_dimension(I_sat, budget);
    if (dim != 1)
        throw HypothesisError("expected a zero-dimensional projective scheme (cone dimension 1), got cone dimension " +
                              std::to_string(dim));
    int max_gen_degree = 1;
    for (const auto& g : I_sat.groebner(budget).elements)
        max_gen_degree = std::max(max_gen_degree, g.total_degree());
    long long cap = static_cast<long long>(max_gen_degree) * I_sat.ring()->num_vars() + 1;

    HilbertProfile profile;
    long long prev = -1;
    for (long long e = 0; e <= cap; ++e) {
        long long h = hilbert_function(I_sat, e, budget);
        profile.values[e] = h;
        if (h == prev) {
            profile.stabilization_degree = e - 1;
            profile.stable_value = h;
            return profile;
        }
        prev = h;
    }
    throw InternalError("Hilbert function did not stabilize below the degree cap; input is not a saturated zero-dimensional ideal");
}

/// Total length of the scheme V(I_sat) (for a saturated Tjurina ideal: the
/// total Tjurina number).
inline long long scheme_length(const Ideal& I_sat, const Budget& budget = Budget{}) {
    return hilbert_profile_zero_dim(I_sat, budget).stable_value;
}

}  // namespace satjac
