#pragma once

#include <optional>

#include "satjac/hilbert.hpp"

namespace satjac {

/// Per-degree defect table of a saturated zero-dimensional ideal:
/// defect(e) = xi - h_{R/I}(e), the number of conditions the scheme fails to
/// impose on degree-e forms. Nonincreasing in e, zero from the stabilization
/// degree on.
struct DefectProfile {
    long long xi = 0;
    std::map<long long, long long> defects;
    std::optional<long long> last_positive_degree;
    long long stabilization_degree = 0;
    long long max_degree = -1;

    /// Defect at any degree: xi below zero, table value in range, zero beyond
    /// (the profile always extends past stabilization).
    long long defect_at(long long e) const {
        if (e < 0) return xi;
        auto it = defects.find(e);
        if (it != defects.end()) return it->second;
        return 0;
    }
};

/// Trivial profile for a smooth hypersurface (empty singularity scheme).
inline DefectProfile empty_defect_profile() {
    DefectProfile p;
    p.xi = 0;
    p.last_positive_degree = std::nullopt;
    p.stabilization_degree = 0;
    p.max_degree = -1;
    return p;
}

inline DefectProfile defect_profile(const Ideal& I_sat, long long max_degree,
                                    const Budget& budget = Budget{}) {
    HilbertProfile hp = hilbert_profile_zero_dim(I_sat, budget);
    DefectProfile out;
    out.xi = hp.stable_value;
    out.stabilization_degree = hp.stabilization_degree;
    out.max_degree = std::max(max_degree, hp.stabilization_degree);
    long long prev = out.xi + 1;
    for (long long e = 0; e <= out.max_degree; ++e) {
        long long h = hp.values.count(e) ? hp.values.at(e) : hilbert_function(I_sat, e, budget);
        long long d = out.xi - h;
        if (d < 0 || d > prev)
            throw InternalError("defect profile is not nonnegative and nonincreasing");
        out.defects[e] = d;
        if (d > 0) out.last_positive_degree = e;
        prev = d;
    }
    return out;
}

}  // namespace satjac
