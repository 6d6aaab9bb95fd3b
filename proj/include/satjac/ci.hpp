#pragma once

#include <vector>

#include "satjac/rational.hpp"
#include "satjac/ring.hpp"

namespace satjac {

/// Complete-intersection data: degrees of a regular sequence in
/// Q[x0..x_{num_vars-1}]. Closed-form Hilbert oracle via the Koszul resolution,
/// independent of the Groebner engine.
struct CIData {
    std::vector<long long> degrees;
    int num_vars = 0;

    CIData(std::vector<long long> ds, int nv) : degrees(std::move(ds)), num_vars(nv) {
        if (nv < 2) throw InvalidArgumentError("ci: need at least 2 variables");
        if (degrees.size() > static_cast<std::size_t>(nv))
            throw InvalidArgumentError("ci: more forms than variables cannot be regular");
        for (long long d : degrees)
            if (d < 1) throw InvalidArgumentError("ci: degrees must be positive");
    }
};

/// Coefficients of prod_i (1 - t^{d_i}).
inline std::vector<Integer> ci_numerator(const CIData& ci) {
    std::vector<Integer> num{Integer(1)};
    for (long long d : ci.degrees) {
        std::vector<Integer> next(num.size() + static_cast<std::size_t>(d), Integer(0));
        for (std::size_t i = 0; i < num.size(); ++i) {
            next[i] += num[i];
            next[i + static_cast<std::size_t>(d)] -= num[i];
        }
        num = std::move(next);
    }
    return num;
}

/// Coefficient of t^e in prod (1 - t^{d_i}) / (1 - t)^{num_vars}: the Hilbert
/// function of the quotient by a regular sequence of those degrees.
inline long long ci_hilbert(const CIData& ci, long long e) {
    if (e < 0) return 0;
    const std::vector<Integer> num = ci_numerator(ci);
    Integer h = 0;
    for (std::size_t j = 0; j < num.size(); ++j) {
        long long shift = e - static_cast<long long>(j);
        if (shift < 0) break;
        h += num[j] * binomial(shift + ci.num_vars - 1, ci.num_vars - 1);
    }
    return to_i64(h);
}

/// Length (degree) of the zero-dimensional scheme cut out by a regular
/// sequence of num_vars - 1 forms: the product of the degrees (Bezout).
inline long long ci_total_length(const CIData& ci) {
    if (ci.degrees.size() + 1 != static_cast<std::size_t>(ci.num_vars))
        throw HypothesisError("ci: not a zero-dimensional projective complete intersection");
    Integer prod = 1;
    for (long long d : ci.degrees) prod *= static_cast<long>(d);
    return to_i64(prod);
}

/// xi - h(e) for a zero-dimensional CI.
inline long long ci_defect(const CIData& ci, long long e) {
    long long xi = ci_total_length(ci);
    if (e < 0) return xi;
    return xi - ci_hilbert(ci, e);
}

/// Largest degree with positive defect: the socle degree sum(d_i) - num_vars.
/// Requires a zero-dimensional CI.
inline long long ci_last_defect_degree(const CIData& ci) {
    if (ci.degrees.size() + 1 != static_cast<std::size_t>(ci.num_vars))
        throw HypothesisError("ci: not a zero-dimensional projective complete intersection");
    long long sum = 0;
    for (long long d : ci.degrees) sum += d;
    return sum - ci.num_vars;
}

}  // namespace satjac
