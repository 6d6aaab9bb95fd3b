#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "satjac/rational.hpp"

namespace satjac {

/// Largest m with gcd(m, k) = 1 and m < k/2; defined for k > 2, always >= 1.
inline int psi(int k) {
    if (k <= 2) throw InvalidArgumentError("psi is defined only for k > 2");
    for (int m = (k - 1) / 2; m >= 1; --m)
        if (std::gcd(m, k) == 1) return m;
    throw InternalError("psi: no candidate found");  // unreachable, m = 1 qualifies
}

inline long long euler_phi(long long k) {
    long long result = k, m = k;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

/// #\{ i : 1 <= i < k/2, gcd(i, k) = 1 \} — the number of spectrum slots of the
/// form n/2 + i/k inside [n/2, (n+1)/2]; equals phi(k)/2 for k > 2.
inline long long coprime_count_below_half(int k) {
    long long count = 0;
    for (int i = 1; 2 * i < k; ++i)
        if (std::gcd(i, k) == 1) ++count;
    return count;
}

inline bool is_prime_power(long long k) {
    if (k < 2) return false;
    for (long long p = 2; p * p <= k; ++p) {
        if (k % p) continue;
        while (k % p == 0) k /= p;
        return k == 1;
    }
    return true;  // k itself prime
}

inline std::vector<int> divisors(int d) {
    std::vector<int> out;
    for (int k = 1; k <= d; ++k)
        if (d % k == 0) out.push_back(k);
    return out;
}

/// The threshold rational in [n/2, (n+1)/2]: a zeta_k root of the Alexander
/// polynomial forces defect of J^sat up to degree alpha*d - n - 1. The value
/// does not depend on d; d is carried for interface symmetry.
inline Rational alpha(int n, int d, int k) {
    (void)d;
    if (n < 2 || k < 1) throw InvalidArgumentError("alpha: need n >= 2 and k >= 1");
    bool even = (n % 2 == 0);
    if ((even && k == 1) || (!even && k == 2)) return make_rational(n, 2);
    if ((even && k == 2) || (!even && k == 1)) return make_rational(n + 1, 2);
    if (!even) return make_rational(n + 1, 2) - make_rational(1, k);
    return make_rational(n, 2) + make_rational(psi(k), k);
}

/// Classification of (n, d, k) against the finite exceptional list.
struct TripleVerdict {
    int n = 0, d = 0, k = 0;
    Rational alpha_value;
    std::optional<int> psi_value;            // defined for k > 2
    std::optional<int> exceptional_case;     // 1..6 when listed
    bool inequality_holds = false;           // (alpha - 1) d >= n + 1
    std::optional<long long> certificate_degree;  // alpha*d - n - 1 when integral
    bool not_applicable = false;             // n = 2, k = 1: reducible plane curves
    bool zariski_prime_power = false;        // n = 2, k = p^r: never a root for irreducible curves

    friend bool operator==(const TripleVerdict& a, const TripleVerdict& b) {
        return a.n == b.n && a.d == b.d && a.k == b.k && a.alpha_value == b.alpha_value &&
               a.psi_value == b.psi_value && a.exceptional_case == b.exceptional_case &&
               a.inequality_holds == b.inequality_holds &&
               a.certificate_degree == b.certificate_degree &&
               a.not_applicable == b.not_applicable &&
               a.zariski_prime_power == b.zariski_prime_power;
    }
};

inline std::optional<int> exceptional_case_of(int n, int d, int k) {
    if (n == 2 && (d == 6 || d == 12) && k == 6) return 1;
    if ((n == 3 || n == 4 || n == 6) && d == 3 && k == 1) return 2;
    if ((n == 3 || n == 4 || n == 5) && d == 3 && k == 3) return 3;
    if (n == 3 && (d == 4 || d == 6) && k == 2) return 4;
    if (n == 3 && d == 4 && k == 4) return 5;
    if (n == 4 && d == 4 && k == 1) return 6;
    return std::nullopt;
}

inline TripleVerdict classify_triple(int n, int d, int k) {
    if (n < 2) throw InvalidArgumentError("classify: need n >= 2");
    if (d < 3) throw InvalidArgumentError("classify: need d >= 3");
    if (k < 1 || d % k != 0)
        throw InvalidArgumentError("classify: k must be a positive divisor of d");
    TripleVerdict v;
    v.n = n;
    v.d = d;
    v.k = k;
    v.alpha_value = alpha(n, d, k);
    if (k > 2) v.psi_value = psi(k);
    v.exceptional_case = exceptional_case_of(n, d, k);
    v.inequality_holds = (v.alpha_value - 1) * d >= Rational(n + 1);
    Rational ad = v.alpha_value * d;
    if (is_integral(ad)) v.certificate_degree = to_i64(ad) - n - 1;
    v.not_applicable = (n == 2 && k == 1);
    v.zariski_prime_power = (n == 2 && is_prime_power(k));
    return v;
}

/// All triples with 2 <= n <= n_max, 3 <= d <= d_max, k | d, ordered by
/// (n, d, k).
inline std::vector<TripleVerdict> sweep_triples(int n_max, int d_max) {
    if (n_max < 2 || d_max < 3) throw InvalidArgumentError("sweep: need n_max >= 2, d_max >= 3");
    std::vector<TripleVerdict> out;
    for (int n = 2; n <= n_max; ++n)
        for (int d = 3; d <= d_max; ++d)
            for (int k : divisors(d)) out.push_back(classify_triple(n, d, k));
    return out;
}

}  // namespace satjac
