#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "satjac/analyzer.hpp"
#include "satjac/ci.hpp"
#include "satjac/random_form.hpp"

namespace satjac {

/// Weighted homogeneous local model f(γ1..γn) with rational weights w_i and
/// weighted degree 1 in every monomial; v is the least common denominator.
struct WeightedHomogData {
    Polynomial f;  // lives in an auxiliary ring with n variables
    std::vector<Rational> weights;
    long long v = 1;
};

inline WeightedHomogData make_weighted_homog(Polynomial f, std::vector<Rational> weights) {
    if (f.is_zero()) throw InvalidArgumentError("weighted model must be nonzero");
    auto nv = static_cast<std::size_t>(f.ring()->num_vars());
    if (weights.size() != nv)
        throw InvalidArgumentError("weight count must match the auxiliary variable count");
    Integer v = 1;
    for (const auto& w : weights) {
        if (w <= 0 || w > make_rational(1, 2))
            throw InvalidArgumentError("inadmissible weight: need 0 < w <= 1/2");
        mpz_lcm(v.get_mpz_t(), v.get_mpz_t(), w.get_den_mpz_t());
    }
    for (const auto& t : f.terms()) {
        Rational wdeg = 0;
        for (std::size_t i = 0; i < nv; ++i)
            wdeg += weights[i] * static_cast<long>(t.mono.exponent(i));
        if (wdeg != 1)
            throw InvalidArgumentError(
                "inadmissible weights: a monomial of f does not have weighted degree 1");
    }
    WeightedHomogData data{std::move(f), std::move(weights), to_i64(v)};
    return data;
}

/// Brieskorn diagonal model sum γ_i^{k_i} with weights 1/k_i.
inline WeightedHomogData diagonal_weighted_homog(const std::vector<long long>& ks) {
    if (ks.size() < 2) throw InvalidArgumentError("need at least two exponents");
    RingPtr aux = make_ring(static_cast<int>(ks.size()));
    Polynomial f = Polynomial::zero(aux);
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] < 2) throw InvalidArgumentError("diagonal exponents must be >= 2");
        f = f + Polynomial::variable(aux, static_cast<int>(i), static_cast<Exponent>(ks[i]));
        weights.push_back(make_rational(1, ks[i]));
    }
    return make_weighted_homog(std::move(f), std::move(weights));
}

enum class ConstructionFamily { composite, cusps, deformed, rfold };

inline std::string to_string(ConstructionFamily f) {
    switch (f) {
        case ConstructionFamily::composite: return "composite";
        case ConstructionFamily::cusps: return "cusps";
        case ConstructionFamily::deformed: return "deformed";
        case ConstructionFamily::rfold: return "rfold";
    }
    return "?";
}

struct ConstructionReport {
    ConstructionFamily family = ConstructionFamily::composite;
    std::uint64_t seed = 0;       // seed as requested
    std::uint64_t seed_used = 0;  // after deterministic reseeds
    unsigned retries_used = 0;
    int n = 0;  // ambient projective dimension
    long long degree = 0;
    std::map<std::string, std::string> params;
    std::vector<std::string> g_forms;
    std::vector<std::string> h_forms;
    long long predicted_singular_count = 0;
    std::optional<long long> predicted_tjurina_total;
    std::optional<Rational> alpha_min;
    std::optional<long long> predicted_n_alpha_min;
    long long predicted_defect_degree = -1;               // socle of the certifying CI
    std::optional<long long> predicted_jsat_defect_degree;  // last degree with predicted J^sat defect
    bool jsat_defect_degree_exact = false;  // diagonal models: the J^sat profile ends exactly there
    bool tsmooth_prediction = true;
    std::optional<bool> nonconstant_alexander_prediction;
    std::optional<long long> expected_dimension;
};

struct Construction {
    Polynomial F;
    std::vector<Polynomial> gs;
    std::vector<Polynomial> hs;
    ConstructionReport report;
};

struct ConstructOptions {
    unsigned retries = 3;
    Budget budget{};
    bool precheck = true;  // verify the seeded forms cut out the predicted CI
};

/// Do the given forms cut out a zero-dimensional scheme of the expected
/// length? Used to reject degenerate seeds.
inline bool genericity_check(const std::vector<Polynomial>& forms, long long expected_length,
                             const Budget& budget = Budget{}) {
    if (forms.empty()) return false;
    try {
        Ideal I(forms[0].ring(), forms);
        Ideal I_sat = saturation_irrelevant(I, budget);
        if (krull_dimension(I_sat, budget) != 1) return false;
        return scheme_length(I_sat, budget) == expected_length;
    } catch (const HypothesisError&) {
        return false;
    }
}

namespace detail {

constexpr std::uint64_t kGFormLabel = 0;    // g_i uses derive_seed(seed, kGFormLabel + i)
constexpr std::uint64_t kHFormLabel = 64;   // h_i uses derive_seed(seed, kHFormLabel + i)

inline std::string join_rationals(const std::vector<Rational>& ws) {
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += ",";
        out += to_string(ws[i]);
    }
    return out;
}

inline Rational weight_sum(const WeightedHomogData& w) {
    Rational s = 0;
    for (const auto& wi : w.weights) s += wi;
    return s;
}

inline bool all_unit_fractions(const WeightedHomogData& w) {
    for (const auto& wi : w.weights)
        if (wi.get_num() != 1) return false;
    return true;
}

/// f = sum of pure powers, one per variable. For such models the saturated
/// Jacobian ideal of f(g_1..g_n) is the complete intersection (g_i^{k_i - 1}),
/// so its defect profile is predictable exactly, not just one-sidedly.
inline bool is_diagonal_model(const WeightedHomogData& w) {
    auto nv = static_cast<std::size_t>(w.f.ring()->num_vars());
    if (w.f.term_count() != nv) return false;
    std::vector<bool> seen(nv, false);
    for (const auto& t : w.f.terms()) {
        std::size_t support = 0, var = 0;
        for (std::size_t i = 0; i < nv; ++i)
            if (t.mono.exponent(i) > 0) {
                ++support;
                var = i;
            }
        if (support != 1 || seen[var]) return false;
        seen[var] = true;
    }
    return true;
}

/// Shared prediction block for the composite family evaluated at total degree
/// m*v (composite) or with the deformation offset m2 (deformed).
inline void fill_composite_predictions(ConstructionReport& report, const WeightedHomogData& w,
                                       long long mv, long long m2) {
    const int n = static_cast<int>(w.weights.size());
    Rational sw = weight_sum(w);
    std::vector<long long> gdegs;
    long long points = 1;
    for (const auto& wi : w.weights) {
        long long deg = to_i64(make_rational(mv) * wi);
        gdegs.push_back(deg);
        points *= deg;
    }
    report.degree = mv + m2;
    report.predicted_singular_count = points;
    if (all_unit_fractions(w)) {
        Rational tj = make_rational(points);
        for (const auto& wi : w.weights) tj *= (Rational(1) / wi - 1);
        report.predicted_tjurina_total = to_i64(tj);
    }
    report.alpha_min = sw;
    CIData ci(gdegs, n + 1);
    long long socle = ci_last_defect_degree(ci);
    report.predicted_defect_degree = socle;  // == mv*sum(w) - n - 1
    report.predicted_n_alpha_min = points - ci_hilbert(ci, socle);
    report.predicted_jsat_defect_degree = to_i64((Rational(n) - sw) * make_rational(mv)) - n - 1;
    report.tsmooth_prediction = *report.predicted_jsat_defect_degree < report.degree;
    // the Segre cusp family: degree-6m plane curves with 6m^2 cusps
    if (n == 2 && w.v == 6 && all_unit_fractions(w) && mv % 6 == 0 && m2 == 0) {
        long long m = mv / 6;
        report.expected_dimension = 6 * m * m + 9 * m;
    }
}

}  // namespace detail

/// F = f(g_1..g_n) with seeded general forms g_i of degree m*v*w_i.
inline Construction construct_composite(const WeightedHomogData& w, long long m,
                                        std::uint64_t seed, const ConstructOptions& opts = {}) {
    if (m < 1) throw InvalidArgumentError("construct_composite: need m >= 1");
    const int n = static_cast<int>(w.weights.size());
    RingPtr ring = make_ring(n + 1);
    long long mv = m * w.v;

    std::vector<long long> gdegs;
    long long points = 1;
    for (const auto& wi : w.weights) {
        Rational deg = make_rational(mv) * wi;
        if (!is_integral(deg))
            throw InvalidArgumentError("construct_composite: m*v*w_i is not integral");
        gdegs.push_back(to_i64(deg));
        points *= gdegs.back();
    }

    for (unsigned attempt = 0; attempt <= opts.retries; ++attempt) {
        std::uint64_t seed_used = attempt == 0 ? seed : retry_seed(seed, attempt);
        std::vector<Polynomial> gs;
        for (int i = 0; i < n; ++i)
            gs.push_back(random_general_form(ring, static_cast<int>(gdegs[static_cast<std::size_t>(i)]),
                                             derive_seed(seed_used, detail::kGFormLabel + static_cast<std::uint64_t>(i))));
        if (opts.precheck && !genericity_check(gs, points, opts.budget)) continue;

        Construction c{w.f.substitute(gs), gs, {}, {}};
        c.report.family = ConstructionFamily::composite;
        c.report.seed = seed;
        c.report.seed_used = seed_used;
        c.report.retries_used = attempt;
        c.report.n = n;
        c.report.params = {{"m", std::to_string(m)}, {"weights", detail::join_rationals(w.weights)}};
        for (const auto& g : gs) c.report.g_forms.push_back(g.to_string());
        detail::fill_composite_predictions(c.report, w, mv, 0);
        c.report.jsat_defect_degree_exact = detail::is_diagonal_model(w);
        return c;
    }
    throw GenericityError("construct_composite: seeded forms stayed degenerate after " +
                          std::to_string(opts.retries) + " reseeds");
}

/// Plane curve f1*f2^2 + g1*g2^3 of degree 6m (a1 = deg f1, b1 = deg g1).
inline Construction construct_cusps_glc(long long m, long long a1, long long b1,
                                        std::uint64_t seed, const ConstructOptions& opts = {}) {
    if (m < 1) throw InvalidArgumentError("construct_cusps_glc: need m >= 1");
    if (a1 < 0 || b1 < 0 || a1 > 6 * m || b1 > 6 * m)
        throw InvalidArgumentError("construct_cusps_glc: need 0 <= a1, b1 <= 6m");
    if (a1 % 2 != 0) throw InvalidArgumentError("construct_cusps_glc: a1 must be divisible by 2");
    if (b1 % 3 != 0) throw InvalidArgumentError("construct_cusps_glc: b1 must be divisible by 3");
    RingPtr ring = make_ring(3);
    long long a2 = 3 * m - a1 / 2;
    long long b2 = 2 * m - b1 / 3;

    for (unsigned attempt = 0; attempt <= opts.retries; ++attempt) {
        std::uint64_t seed_used = attempt == 0 ? seed : retry_seed(seed, attempt);
        Polynomial f1 = random_general_form(ring, static_cast<int>(a1), derive_seed(seed_used, detail::kGFormLabel + 0));
        Polynomial f2 = random_general_form(ring, static_cast<int>(a2), derive_seed(seed_used, detail::kGFormLabel + 1));
        Polynomial g1 = random_general_form(ring, static_cast<int>(b1), derive_seed(seed_used, detail::kGFormLabel + 2));
        Polynomial g2 = random_general_form(ring, static_cast<int>(b2), derive_seed(seed_used, detail::kGFormLabel + 3));
        if (opts.precheck && a2 > 0 && b2 > 0 && !genericity_check({f2, g2}, a2 * b2, opts.budget))
            continue;

        Construction c{f1 * f2 * f2 + g1 * g2 * g2 * g2, {f2, g2}, {f1, g1}, {}};
        c.report.family = ConstructionFamily::cusps;
        c.report.seed = seed;
        c.report.seed_used = seed_used;
        c.report.retries_used = attempt;
        c.report.n = 2;
        c.report.degree = 6 * m;
        c.report.params = {{"m", std::to_string(m)},
                           {"a1", std::to_string(a1)},
                           {"b1", std::to_string(b1)},
                           {"a2", std::to_string(a2)},
                           {"b2", std::to_string(b2)}};
        for (const auto& g : c.gs) c.report.g_forms.push_back(g.to_string());
        for (const auto& h : c.hs) c.report.h_forms.push_back(h.to_string());
        c.report.predicted_singular_count = a2 * b2;
        c.report.predicted_tjurina_total = 2 * a2 * b2;  // ordinary cusps
        c.report.alpha_min = make_rational(5, 6);
        CIData ci({a2, 2 * b2}, 3);
        c.report.predicted_defect_degree = ci_last_defect_degree(ci);  // a2 + 2*b2 - 3
        c.report.predicted_jsat_defect_degree = c.report.predicted_defect_degree;
        // J^sat contains the CI (f2, g2^2); defect at d = 6m iff a2 + 2 b2 >= 6m + 3,
        // equivalently a1/2 + 2 b1/3 <= m - 3
        c.report.tsmooth_prediction = !(a1 / 2 + 2 * (b1 / 3) <= m - 3);
        c.report.nonconstant_alexander_prediction = (a1 == 0 && b1 == 0);  // iff a2 + b2 >= 5m
        return c;
    }
    throw GenericityError("construct_cusps_glc: seeded forms stayed degenerate after " +
                          std::to_string(opts.retries) + " reseeds");
}

/// F = sum_i h_i * M_i(g_1..g_n): the composite family deformed by general
/// degree-m2 coefficients h_i, one per monomial M_i of the local model.
inline Construction construct_deformed(const WeightedHomogData& w, long long m1, long long m2,
                                       std::uint64_t seed, const ConstructOptions& opts = {}) {
    if (m1 < 1 || m2 < 0) throw InvalidArgumentError("construct_deformed: need m1 >= 1, m2 >= 0");
    const int n = static_cast<int>(w.weights.size());
    RingPtr ring = make_ring(n + 1);
    long long mv = m1 * w.v;

    std::vector<long long> gdegs;
    long long points = 1;
    for (const auto& wi : w.weights) {
        gdegs.push_back(to_i64(make_rational(mv) * wi));
        points *= gdegs.back();
    }

    for (unsigned attempt = 0; attempt <= opts.retries; ++attempt) {
        std::uint64_t seed_used = attempt == 0 ? seed : retry_seed(seed, attempt);
        std::vector<Polynomial> gs;
        for (int i = 0; i < n; ++i)
            gs.push_back(random_general_form(ring, static_cast<int>(gdegs[static_cast<std::size_t>(i)]),
                                             derive_seed(seed_used, detail::kGFormLabel + static_cast<std::uint64_t>(i))));
        if (opts.precheck && !genericity_check(gs, points, opts.budget)) continue;

        std::vector<Polynomial> hs;
        Polynomial F = Polynomial::zero(ring);
        std::size_t idx = 0;
        for (const auto& term : w.f.terms()) {
            Polynomial h = random_general_form(ring, static_cast<int>(m2),
                                               derive_seed(seed_used, detail::kHFormLabel + idx));
            Polynomial mi = Polynomial::constant(ring, term.coeff);
            for (int j = 0; j < n; ++j) {
                Exponent e = term.mono.exponent(static_cast<std::size_t>(j));
                if (e > 0) mi = mi * gs[static_cast<std::size_t>(j)].pow(e);
            }
            F = F + h * mi;
            hs.push_back(std::move(h));
            ++idx;
        }

        Construction c{std::move(F), std::move(gs), std::move(hs), {}};
        c.report.family = ConstructionFamily::deformed;
        c.report.seed = seed;
        c.report.seed_used = seed_used;
        c.report.retries_used = attempt;
        c.report.n = n;
        c.report.params = {{"m1", std::to_string(m1)},
                           {"m2", std::to_string(m2)},
                           {"weights", detail::join_rationals(w.weights)}};
        for (const auto& g : c.gs) c.report.g_forms.push_back(g.to_string());
        for (const auto& h : c.hs) c.report.h_forms.push_back(h.to_string());
        detail::fill_composite_predictions(c.report, w, mv, m2);
        // not T-smooth iff m2 <= (n - sum w - 1) m1 v - n - 1
        c.report.tsmooth_prediction =
            !(make_rational(m2) <= (Rational(n) - detail::weight_sum(w) - 1) * make_rational(mv) - n - 1);
        return c;
    }
    throw GenericityError("construct_deformed: seeded forms stayed degenerate after " +
                          std::to_string(opts.retries) + " reseeds");
}

/// Hypersurface in P^{2l} of degree m(r-1)+1 with m^l ordinary r-fold points:
/// V(sum_i x_{l+i} h_i) with h_i generic in (g_1..g_l, x_{l+1}..x_{2l})^{r-1}.
inline Construction construct_rfold(long long ell, long long r, long long m, std::uint64_t seed,
                                    const ConstructOptions& opts = {}) {
    if (ell < 2 || r < 2 || m < 1)
        throw InvalidArgumentError("construct_rfold: need ell >= 2, r >= 2, m >= 1");
    const int n = static_cast<int>(2 * ell);
    RingPtr ring = make_ring(n + 1);
    long long d = m * (r - 1) + 1;

    long long points = 1;
    for (long long i = 0; i < ell; ++i) points *= m;

    for (unsigned attempt = 0; attempt <= opts.retries; ++attempt) {
        std::uint64_t seed_used = attempt == 0 ? seed : retry_seed(seed, attempt);
        std::vector<Polynomial> ci_gens;
        std::vector<Polynomial> gs;
        for (long long i = 0; i < ell; ++i) {
            gs.push_back(random_general_form(ring, static_cast<int>(m),
                                             derive_seed(seed_used, detail::kGFormLabel + static_cast<std::uint64_t>(i))));
            ci_gens.push_back(gs.back());
        }
        for (long long j = 0; j < ell; ++j)
            ci_gens.push_back(Polynomial::variable(ring, static_cast<int>(ell + 1 + j)));
        if (opts.precheck && !genericity_check(ci_gens, points, opts.budget)) continue;

        // multisets of size r-1 over the 2l generators of the point ideal
        std::vector<std::vector<std::size_t>> multisets;
        std::vector<std::size_t> current;
        auto rec = [&](auto&& self, std::size_t start, long long remaining) -> void {
            if (remaining == 0) {
                multisets.push_back(current);
                return;
            }
            for (std::size_t g = start; g < ci_gens.size(); ++g) {
                current.push_back(g);
                self(self, g, remaining - 1);
                current.pop_back();
            }
        };
        rec(rec, 0, r - 1);

        std::vector<Polynomial> hs;
        Polynomial F = Polynomial::zero(ring);
        for (long long i = 0; i < ell; ++i) {
            std::uint64_t h_seed = derive_seed(seed_used, detail::kHFormLabel + static_cast<std::uint64_t>(i));
            Polynomial h = Polynomial::zero(ring);
            for (std::size_t s = 0; s < multisets.size(); ++s) {
                Polynomial prod = Polynomial::constant(ring, Rational(1));
                long long prod_deg = 0;
                for (std::size_t g : multisets[s]) {
                    prod = prod * ci_gens[g];
                    prod_deg += (g < static_cast<std::size_t>(ell)) ? m : 1;
                }
                Polynomial q = random_general_form(ring, static_cast<int>(m * (r - 1) - prod_deg),
                                                   derive_seed(h_seed, s));
                h = h + q * prod;
            }
            F = F + Polynomial::variable(ring, static_cast<int>(ell + 1 + i)) * h;
            hs.push_back(std::move(h));
        }

        Construction c{std::move(F), std::move(gs), std::move(hs), {}};
        c.report.family = ConstructionFamily::rfold;
        c.report.seed = seed;
        c.report.seed_used = seed_used;
        c.report.retries_used = attempt;
        c.report.n = n;
        c.report.degree = d;
        c.report.params = {{"ell", std::to_string(ell)},
                           {"r", std::to_string(r)},
                           {"m", std::to_string(m)}};
        for (const auto& g : c.gs) c.report.g_forms.push_back(g.to_string());
        for (const auto& h : c.hs) c.report.h_forms.push_back(h.to_string());
        c.report.predicted_singular_count = points;
        Integer mu = 1;
        for (long long i = 0; i < 2 * ell; ++i) mu *= static_cast<long>(r - 1);
        c.report.predicted_tjurina_total = to_i64(Integer(make_integer(points) * mu));
        c.report.alpha_min = make_rational(2 * ell, r);
        std::vector<long long> ci_degs(static_cast<std::size_t>(ell), m);
        ci_degs.insert(ci_degs.end(), static_cast<std::size_t>(ell), 1);
        c.report.predicted_defect_degree = ci_last_defect_degree(CIData(ci_degs, n + 1));
        c.report.predicted_jsat_defect_degree = ell * m * (r - 1) - ell - 1;
        c.report.tsmooth_prediction = !(*c.report.predicted_jsat_defect_degree >= d);
        c.report.expected_dimension =
            binomial_i64(d + 2 * ell, 2 * ell) - to_i64(Integer(make_integer(points) * mu)) - 1;
        return c;
    }
    throw GenericityError("construct_rfold: seeded forms stayed degenerate after " +
                          std::to_string(opts.retries) + " reseeds");
}

enum class DimensionFamily {
    segre_cusp_family,       // degree-6m plane curves with 6m^2 cusps: 6m^2 + 9m
    segre_tangent_excess,    // (m-1)(m-2)/2
    ordinary_multiple_points,  // d_{r,n}(m) = C(mr+n, n) - m^n (r-1)^n - 1
    rfold                      // C(m(r-1)+1+2l, 2l) - m^l (r-1)^{2l} - 1
};

inline long long expected_dimension(DimensionFamily family, const std::vector<long long>& params) {
    switch (family) {
        case DimensionFamily::segre_cusp_family: {
            if (params.size() != 1 || params[0] < 1) throw InvalidArgumentError("expected params: m");
            long long m = params[0];
            return 6 * m * m + 9 * m;
        }
        case DimensionFamily::segre_tangent_excess: {
            if (params.size() != 1 || params[0] < 1) throw InvalidArgumentError("expected params: m");
            long long m = params[0];
            return (m - 1) * (m - 2) / 2;
        }
        case DimensionFamily::ordinary_multiple_points: {
            if (params.size() != 3) throw InvalidArgumentError("expected params: r, n, m");
            long long r = params[0], n = params[1], m = params[2];
            Integer pts = 1;
            for (long long i = 0; i < n; ++i) pts *= static_cast<long>(r - 1);
            Integer cnt = 1;
            for (long long i = 0; i < n; ++i) cnt *= static_cast<long>(m);
            return to_i64(Integer(binomial(m * r + n, n) - cnt * pts - 1));
        }
        case DimensionFamily::rfold: {
            if (params.size() != 3) throw InvalidArgumentError("expected params: ell, r, m");
            long long ell = params[0], r = params[1], m = params[2];
            Integer mu = 1;
            for (long long i = 0; i < 2 * ell; ++i) mu *= static_cast<long>(r - 1);
            Integer cnt = 1;
            for (long long i = 0; i < ell; ++i) cnt *= static_cast<long>(m);
            return to_i64(Integer(binomial(m * (r - 1) + 1 + 2 * ell, 2 * ell) - cnt * mu - 1));
        }
    }
    throw InvalidArgumentError("unknown dimension family");
}

enum class VerificationStatus { confirmed, retry_with_new_seed };

struct VerificationResult {
    VerificationStatus status = VerificationStatus::confirmed;
    std::vector<std::string> checks;      // passed comparisons
    std::vector<std::string> mismatches;  // failed ones (genericity suspects)
    std::optional<AnalysisReport> analysis;
};

/// Replays the construction's predictions through the analyzer. Genericity
/// failures come back as retry_with_new_seed, not as errors.
inline VerificationResult verify_construction(const Construction& c,
                                              const ConstructOptions& opts = {}) {
    VerificationResult result;
    const ConstructionReport& rep = c.report;
    AnalysisReport analysis;
    try {
        analysis = analyze(c.F, {/*assert_irreducible=*/false, opts.budget});
    } catch (const HypothesisError& e) {
        result.status = VerificationStatus::retry_with_new_seed;
        result.mismatches.push_back(std::string("analyzer rejected the input: ") + e.what());
        return result;
    }
    result.analysis = analysis;

    auto check = [&](bool ok, const std::string& label) {
        (ok ? result.checks : result.mismatches).push_back(label);
    };
    check(analysis.isolated, "isolated singular locus");
    if (rep.predicted_tjurina_total)
        check(analysis.xi == *rep.predicted_tjurina_total,
              "xi == " + std::to_string(*rep.predicted_tjurina_total));
    if (rep.predicted_jsat_defect_degree) {
        long long D = *rep.predicted_jsat_defect_degree;
        if (D >= 0) check(analysis.profile.defect_at(D) > 0, "defect(" + std::to_string(D) + ") > 0");
        if (rep.jsat_defect_degree_exact)
            check(analysis.profile.defect_at(D + 1) == 0, "defect(" + std::to_string(D + 1) + ") == 0");
    }
    check(analysis.t_smooth == rep.tsmooth_prediction,
          std::string("T-smoothness matches prediction (") +
              (rep.tsmooth_prediction ? "T-smooth" : "not-T-smooth") + ")");

    result.status = result.mismatches.empty() ? VerificationStatus::confirmed
                                              : VerificationStatus::retry_with_new_seed;
    return result;
}

}  // namespace satjac
