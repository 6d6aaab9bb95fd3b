#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "satjac/defect.hpp"
#include "satjac/spectrum.hpp"

namespace satjac {

enum class RootVerdict {
    not_applicable,       // n = 2 with k = 1, d <= 2, or no singularities
    excluded_prime_power, // n = 2, irreducible asserted, k a prime power
    excluded_by_defect,   // defect vanishes at the certificate degree
    exceptional_triple,   // root possible; (n,d,k) is on the exceptional list
    possible
};

inline std::string to_string(RootVerdict v) {
    switch (v) {
        case RootVerdict::not_applicable: return "not-applicable";
        case RootVerdict::excluded_prime_power: return "excluded-prime-power";
        case RootVerdict::excluded_by_defect: return "excluded-by-defect";
        case RootVerdict::exceptional_triple: return "exceptional-triple";
        case RootVerdict::possible: return "possible";
    }
    return "?";
}

struct RootExclusion {
    int k = 0;
    RootVerdict verdict = RootVerdict::possible;
    Rational alpha_value;
    std::optional<long long> certificate_degree;
    std::optional<int> exceptional_case;

    friend bool operator==(const RootExclusion& a, const RootExclusion& b) {
        return a.k == b.k && a.verdict == b.verdict && a.alpha_value == b.alpha_value &&
               a.certificate_degree == b.certificate_degree &&
               a.exceptional_case == b.exceptional_case;
    }
};

struct AnalysisReport {
    std::string input_echo;
    std::string input_hash;
    int n = 0;
    int d = 0;
    bool isolated = false;
    bool smooth = false;
    bool assert_irreducible = false;
    long long xi = 0;
    DefectProfile profile;
    bool t_smooth = false;
    std::vector<RootExclusion> root_exclusions;  // ascending k over divisors of d
    SpectrumBoundTable spectrum;
    std::vector<std::string> notes;

    friend bool operator==(const AnalysisReport& a, const AnalysisReport& b) {
        return a.input_echo == b.input_echo && a.input_hash == b.input_hash && a.n == b.n &&
               a.d == b.d && a.isolated == b.isolated && a.smooth == b.smooth &&
               a.assert_irreducible == b.assert_irreducible && a.xi == b.xi &&
               a.profile.xi == b.profile.xi && a.profile.defects == b.profile.defects &&
               a.profile.last_positive_degree == b.profile.last_positive_degree &&
               a.t_smooth == b.t_smooth && a.root_exclusions == b.root_exclusions &&
               a.spectrum == b.spectrum && a.notes == b.notes;
    }
};

struct AnalyzeOptions {
    bool assert_irreducible = false;
    Budget budget{};
};

inline std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

/// Full per-hypersurface verdict. Requires homogeneous f of degree >= 1 with
/// isolated singularities; semi-weighted homogeneity of the singularities and
/// irreducibility are user assertions echoed in the notes.
inline AnalysisReport analyze(const Polynomial& f, const AnalyzeOptions& opts = {}) {
    Homogeneity hom = f.homogeneity();
    if (!hom.is_homogeneous) throw HypothesisError("analyze: input is not homogeneous");
    if (!hom.degree || *hom.degree < 1)
        throw HypothesisError("analyze: input must be a form of degree >= 1");

    AnalysisReport report;
    report.input_echo = f.to_string();
    report.input_hash = fnv1a64_hex(report.input_echo);
    report.n = f.ring()->n();
    report.d = *hom.degree;
    report.assert_irreducible = opts.assert_irreducible;
    const int n = report.n;
    const int d = report.d;

    Ideal J = jacobian_ideal(f);
    int cone_dim = krull_dimension(J, opts.budget);
    if (cone_dim > 1)
        throw HypothesisError("analyze: singular locus is not isolated (cone dimension " +
                              std::to_string(cone_dim) + ")");
    report.isolated = true;

    Ideal J_sat = saturation_irrelevant(J, opts.budget);
    report.smooth = is_unit_ideal(J_sat, opts.budget);

    if (report.smooth) {
        report.xi = 0;
        report.profile = empty_defect_profile();
        report.profile.max_degree = std::max<long long>(0, static_cast<long long>(n) * d - n - 1);
        report.t_smooth = true;
    } else {
        long long emax = std::max<long long>(d, static_cast<long long>(n) * d - n - 1);
        report.profile = defect_profile(J_sat, emax, opts.budget);
        report.xi = report.profile.xi;
        report.t_smooth = (report.profile.defect_at(d) == 0);
    }

    for (int k : divisors(d)) {
        RootExclusion entry;
        entry.k = k;
        entry.alpha_value = alpha(n, d, k);
        Rational ad = entry.alpha_value * d;
        if (is_integral(ad)) entry.certificate_degree = to_i64(ad) - n - 1;
        if (d >= 3) entry.exceptional_case = exceptional_case_of(n, d, k);

        if (report.smooth || d <= 2 || (n == 2 && k == 1)) {
            entry.verdict = RootVerdict::not_applicable;
        } else if (n == 2 && opts.assert_irreducible && is_prime_power(k)) {
            entry.verdict = RootVerdict::excluded_prime_power;
        } else if (entry.alpha_value > 1 && entry.certificate_degree &&
                   report.profile.defect_at(*entry.certificate_degree) == 0) {
            entry.verdict = RootVerdict::excluded_by_defect;
        } else if (entry.exceptional_case) {
            entry.verdict = RootVerdict::exceptional_triple;
        } else {
            entry.verdict = RootVerdict::possible;
        }
        report.root_exclusions.push_back(std::move(entry));
    }

    report.spectrum = spectrum_bounds(report.profile, n, d);

    report.notes.push_back(
        "semi-weighted homogeneity of every singularity is a user assertion and is not verified");
    report.notes.push_back(opts.assert_irreducible
                               ? "irreducibility asserted by the user: prime-power exclusions apply for plane curves"
                               : "irreducibility not asserted: prime-power exclusions are withheld");
    report.notes.push_back("root candidates range over the divisors of d only");
    return report;
}

}  // namespace satjac
