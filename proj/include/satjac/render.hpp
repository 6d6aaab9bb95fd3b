#pragma once

#include <sstream>

#include "satjac/analyzer.hpp"
#include "satjac/constructions.hpp"

namespace satjac {

/// Stable, diff-friendly text layout for a full analysis.
inline std::string report_render(const AnalysisReport& r) {
    if (r.smooth) return "smooth hypersurface; analysis trivial\n";
    std::ostringstream os;
    os << "hypersurface analysis\n";
    os << "  input: " << r.input_echo << "\n";
    os << "  hash: " << r.input_hash << "  n: " << r.n << "  d: " << r.d << "\n";
    os << "  hypotheses: singularities asserted semi-weighted homogeneous; irreducible: "
       << (r.assert_irreducible ? "asserted" : "not asserted") << "\n";
    os << "  isolated: yes  smooth: no\n";
    os << "  xi (total Tjurina number): " << r.xi << "\n";
    os << "  defect profile (e: h defect):\n";
    for (const auto& [e, d] : r.profile.defects)
        os << "    " << e << ": " << (r.xi - d) << " " << d << "\n";
    long long dd = r.profile.defect_at(r.d);
    if (r.t_smooth)
        os << "  verdict: T-smooth (defect in degree " << r.d << " = 0)\n";
    else
        os << "  verdict: not-T-smooth (defect in degree " << r.d << " = " << dd << ")\n";
    os << "  root exclusions (k: verdict):\n";
    for (const auto& e : r.root_exclusions) {
        os << "    " << e.k << ": " << to_string(e.verdict) << " (alpha = " << to_string(e.alpha_value);
        if (e.certificate_degree) os << ", certificate degree = " << *e.certificate_degree;
        if (e.exceptional_case) os << ", exceptional case " << *e.exceptional_case;
        os << ")\n";
    }
    os << "  spectrum bounds (alpha: n_alpha <=):\n";
    for (const auto& [a, b] : r.spectrum.entries) os << "    " << to_string(a) << ": " << b << "\n";
    if (r.spectrum.alexander_degree_bound)
        os << "  Alexander degree bound: " << *r.spectrum.alexander_degree_bound << "\n";
    for (const auto& note : r.notes) os << "  note: " << note << "\n";
    return os.str();
}

inline std::string report_render(const TripleVerdict& v) {
    std::ostringstream os;
    os << "(n, d, k) = (" << v.n << ", " << v.d << ", " << v.k << ")\n";
    os << "  alpha = " << to_string(v.alpha_value);
    if (v.psi_value) os << "  psi(k) = " << *v.psi_value;
    os << "\n";
    os << "  (alpha - 1) * d >= n + 1: " << (v.inequality_holds ? "holds" : "fails") << "\n";
    if (v.certificate_degree) os << "  certificate degree: " << *v.certificate_degree << "\n";
    if (v.exceptional_case)
        os << "  exceptional case " << *v.exceptional_case << "\n";
    else if (v.not_applicable)
        os << "  not applicable (n = 2, k = 1: reducible plane curves)\n";
    else
        os << "  not exceptional\n";
    if (v.zariski_prime_power)
        os << "  zeta_k is never a root for irreducible plane curves (k is a prime power)\n";
    return os.str();
}

inline std::string report_render(const ConstructionReport& r) {
    std::ostringstream os;
    os << "construction: " << to_string(r.family) << "\n";
    os << "  seed: " << r.seed << " (used " << r.seed_used << ", retries " << r.retries_used
       << ")\n";
    os << "  ambient: P^" << r.n << "  degree: " << r.degree << "\n";
    for (const auto& [k, v] : r.params) os << "  " << k << " = " << v << "\n";
    os << "  predicted singular points: " << r.predicted_singular_count << "\n";
    if (r.predicted_tjurina_total)
        os << "  predicted total Tjurina number: " << *r.predicted_tjurina_total << "\n";
    if (r.alpha_min) os << "  alpha_min = " << to_string(*r.alpha_min) << "\n";
    if (r.predicted_n_alpha_min)
        os << "  predicted n_alpha_min = " << *r.predicted_n_alpha_min << "\n";
    os << "  predicted last defect degree of the point ideal: " << r.predicted_defect_degree
       << "\n";
    if (r.predicted_jsat_defect_degree)
        os << "  predicted J^sat defect through degree: " << *r.predicted_jsat_defect_degree
           << (r.jsat_defect_degree_exact ? " (exact)" : " (at least)") << "\n";
    os << "  predicted verdict: " << (r.tsmooth_prediction ? "T-smooth" : "not-T-smooth") << "\n";
    if (r.nonconstant_alexander_prediction)
        os << "  nonconstant Alexander polynomial predicted: "
           << (*r.nonconstant_alexander_prediction ? "yes" : "no") << "\n";
    if (r.expected_dimension) os << "  expected dimension: " << *r.expected_dimension << "\n";
    return os.str();
}

}  // namespace satjac
