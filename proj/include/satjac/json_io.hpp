#pragma once

#include <json.hpp>

#include "satjac/analyzer.hpp"
#include "satjac/constructions.hpp"

namespace satjac {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSpecVersion = "1";

inline Json json_of(const Rational& r) { return to_string(r); }

inline Json json_of(const DefectProfile& p, long long xi) {
    Json table = Json::array();
    for (const auto& [e, d] : p.defects) {
        Json row;
        row["e"] = e;
        row["h"] = xi - d;
        row["defect"] = d;
        table.push_back(std::move(row));
    }
    return table;
}

inline Json json_of(const SpectrumBoundTable& t) {
    Json entries = Json::object();
    for (const auto& [a, bound] : t.entries) entries[to_string(a)] = bound;
    Json out;
    out["entries"] = std::move(entries);
    if (t.alexander_degree_bound)
        out["alexander_degree_bound"] = *t.alexander_degree_bound;
    else
        out["alexander_degree_bound"] = nullptr;
    out["note"] = t.note;
    return out;
}

inline Json json_of(const AnalysisReport& r) {
    Json out;
    out["spec_version"] = kSpecVersion;
    out["input_hash"] = r.input_hash;
    out["input_echo"] = r.input_echo;
    out["n"] = r.n;
    out["d"] = r.d;
    out["isolated"] = r.isolated;
    out["smooth"] = r.smooth;
    out["assert_irreducible"] = r.assert_irreducible;
    out["xi"] = r.xi;
    out["defect_profile"] = json_of(r.profile, r.xi);
    if (r.profile.last_positive_degree)
        out["last_positive_defect_degree"] = *r.profile.last_positive_degree;
    else
        out["last_positive_defect_degree"] = nullptr;
    out["t_smooth"] = r.t_smooth ? "T-smooth" : "not-T-smooth";
    Json excl = Json::object();
    for (const auto& e : r.root_exclusions) {
        Json entry;
        entry["verdict"] = to_string(e.verdict);
        entry["alpha"] = json_of(e.alpha_value);
        if (e.certificate_degree)
            entry["certificate_degree"] = *e.certificate_degree;
        else
            entry["certificate_degree"] = nullptr;
        if (e.exceptional_case)
            entry["exceptional_case"] = *e.exceptional_case;
        else
            entry["exceptional_case"] = nullptr;
        excl[std::to_string(e.k)] = std::move(entry);
    }
    out["root_exclusions"] = std::move(excl);
    out["spectrum_bounds"] = json_of(r.spectrum);
    out["notes"] = r.notes;
    return out;
}

inline RootVerdict root_verdict_from_string(const std::string& s) {
    if (s == "not-applicable") return RootVerdict::not_applicable;
    if (s == "excluded-prime-power") return RootVerdict::excluded_prime_power;
    if (s == "excluded-by-defect") return RootVerdict::excluded_by_defect;
    if (s == "exceptional-triple") return RootVerdict::exceptional_triple;
    if (s == "possible") return RootVerdict::possible;
    throw InvalidArgumentError("unknown verdict: " + s);
}

/// Inverse of json_of(AnalysisReport); used to show the JSON form round-trips.
inline AnalysisReport analysis_report_from_json(const Json& j) {
    AnalysisReport r;
    r.input_hash = j.at("input_hash").get<std::string>();
    r.input_echo = j.at("input_echo").get<std::string>();
    r.n = j.at("n").get<int>();
    r.d = j.at("d").get<int>();
    r.isolated = j.at("isolated").get<bool>();
    r.smooth = j.at("smooth").get<bool>();
    r.assert_irreducible = j.at("assert_irreducible").get<bool>();
    r.xi = j.at("xi").get<long long>();
    r.profile.xi = r.xi;
    for (const auto& row : j.at("defect_profile")) {
        long long e = row.at("e").get<long long>();
        long long d = row.at("defect").get<long long>();
        r.profile.defects[e] = d;
        if (d > 0) r.profile.last_positive_degree = e;
        r.profile.max_degree = std::max(r.profile.max_degree, e);
    }
    r.t_smooth = j.at("t_smooth").get<std::string>() == "T-smooth";
    for (const auto& [key, entry] : j.at("root_exclusions").items()) {
        RootExclusion e;
        e.k = std::stoi(key);
        e.verdict = root_verdict_from_string(entry.at("verdict").get<std::string>());
        e.alpha_value = rational_from_string(entry.at("alpha").get<std::string>());
        if (!entry.at("certificate_degree").is_null())
            e.certificate_degree = entry.at("certificate_degree").get<long long>();
        if (!entry.at("exceptional_case").is_null())
            e.exceptional_case = entry.at("exceptional_case").get<int>();
        r.root_exclusions.push_back(std::move(e));
    }
    std::sort(r.root_exclusions.begin(), r.root_exclusions.end(),
              [](const RootExclusion& a, const RootExclusion& b) { return a.k < b.k; });
    const Json& sp = j.at("spectrum_bounds");
    r.spectrum.n = r.n;
    r.spectrum.d = r.d;
    for (const auto& [key, val] : sp.at("entries").items())
        r.spectrum.entries[rational_from_string(key)] = val.get<long long>();
    if (!sp.at("alexander_degree_bound").is_null())
        r.spectrum.alexander_degree_bound = sp.at("alexander_degree_bound").get<long long>();
    r.spectrum.note = sp.at("note").get<std::string>();
    for (const auto& n : j.at("notes")) r.notes.push_back(n.get<std::string>());
    return r;
}

inline Json json_of(const TripleVerdict& v) {
    Json out;
    out["n"] = v.n;
    out["d"] = v.d;
    out["k"] = v.k;
    out["alpha"] = json_of(v.alpha_value);
    if (v.psi_value)
        out["psi"] = *v.psi_value;
    else
        out["psi"] = nullptr;
    if (v.exceptional_case)
        out["exceptional_case"] = *v.exceptional_case;
    else
        out["exceptional_case"] = nullptr;
    out["inequality_holds"] = v.inequality_holds;
    if (v.certificate_degree)
        out["certificate_degree"] = *v.certificate_degree;
    else
        out["certificate_degree"] = nullptr;
    out["not_applicable"] = v.not_applicable;
    out["zariski_prime_power"] = v.zariski_prime_power;
    return out;
}

inline Json json_of(const ConstructionReport& r) {
    Json out;
    out["spec_version"] = kSpecVersion;
    out["family"] = to_string(r.family);
    out["seed"] = std::to_string(r.seed);
    out["seed_used"] = std::to_string(r.seed_used);
    out["retries_used"] = r.retries_used;
    out["n"] = r.n;
    out["degree"] = r.degree;
    out["params"] = r.params;
    out["g_forms"] = r.g_forms;
    out["h_forms"] = r.h_forms;
    out["predicted_singular_count"] = r.predicted_singular_count;
    if (r.predicted_tjurina_total)
        out["predicted_tjurina_total"] = *r.predicted_tjurina_total;
    else
        out["predicted_tjurina_total"] = nullptr;
    if (r.alpha_min)
        out["alpha_min"] = json_of(*r.alpha_min);
    else
        out["alpha_min"] = nullptr;
    if (r.predicted_n_alpha_min)
        out["predicted_n_alpha_min"] = *r.predicted_n_alpha_min;
    else
        out["predicted_n_alpha_min"] = nullptr;
    out["predicted_defect_degree"] = r.predicted_defect_degree;
    if (r.predicted_jsat_defect_degree)
        out["predicted_jsat_defect_degree"] = *r.predicted_jsat_defect_degree;
    else
        out["predicted_jsat_defect_degree"] = nullptr;
    out["jsat_defect_degree_exact"] = r.jsat_defect_degree_exact;
    out["tsmooth_prediction"] = r.tsmooth_prediction ? "T-smooth" : "not-T-smooth";
    if (r.nonconstant_alexander_prediction)
        out["nonconstant_alexander_prediction"] = *r.nonconstant_alexander_prediction;
    else
        out["nonconstant_alexander_prediction"] = nullptr;
    if (r.expected_dimension)
        out["expected_dimension"] = *r.expected_dimension;
    else
        out["expected_dimension"] = nullptr;
    return out;
}

inline Json json_of(const VerificationResult& v) {
    Json out;
    out["status"] = v.status == VerificationStatus::confirmed ? "confirmed" : "retry-with-new-seed";
    out["checks"] = v.checks;
    out["mismatches"] = v.mismatches;
    if (v.analysis)
        out["analysis"] = json_of(*v.analysis);
    else
        out["analysis"] = nullptr;
    return out;
}

}  // namespace satjac
