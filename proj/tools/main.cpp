#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "satjac/satjac.hpp"

namespace {

using namespace satjac;

constexpr std::uint64_t kDefaultSeed = 1729;

struct CommonFlags {
    bool json = false;
    long long max_spairs = 500000;
    int max_degree = 256;
    bool unbounded = false;

    Budget budget() const {
        Budget b;
        b.max_spairs = max_spairs;
        b.max_degree = max_degree;
        b.unbounded = unbounded;
        return b;
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_flag("--json", flags.json, "emit machine-readable JSON on stdout");
    cmd->add_option("--max-spairs-budget", flags.max_spairs, "S-pair cap for basis computations")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-degree-budget", flags.max_degree, "degree cap for basis computations")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--unbounded", flags.unbounded, "remove the resource caps");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgumentError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const CommonFlags& flags, const Json& json_doc, const std::string& text) {
    if (flags.json)
        std::cout << json_doc.dump(2) << "\n";
    else
        std::cout << text;
}

std::vector<Rational> parse_weights(const std::string& text) {
    std::vector<Rational> ws;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) ws.push_back(rational_from_string(item));
    }
    if (ws.size() < 2) throw InvalidArgumentError("need at least two weights, e.g. --weights 1/2,1/3");
    return ws;
}

std::vector<long long> parse_degree_list(const std::string& text) {
    std::vector<long long> ds;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) ds.push_back(std::stoll(item));
    }
    if (ds.empty()) throw InvalidArgumentError("empty degree list");
    return ds;
}

int run_analyze(const CommonFlags& flags, int n, const std::string& poly,
                const std::string& poly_file, bool assert_irreducible) {
    RingPtr ring = make_ring(n + 1);
    std::string text = poly;
    if (!poly_file.empty()) text = read_file(poly_file);
    if (text.empty()) throw InvalidArgumentError("provide --poly or --poly-file");
    Polynomial f = parse_poly(text, ring);
    AnalysisReport report = analyze(f, {assert_irreducible, flags.budget()});
    emit(flags, json_of(report), report_render(report));
    return 0;
}

int run_hilbert(const CommonFlags& flags, int n, const std::vector<std::string>& gens,
                const std::vector<std::string>& gen_files, bool saturate, long long max_degree,
                const std::string& ci_degrees) {
    Json out;
    out["spec_version"] = kSpecVersion;
    std::ostringstream text;

    if (!ci_degrees.empty()) {
        if (!gens.empty() || !gen_files.empty())
            throw InvalidArgumentError("--ci is an oracle mode; do not pass generators with it");
        CIData ci(parse_degree_list(ci_degrees), n + 1);
        bool zero_dim = ci.degrees.size() + 1 == static_cast<std::size_t>(ci.num_vars);
        long long emax = max_degree;
        if (emax < 0) {
            long long sum = 0;
            for (long long d : ci.degrees) sum += d;
            emax = sum;
        }
        out["command"] = "hilbert-ci";
        out["n"] = n;
        out["degrees"] = ci.degrees;
        text << "complete-intersection Hilbert oracle, degrees (";
        for (std::size_t i = 0; i < ci.degrees.size(); ++i)
            text << (i ? "," : "") << ci.degrees[i];
        text << ") in P^" << n << "\n";
        Json table = Json::array();
        for (long long e = 0; e <= emax; ++e) {
            Json row;
            row["e"] = e;
            row["h"] = ci_hilbert(ci, e);
            if (zero_dim) row["defect"] = ci_defect(ci, e);
            table.push_back(row);
            text << "  " << e << ": " << ci_hilbert(ci, e);
            if (zero_dim) text << " (defect " << ci_defect(ci, e) << ")";
            text << "\n";
        }
        out["table"] = std::move(table);
        if (zero_dim) {
            out["length"] = ci_total_length(ci);
            out["last_defect_degree"] = ci_last_defect_degree(ci);
            text << "  length " << ci_total_length(ci) << ", last defect degree "
                 << ci_last_defect_degree(ci) << "\n";
        }
        emit(flags, out, text.str());
        return 0;
    }

    RingPtr ring = make_ring(n + 1);
    std::vector<Polynomial> polys;
    for (const auto& g : gens) polys.push_back(parse_poly(g, ring));
    for (const auto& path : gen_files) polys.push_back(parse_poly(read_file(path), ring));
    if (polys.empty()) throw InvalidArgumentError("provide --gen/--gen-file generators or --ci");
    Ideal I(ring, polys);
    Budget budget = flags.budget();
    if (saturate) I = saturation_irrelevant(I, budget);
    int dim = krull_dimension(I, budget);

    out["command"] = "hilbert";
    out["n"] = n;
    out["saturated"] = saturate;
    Json gen_list = Json::array();
    for (const auto& p : I.generators()) gen_list.push_back(p.to_string());
    out["generators"] = std::move(gen_list);
    out["krull_dimension"] = dim;
    text << "graded quotient in P^" << n << " (cone dimension " << dim << ")\n";

    long long emax = max_degree;
    std::optional<long long> xi;
    if (dim == 1) {
        HilbertProfile hp = hilbert_profile_zero_dim(I, budget);
        xi = hp.stable_value;
        if (emax < 0) emax = hp.stabilization_degree + 2;
        out["xi"] = *xi;
        out["stabilization_degree"] = hp.stabilization_degree;
        text << "zero-dimensional scheme of length " << *xi << " (stable from degree "
             << hp.stabilization_degree << ")\n";
    } else if (emax < 0) {
        int dmax = 1;
        for (const auto& p : I.generators()) dmax = std::max(dmax, p.total_degree());
        emax = 2 * dmax;
    }
    Json table = Json::array();
    text << "  e: h" << (xi ? " defect" : "") << "\n";
    for (long long e = 0; e <= emax; ++e) {
        long long h = hilbert_function(I, e, budget);
        Json row;
        row["e"] = e;
        row["h"] = h;
        if (xi) row["defect"] = *xi - h;
        table.push_back(row);
        text << "  " << e << ": " << h;
        if (xi) text << " " << (*xi - h);
        text << "\n";
    }
    out["table"] = std::move(table);
    emit(flags, out, text.str());
    return 0;
}

int run_alpha(const CommonFlags& flags, int n, int d, int k) {
    Rational a = alpha(n, d, k);
    Json out;
    out["spec_version"] = kSpecVersion;
    out["command"] = "alpha";
    out["n"] = n;
    out["d"] = d;
    out["k"] = k;
    out["alpha"] = to_string(a);
    std::ostringstream text;
    text << "alpha(" << n << ", " << d << ", " << k << ") = " << to_string(a) << "\n";
    if (k > 2) {
        out["psi"] = psi(k);
        text << "psi(" << k << ") = " << psi(k) << "\n";
    } else {
        out["psi"] = nullptr;
    }
    Rational ad = a * d;
    if (is_integral(ad)) {
        out["certificate_degree"] = to_i64(ad) - n - 1;
        text << "certificate degree alpha*d - n - 1 = " << (to_i64(ad) - n - 1) << "\n";
    } else {
        out["certificate_degree"] = nullptr;
    }
    emit(flags, out, text.str());
    return 0;
}

int run_classify(const CommonFlags& flags, int n, int d, int k) {
    TripleVerdict v = classify_triple(n, d, k);
    Json out;
    out["spec_version"] = kSpecVersion;
    out["command"] = "classify";
    out["verdict"] = json_of(v);
    std::ostringstream text;
    if (v.exceptional_case)
        text << "exceptional case " << *v.exceptional_case << "\n";
    text << report_render(v);
    emit(flags, out, text.str());
    return 0;
}

int run_sweep(const CommonFlags& flags, int n_max, int d_max, bool failing_only) {
    std::vector<TripleVerdict> verdicts = sweep_triples(n_max, d_max);
    Json out;
    out["spec_version"] = kSpecVersion;
    out["command"] = "sweep";
    out["n_max"] = n_max;
    out["d_max"] = d_max;
    Json triples = Json::array();
    Json failing = Json::array();
    std::ostringstream text;
    std::size_t holds = 0;
    for (const auto& v : verdicts) {
        if (!failing_only) triples.push_back(json_of(v));
        if (v.inequality_holds) {
            ++holds;
            continue;
        }
        failing.push_back(json_of(v));
        text << "fails: (n, d, k) = (" << v.n << ", " << v.d << ", " << v.k << ")";
        if (v.exceptional_case) text << "  exceptional case " << *v.exceptional_case;
        if (v.not_applicable) text << "  [n=2, k=1: not applicable]";
        if (v.zariski_prime_power) text << "  [k prime power: excluded for irreducible plane curves]";
        text << "\n";
    }
    if (!failing_only) out["triples"] = std::move(triples);
    out["failing"] = std::move(failing);
    text << "swept " << verdicts.size() << " triples; inequality holds for " << holds << "\n";
    emit(flags, out, text.str());
    return 0;
}

int run_construct(const CommonFlags& flags, const std::string& family, const std::string& weights,
                  long long m, long long a1, long long b1, long long m1, long long m2,
                  long long ell, long long r, std::uint64_t seed, unsigned retries, bool verify,
                  bool no_precheck) {
    ConstructOptions opts;
    opts.retries = retries;
    opts.budget = flags.budget();
    opts.precheck = !no_precheck;

    std::optional<Construction> c;
    if (family == "composite" || family == "deformed") {
        std::vector<Rational> ws = parse_weights(weights.empty() ? "1/2,1/3" : weights);
        std::vector<long long> ks;
        for (const auto& w : ws) {
            if (w.get_num() != 1)
                throw InvalidArgumentError(
                    "the CLI builds the diagonal local model, so weights must be unit fractions 1/k");
            ks.push_back(to_i64(Integer(w.get_den())));
        }
        WeightedHomogData w = diagonal_weighted_homog(ks);
        c = (family == "composite") ? construct_composite(w, m, seed, opts)
                                    : construct_deformed(w, m1, m2, seed, opts);
    } else if (family == "cusps") {
        c = construct_cusps_glc(m, a1, b1, seed, opts);
    } else if (family == "rfold") {
        c = construct_rfold(ell, r, m, seed, opts);
    } else {
        throw InvalidArgumentError("unknown family: " + family +
                                   " (expected composite|cusps|deformed|rfold)");
    }

    Json out = json_of(c->report);
    out["polynomial"] = c->F.to_string();
    std::ostringstream text;
    text << report_render(c->report);
    text << "polynomial:\n" << c->F.to_string() << "\n";

    if (verify) {
        VerificationResult result = verify_construction(*c, opts);
        unsigned attempt = 0;
        while (result.status == VerificationStatus::retry_with_new_seed && attempt < retries) {
            ++attempt;
            std::uint64_t next_seed = retry_seed(seed, 1000 + attempt);
            // rebuild with the derived seed and try again
            if (family == "composite" || family == "deformed") {
                std::vector<Rational> ws = parse_weights(weights.empty() ? "1/2,1/3" : weights);
                std::vector<long long> ks;
                for (const auto& w : ws) ks.push_back(to_i64(Integer(w.get_den())));
                WeightedHomogData w = diagonal_weighted_homog(ks);
                c = (family == "composite") ? construct_composite(w, m, next_seed, opts)
                                            : construct_deformed(w, m1, m2, next_seed, opts);
            } else if (family == "cusps") {
                c = construct_cusps_glc(m, a1, b1, next_seed, opts);
            } else {
                c = construct_rfold(ell, r, m, next_seed, opts);
            }
            result = verify_construction(*c, opts);
        }
        if (result.status != VerificationStatus::confirmed)
            throw GenericityError("verification kept failing after " + std::to_string(retries) +
                                  " reseeds");
        out = json_of(c->report);
        out["polynomial"] = c->F.to_string();
        out["verification"] = json_of(result);
        text.str("");
        text << report_render(c->report);
        text << "polynomial:\n" << c->F.to_string() << "\n";
        text << "verification: confirmed (" << result.checks.size() << " checks)\n";
        for (const auto& chk : result.checks) text << "  ok: " << chk << "\n";
    }
    emit(flags, out, text.str());
    return 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"saturated-Jacobian defect profiles of projective hypersurfaces"};
    app.require_subcommand(1);

    CommonFlags flags;

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "full analysis of one hypersurface");
    int an_n = 2;
    std::string an_poly, an_poly_file;
    bool an_irr = false;
    analyze_cmd->add_option("--n", an_n, "projective dimension n (ring has n+1 variables)")
        ->required()
        ->check(CLI::Range(2, 16));
    analyze_cmd->add_option("--poly", an_poly, "defining form, inline");
    analyze_cmd->add_option("--poly-file", an_poly_file, "file with one polynomial");
    analyze_cmd->add_flag("--assert-irreducible", an_irr,
                          "assert (do not verify) that the hypersurface is irreducible");
    add_common(analyze_cmd, flags);

    // hilbert
    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function / defect table of an ideal");
    int hi_n = 2;
    std::vector<std::string> hi_gens, hi_gen_files;
    bool hi_sat = false;
    long long hi_maxdeg = -1;
    std::string hi_ci;
    hilbert_cmd->add_option("--n", hi_n, "projective dimension n")->required()->check(CLI::Range(1, 16));
    hilbert_cmd->add_option("--gen", hi_gens, "generator (repeatable)");
    hilbert_cmd->add_option("--gen-file", hi_gen_files, "file with one generator (repeatable)");
    hilbert_cmd->add_flag("--saturate", hi_sat, "saturate the ideal first");
    hilbert_cmd->add_option("--max-degree", hi_maxdeg, "last degree to tabulate");
    hilbert_cmd->add_option("--ci", hi_ci, "closed-form oracle for a regular sequence, e.g. --ci 3,4");
    add_common(hilbert_cmd, flags);

    // alpha
    auto* alpha_cmd = app.add_subcommand("alpha", "the threshold rational alpha(n,d,k)");
    int al_n = 2, al_d = 3, al_k = 1;
    alpha_cmd->add_option("--n", al_n)->required()->check(CLI::Range(2, 1000));
    alpha_cmd->add_option("--d", al_d)->required()->check(CLI::PositiveNumber);
    alpha_cmd->add_option("--k", al_k)->required()->check(CLI::PositiveNumber);
    add_common(alpha_cmd, flags);

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "exceptional-triple classification of (n,d,k)");
    int cl_n = 2, cl_d = 3, cl_k = 1;
    classify_cmd->add_option("--n", cl_n)->required()->check(CLI::Range(2, 1000));
    classify_cmd->add_option("--d", cl_d)->required()->check(CLI::PositiveNumber);
    classify_cmd->add_option("--k", cl_k)->required()->check(CLI::PositiveNumber);
    add_common(classify_cmd, flags);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "classify all triples up to bounds");
    int sw_n = 12, sw_d = 48;
    bool sw_failing = false;
    sweep_cmd->add_option("--n-max", sw_n)->required()->check(CLI::Range(2, 64));
    sweep_cmd->add_option("--d-max", sw_d)->required()->check(CLI::Range(3, 256));
    sweep_cmd->add_flag("--failing-only", sw_failing, "emit only triples where the inequality fails");
    add_common(sweep_cmd, flags);

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "seeded example families with predictions");
    std::string co_family, co_weights;
    long long co_m = 1, co_a1 = 0, co_b1 = 0, co_m1 = 1, co_m2 = 0, co_ell = 2, co_r = 2;
    std::uint64_t co_seed = kDefaultSeed;
    unsigned co_retries = 3;
    bool co_verify = false, co_noprecheck = false;
    construct_cmd->add_option("--family", co_family, "composite|cusps|deformed|rfold")->required();
    construct_cmd->add_option("--weights", co_weights, "unit-fraction weights, e.g. 1/2,1/3");
    construct_cmd->add_option("--m", co_m, "composite/cusps/rfold parameter m");
    construct_cmd->add_option("--a1", co_a1, "cusps: degree of f1 (divisible by 2)");
    construct_cmd->add_option("--b1", co_b1, "cusps: degree of g1 (divisible by 3)");
    construct_cmd->add_option("--m1", co_m1, "deformed: base scale");
    construct_cmd->add_option("--m2", co_m2, "deformed: deformation degree");
    construct_cmd->add_option("--ell", co_ell, "rfold: half the ambient dimension");
    construct_cmd->add_option("--r", co_r, "rfold: multiplicity of the points");
    construct_cmd->add_option("--seed", co_seed, "64-bit seed (default 1729)");
    construct_cmd->add_option("--retries", co_retries, "reseed attempts for genericity failures");
    construct_cmd->add_flag("--verify", co_verify, "replay the predictions through the analyzer");
    construct_cmd->add_flag("--no-precheck", co_noprecheck, "skip the seeded-form genericity check");
    add_common(construct_cmd, flags);

    app.parse(argc, argv);

    if (analyze_cmd->parsed()) return run_analyze(flags, an_n, an_poly, an_poly_file, an_irr);
    if (hilbert_cmd->parsed())
        return run_hilbert(flags, hi_n, hi_gens, hi_gen_files, hi_sat, hi_maxdeg, hi_ci);
    if (alpha_cmd->parsed()) return run_alpha(flags, al_n, al_d, al_k);
    if (classify_cmd->parsed()) return run_classify(flags, cl_n, cl_d, cl_k);
    if (sweep_cmd->parsed()) return run_sweep(flags, sw_n, sw_d, sw_failing);
    if (construct_cmd->parsed())
        return run_construct(flags, co_family, co_weights, co_m, co_a1, co_b1, co_m1, co_m2,
                             co_ell, co_r, co_seed, co_retries, co_verify, co_noprecheck);
    return 2;
}

int emit_error(bool json, int code, const std::string& kind, const std::string& message,
               std::optional<std::size_t> position = std::nullopt) {
    if (json) {
        Json err;
        err["spec_version"] = kSpecVersion;
        Json detail;
        detail["kind"] = kind;
        detail["message"] = message;
        if (position)
            detail["position"] = *position;
        else
            detail["position"] = nullptr;
        err["error"] = std::move(detail);
        std::cout << err.dump(2) << "\n";
    } else {
        std::cerr << "error (" << kind << "): " << message << "\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    bool json = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--json") json = true;
    try {
        return dispatch(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        return emit_error(json, 2, "usage", e.what());
    } catch (const satjac::ParseError& e) {
        return emit_error(json, 2, "parse", e.what(), e.position());
    } catch (const satjac::RingMismatchError& e) {
        return emit_error(json, 2, "input", e.what());
    } catch (const satjac::InvalidArgumentError& e) {
        return emit_error(json, 2, "input", e.what());
    } catch (const satjac::BudgetExceededError& e) {
        return emit_error(json, 3, "budget", e.what());
    } catch (const satjac::HypothesisError& e) {
        return emit_error(json, 4, "hypothesis", e.what());
    } catch (const satjac::GenericityError& e) {
        return emit_error(json, 4, "genericity", e.what());
    } catch (const satjac::InternalError& e) {
        return emit_error(json, 1, "internal", e.what());
    } catch (const std::exception& e) {
        return emit_error(json, 1, "internal", e.what());
    }
}
