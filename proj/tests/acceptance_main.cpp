// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is exact (integer/rational equality); runtime limits follow
// the stated budgets.

#include <array>
#include <chrono>
#include <cstdio>
#include <sys/wait.h>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "satjac/satjac.hpp"

using namespace satjac;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 1729;  // the CLI's documented default

int failures = 0;

void report(const std::string& name, bool pass, double seconds, const std::string& detail = "") {
    std::printf("[%s] %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", name.c_str(), seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

void run(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = Clock::now();
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(name, pass, std::chrono::duration<double>(Clock::now() - t0).count(), detail);
}

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Budget wide_budget() {
    Budget b;
    b.max_spairs = 5000000;
    b.max_degree = 512;
    return b;
}

// ---- criterion 1: exceptional-triple classification ------------------------

bool criterion1(std::string& detail) {
    auto t0 = Clock::now();
    std::vector<TripleVerdict> verdicts = sweep_triples(12, 48);
    std::set<std::array<int, 3>> failing;
    for (const auto& v : verdicts) {
        if (v.inequality_holds) continue;
        if (v.n == 2 && (v.k == 1 || is_prime_power(v.k))) continue;
        failing.insert({v.n, v.d, v.k});
    }
    const std::set<std::array<int, 3>> expected = {
        {2, 6, 6}, {2, 12, 6}, {3, 3, 1}, {4, 3, 1}, {6, 3, 1}, {3, 3, 3},
        {4, 3, 3}, {5, 3, 3},  {3, 4, 2}, {3, 6, 2}, {3, 4, 4}, {4, 4, 1},
    };
    double secs = elapsed(t0);
    if (failing != expected) {
        std::ostringstream os;
        os << "failing set has " << failing.size() << " triples, expected the six families";
        detail = os.str();
        return false;
    }
    if (secs >= 1.0) {
        detail = "sweep exceeded the 1 s budget";
        return false;
    }
    return true;
}

// ---- criterion 2: Zariski torus sextic -------------------------------------

bool criterion2(std::string& detail) {
    auto t0 = Clock::now();
    WeightedHomogData w = diagonal_weighted_homog({2, 3});
    Construction c = construct_composite(w, 1, kSeed, {3, wide_budget(), true});
    AnalysisReport rep = analyze(c.F, {/*assert_irreducible=*/true, wide_budget()});

    auto verdict_of = [&](int k) -> RootVerdict {
        for (const auto& e : rep.root_exclusions)
            if (e.k == k) return e.verdict;
        throw InternalError("missing divisor");
    };
    bool ok = rep.xi == 12 && rep.profile.defect_at(4) == 1 && rep.profile.defect_at(5) == 0 &&
              rep.profile.defect_at(6) == 0 && rep.t_smooth &&
              verdict_of(6) == RootVerdict::exceptional_triple &&
              rep.spectrum.entries.at(make_rational(7, 6)) == 1;
    // independent oracle: the Tjurina scheme is the (3,4) complete intersection
    CIData ci({3, 4}, 3);
    for (long long e = 0; e <= ci_last_defect_degree(ci) + 2 && ok; ++e)
        ok = ok && (rep.xi - rep.profile.defect_at(e) == ci_hilbert(ci, e));
    ok = ok && ci_last_defect_degree(ci) == 4;
    if (!ok) {
        detail = "values diverge from the oracle (xi=" + std::to_string(rep.xi) + ")";
        return false;
    }
    if (elapsed(t0) >= 30.0) {
        detail = "exceeded the 30 s budget";
        return false;
    }
    return true;
}

// ---- criterion 3: Segre family tangent excess ------------------------------

bool criterion3(std::string& detail) {
    WeightedHomogData w = diagonal_weighted_homog({2, 3});

    // m = 2 (degree 12): direct saturation must match the (6,8) oracle, and the
    // excess (m-1)(m-2)/2 = 0 shows up as defect(12) = 0, defect(11) = 1
    Construction c2 = construct_composite(w, 2, kSeed, {3, wide_budget(), true});
    AnalysisReport rep2 = analyze(c2.F, {true, wide_budget()});
    CIData ci68({6, 8}, 3);
    bool m2_ok = rep2.xi == 48 && rep2.profile.defect_at(12) == 0 &&
                 rep2.profile.defect_at(11) == 1 && rep2.t_smooth;
    for (long long e = 0; e <= ci_last_defect_degree(ci68) + 2 && m2_ok; ++e)
        m2_ok = m2_ok && (rep2.xi - rep2.profile.defect_at(e) == ci_hilbert(ci68, e));
    m2_ok = m2_ok && expected_dimension(DimensionFamily::segre_tangent_excess, {2}) == 0;
    if (!m2_ok) {
        detail = "m = 2 direct/oracle agreement failed";
        return false;
    }

    // m = 3: oracle side is mandatory; excess (2)(1)/2 = 1 at degree 18
    CIData ci912({9, 12}, 3);
    bool m3_oracle_ok =
        ci_last_defect_degree(ci912) == 18 &&
        108 - ci_hilbert(ci912, 18) == expected_dimension(DimensionFamily::segre_tangent_excess, {3});
    if (!m3_oracle_ok) {
        detail = "m = 3 oracle values are wrong";
        return false;
    }

    // m = 3 direct Groebner confirmation: stretch goal, 10-minute wall budget
    Budget stretch = wide_budget();
    stretch.deadline = Clock::now() + std::chrono::seconds(570);
    try {
        Construction c3 = construct_composite(w, 3, kSeed, {3, stretch, true});
        AnalysisReport rep3 = analyze(c3.F, {true, stretch});
        bool m3_ok = rep3.xi == 108 && rep3.profile.defect_at(18) == 1 &&
                     rep3.profile.defect_at(19) == 0 && !rep3.t_smooth;
        for (long long e = 0; e <= 20 && m3_ok; ++e)
            m3_ok = m3_ok && (rep3.xi - rep3.profile.defect_at(e) == ci_hilbert(ci912, e));
        if (!m3_ok) {
            detail = "m = 3 direct saturation disagrees with the oracle";
            return false;
        }
        detail = "m = 3 direct confirmation completed";
    } catch (const BudgetExceededError&) {
        detail = "m = 3 stretch goal skipped (10-minute budget tripped); m = 2 passed";
    }
    return true;
}

// ---- criterion 4: lowest spectrum number for composites --------------------

bool criterion4(std::string& detail) {
    auto t0 = Clock::now();
    WeightedHomogData w = diagonal_weighted_homog({2, 3});

    // m = 1: n_{5/6} = 6 - ci_hilbert((3,2), 2) = 1, cross-checked on the seeded ideal
    Construction c1 = construct_composite(w, 1, kSeed, {3, wide_budget(), true});
    CIData ci32({3, 2}, 3);
    long long oracle1 = 6 - ci_hilbert(ci32, 2);
    Ideal pts1(c1.F.ring(), c1.gs);
    long long groebner1 = 6 - hilbert_function(saturation_irrelevant(pts1, wide_budget()), 2);
    bool ok = oracle1 == 1 && groebner1 == 1 && c1.report.predicted_n_alpha_min == 1;

    // m = 2: n_{5/6} = 24 - ci_hilbert((6,4), 7) = 1
    Construction c2 = construct_composite(w, 2, kSeed, {3, wide_budget(), true});
    CIData ci64({6, 4}, 3);
    long long oracle2 = 24 - ci_hilbert(ci64, 7);
    Ideal pts2(c2.F.ring(), c2.gs);
    Ideal pts2_sat = saturation_irrelevant(pts2, wide_budget());
    long long groebner2 = 24 - hilbert_function(pts2_sat, 7);
    ok = ok && oracle2 == 1 && groebner2 == oracle2 &&
         hilbert_function(pts2, 7, wide_budget()) == ci_hilbert(ci64, 7) &&
         c2.report.predicted_n_alpha_min == oracle2;
    if (!ok) {
        detail = "n_alpha_min mismatch (m=1: " + std::to_string(groebner1) +
                 ", m=2: " + std::to_string(groebner2) + ")";
        return false;
    }
    if (elapsed(t0) >= 60.0) {
        detail = "exceeded the 60 s budget";
        return false;
    }
    return true;
}

// ---- criterion 5: cusp-family threshold ------------------------------------

bool criterion5(std::string& detail) {
    auto t0 = Clock::now();
    for (long long m : {5, 6, 7}) {
        for (auto [a1, b1] : std::vector<std::pair<long long, long long>>{{0, 0}, {2, 3}, {4, 6}}) {
            long long a2 = 3 * m - a1 / 2;
            long long b2 = 2 * m - b1 / 3;
            bool predicted_tsmooth = !(a1 / 2 + 2 * (b1 / 3) <= m - 3);
            bool oracle_tsmooth = ci_defect(CIData({a2, 2 * b2}, 3), 6 * m) == 0;
            Construction c = construct_cusps_glc(m, a1, b1, kSeed, {3, wide_budget(), false});
            if (predicted_tsmooth != oracle_tsmooth ||
                c.report.tsmooth_prediction != predicted_tsmooth) {
                detail = "threshold mismatch at m=" + std::to_string(m);
                return false;
            }
            bool nonconstant = *c.report.nonconstant_alexander_prediction;
            bool nonconstant_oracle = ci_defect(CIData({a2, b2}, 3), 5 * m - 3) > 0;
            if (nonconstant != (a1 == 0 && b1 == 0) || nonconstant != nonconstant_oracle) {
                detail = "Alexander prediction mismatch at m=" + std::to_string(m);
                return false;
            }
        }
    }
    if (elapsed(t0) >= 5.0) {
        detail = "exceeded the 5 s budget";
        return false;
    }
    return true;
}

// ---- criterion 6: always-on property suites --------------------------------

bool criterion6(std::string& detail) {
    auto t0 = Clock::now();
    Budget budget = wide_budget();

    // defect monotonicity on 100 random saturated point ideals (n = 2, <= 8 points)
    {
        RingPtr R = make_ring(3);
        for (int trial = 0; trial < 100; ++trial) {
            SplitMix64 rng(derive_seed(600, static_cast<std::uint64_t>(trial)));
            int count = 1 + static_cast<int>(rng.next() % 8);
            std::set<std::pair<long, long>> coords;
            while (static_cast<int>(coords.size()) < count)
                coords.insert({static_cast<long>(rng.next() % 19) - 9,
                               static_cast<long>(rng.next() % 19) - 9});
            Ideal acc = Ideal::zero(R);
            bool first = true;
            for (const auto& [a, b] : coords) {
                Ideal pt(R, {Polynomial::variable(R, 0) - Polynomial::variable(R, 2).scaled(Rational(a)),
                             Polynomial::variable(R, 1) - Polynomial::variable(R, 2).scaled(Rational(b))});
                acc = first ? pt : ideal_intersection(acc, pt, budget);
                first = false;
            }
            DefectProfile p = defect_profile(acc, 12, budget);
            if (p.xi != count) {
                detail = "point ideal has wrong length";
                return false;
            }
            long long prev = p.xi;
            for (long long e = 0; e <= 12; ++e) {
                if (p.defect_at(e) > prev || p.defect_at(e) < 0) {
                    detail = "defect not nonincreasing";
                    return false;
                }
                prev = p.defect_at(e);
            }
        }
    }

    // saturation idempotence and containment on 50 random ideals
    {
        RingPtr R = make_ring(3);
        for (int trial = 0; trial < 50; ++trial) {
            SplitMix64 rng(derive_seed(601, static_cast<std::uint64_t>(trial)));
            std::vector<Polynomial> gens;
            int count = 1 + static_cast<int>(rng.next() % 3);
            for (int i = 0; i < count; ++i)
                gens.push_back(random_general_form(R, 1 + static_cast<int>(rng.next() % 3),
                                                   derive_seed(602 + static_cast<std::uint64_t>(trial),
                                                               static_cast<std::uint64_t>(i))));
            Ideal I(R, gens);
            Ideal S = saturation_irrelevant(I, budget);
            for (const auto& g : I.generators())
                if (!ideal_contains(S, g, budget)) {
                    detail = "I not contained in its saturation";
                    return false;
                }
            if (!ideal_equal(saturation_irrelevant(S, budget), S, budget)) {
                detail = "saturation not idempotent";
                return false;
            }
        }
    }

    // Euler relation on 100 random homogeneous polynomials
    {
        for (int trial = 0; trial < 100; ++trial) {
            int n = 2 + trial % 3;
            RingPtr R = make_ring(n + 1);
            int d = 1 + trial % 5;
            Polynomial f = random_general_form(R, d, derive_seed(603, static_cast<std::uint64_t>(trial)));
            Polynomial acc = Polynomial::zero(R);
            for (int i = 0; i <= n; ++i)
                acc = acc + Polynomial::variable(R, i) * f.derivative(i);
            if (!(acc == f.scaled(Rational(d)))) {
                detail = "Euler relation failed";
                return false;
            }
        }
    }

    // CI oracle vs Groebner Hilbert functions + Bezout on 50 regular sequences
    {
        for (int trial = 0; trial < 50; ++trial) {
            int n = (trial % 3 == 2) ? 3 : 2;  // two thirds planar, one third in P^3
            RingPtr R = make_ring(n + 1);
            SplitMix64 rng(derive_seed(604, static_cast<std::uint64_t>(trial)));
            std::vector<long long> degrees;
            for (int i = 0; i < n; ++i)
                degrees.push_back(1 + static_cast<long long>(rng.next() % (n == 2 ? 6 : 4)));
            std::vector<Polynomial> gens;
            for (unsigned attempt = 0;; ++attempt) {
                gens.clear();
                std::uint64_t s = derive_seed(605 + attempt, static_cast<std::uint64_t>(trial));
                for (int i = 0; i < n; ++i)
                    gens.push_back(random_general_form(R, static_cast<int>(degrees[static_cast<std::size_t>(i)]),
                                                       derive_seed(s, static_cast<std::uint64_t>(i))));
                if (krull_dimension(Ideal(R, gens), budget) == 1) break;
                if (attempt > 8) {
                    detail = "could not seed a regular sequence";
                    return false;
                }
            }
            Ideal S = saturation_irrelevant(Ideal(R, gens), budget);
            CIData ci(degrees, n + 1);
            for (long long e = 0; e <= ci_last_defect_degree(ci) + 2; ++e)
                if (hilbert_function(S, e, budget) != ci_hilbert(ci, e)) {
                    detail = "oracle/Groebner Hilbert mismatch";
                    return false;
                }
            if (scheme_length(S, budget) != ci_total_length(ci)) {
                detail = "Bezout length mismatch";
                return false;
            }
        }
    }

    if (elapsed(t0) >= 120.0) {
        detail = "exceeded the 2-minute budget";
        return false;
    }
    return true;
}

// ---- criterion 7: interface determinism ------------------------------------

std::string capture(const std::string& args) {
    std::string cmd = std::string(SATJAC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw InternalError("popen failed");
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
        throw InternalError("cli command failed: " + args);
    return out;
}

bool criterion7(std::string& detail) {
    WeightedHomogData w = diagonal_weighted_homog({2, 3});
    std::string torus = construct_composite(w, 1, kSeed).F.to_string();
    std::vector<std::string> commands = {
        "sweep --n-max 12 --d-max 48 --json",
        "analyze --n 2 --poly '" + torus + "' --assert-irreducible --json",
        "classify --n 2 --d 6 --k 6 --json",
        "alpha --n 2 --d 6 --k 6 --json",
        "hilbert --n 2 --ci 3,4 --json",
        "hilbert --n 2 --ci 6,8 --json",
        "hilbert --n 2 --ci 9,12 --json",
        "construct --family composite --weights 1/2,1/3 --m 1 --verify --json",
        "construct --family composite --weights 1/2,1/3 --m 2 --json",
        "construct --family cusps --m 6 --a1 2 --b1 3 --json",
        "construct --family rfold --ell 2 --r 2 --m 5 --json",
    };
    for (const auto& cmd : commands) {
        std::string a = capture(cmd);
        std::string b = capture(cmd);
        if (a.empty() || a != b) {
            detail = "output differs for: " + cmd;
            return false;
        }
    }
    detail = "the Hodge-side quantities (exact Alexander polynomials, eigenspace dimensions) are intentionally covered only through defect bounds";
    return true;
}

}  // namespace

int main() {
    run("criterion 1: exceptional-triple sweep (n<=12, d<=48)", criterion1);
    run("criterion 2: Zariski torus sextic", criterion2);
    run("criterion 3: Segre tangent excess (m=2 direct, m=3 oracle + stretch)", criterion3);
    run("criterion 4: lowest spectrum number for composites", criterion4);
    run("criterion 5: cusp-family threshold grid", criterion5);
    run("criterion 6: property suites", criterion6);
    run("criterion 7: interface determinism", criterion7);
    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
