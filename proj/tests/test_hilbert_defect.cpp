#include <catch2/catch_amalgamated.hpp>

#include "satjac/ci.hpp"
#include "satjac/defect.hpp"
#include "satjac/parse.hpp"
#include "satjac/random_form.hpp"

using namespace satjac;

namespace {

// a seeded regular sequence of the given degrees (reseeds on degeneration)
std::vector<Polynomial> regular_sequence(const RingPtr& ring, const std::vector<long long>& degrees,
                                         std::uint64_t seed) {
    for (unsigned attempt = 0;; ++attempt) {
        std::uint64_t s = attempt == 0 ? seed : retry_seed(seed, attempt);
        std::vector<Polynomial> gens;
        for (std::size_t i = 0; i < degrees.size(); ++i)
            gens.push_back(random_general_form(ring, static_cast<int>(degrees[i]),
                                               derive_seed(s, static_cast<std::uint64_t>(i))));
        if (degrees.size() + 1 == static_cast<std::size_t>(ring->num_vars())) {
            if (krull_dimension(Ideal(ring, gens)) == 1) return gens;
        } else {
            return gens;
        }
        REQUIRE(attempt < 8);
    }
}

// an ideal of up to `count` distinct rational points of P^2 (intersection of point ideals)
Ideal random_point_ideal(const RingPtr& ring, int count, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::array<long, 3>> points;
    while (static_cast<int>(points.size()) < count) {
        std::array<long, 3> p = {static_cast<long>(rng.next() % 19) - 9,
                                 static_cast<long>(rng.next() % 19) - 9, 1};
        bool dup = false;
        for (const auto& q : points) dup = dup || q == p;
        if (!dup) points.push_back(p);
    }
    Ideal acc = Ideal::zero(ring);
    bool first = true;
    for (const auto& p : points) {
        std::vector<Polynomial> lf;
        lf.push_back(Polynomial::variable(ring, 0) - Polynomial::variable(ring, 2).scaled(Rational(p[0])));
        lf.push_back(Polynomial::variable(ring, 1) - Polynomial::variable(ring, 2).scaled(Rational(p[1])));
        Ideal pt(ring, lf);
        acc = first ? pt : ideal_intersection(acc, pt);
        first = false;
    }
    return acc;
}

}  // namespace

TEST_CASE("hilbert function values") {
    RingPtr R = make_ring(3);
    CHECK(hilbert_function(Ideal::zero(R), 4) == 15);
    CHECK(hilbert_function(Ideal(R, {parse_poly("x0", R)}), 3) == 4);

    // complete intersection of degrees (2,3): series expands to 1,3,5,6,6,6
    std::vector<Polynomial> gens = regular_sequence(R, {2, 3}, 41);
    Ideal I(R, gens);
    const long long expected[] = {1, 3, 5, 6, 6, 6};
    for (long long e = 0; e <= 5; ++e) CHECK(hilbert_function(I, e) == expected[e]);
    CHECK(hilbert_function(I, -1) == 0);
}

TEST_CASE("hilbert function splits the ambient dimension") {
    RingPtr R = make_ring(3);
    for (std::uint64_t s = 0; s < 10; ++s) {
        std::vector<Polynomial> gens;
        SplitMix64 rng(6200 + s);
        for (int i = 0; i < 2; ++i)
            gens.push_back(random_general_form(R, 1 + static_cast<int>(rng.next() % 3),
                                               derive_seed(s, static_cast<std::uint64_t>(i) + 40)));
        Ideal I(R, gens);
        const auto& gb = I.groebner();
        for (long long e = 0; e <= 7; ++e) {
            // count degree-e monomials inside the leading-term ideal directly
            long long inside = 0;
            for (const Monomial& m : monomials_of_degree(R, static_cast<int>(e)))
                for (const auto& g : gb.elements)
                    if (g.leading_term().mono.divides(m)) {
                        ++inside;
                        break;
                    }
            CHECK(hilbert_function(I, e) + inside == graded_dim(R, e));
        }
    }
}

TEST_CASE("scheme length") {
    RingPtr R = make_ring(3);
    CHECK(scheme_length(Ideal(R, {parse_poly("x0", R), parse_poly("x1", R)})) == 1);
    CHECK(scheme_length(Ideal(R, regular_sequence(R, {2, 3}, 43))) == 6);

    // torus sextic Tjurina scheme: 6 cusps of Tjurina number 2
    Polynomial f2 = random_general_form(R, 2, derive_seed(99, 0));
    Polynomial f3 = random_general_form(R, 3, derive_seed(99, 1));
    Polynomial F = f2.pow(3) + f3.pow(2);
    Ideal Jsat = saturation_irrelevant(jacobian_ideal(F));
    CHECK(scheme_length(Jsat) == 12);

    // dimension mismatch is an error
    CHECK_THROWS_AS(scheme_length(Ideal(R, {parse_poly("x0", R)})), HypothesisError);
    CHECK_THROWS_AS(scheme_length(Ideal::zero(R)), HypothesisError);
}

TEST_CASE("defect profiles") {
    RingPtr R = make_ring(3);
    // (3,4): socle degree 4, one defect left at the top
    Ideal ci34(R, regular_sequence(R, {3, 4}, 47));
    DefectProfile p = defect_profile(ci34, 6);
    CHECK(p.xi == 12);
    CHECK(p.defect_at(4) == 1);
    CHECK(p.defect_at(5) == 0);
    CHECK(p.last_positive_degree == 4);

    // one reduced point: no defect anywhere
    DefectProfile pt = defect_profile(Ideal(R, {parse_poly("x0", R), parse_poly("x1", R)}), 5);
    CHECK(pt.xi == 1);
    for (long long e = 0; e <= 5; ++e) CHECK(pt.defect_at(e) == 0);
    CHECK_FALSE(pt.last_positive_degree.has_value());

    // (6,8): socle degree 11 (the m = 2 cusp scheme)
    CIData ci68({6, 8}, 3);
    CHECK(ci_defect(ci68, 11) == 1);
    CHECK(ci_defect(ci68, 12) == 0);
    CHECK(ci_last_defect_degree(ci68) == 11);
}

TEST_CASE("defect monotonicity on random point schemes") {
    RingPtr R = make_ring(3);
    for (std::uint64_t s = 0; s < 25; ++s) {
        Ideal pts = random_point_ideal(R, 1 + static_cast<int>(s % 8), 6400 + s);
        DefectProfile p = defect_profile(pts, 12);
        long long prev = p.xi;
        for (long long e = 0; e <= 12; ++e) {
            CHECK(p.defect_at(e) <= prev);
            CHECK(p.defect_at(e) >= 0);
            prev = p.defect_at(e);
        }
    }
}

TEST_CASE("ci oracle closed form") {
    CIData ci23({2, 3}, 3);
    CHECK(ci_hilbert(ci23, 4) == 6);
    CHECK(ci_last_defect_degree(ci23) == 2);
    CHECK(ci_hilbert(ci23, 2) == 5);  // defect 1 at the socle

    CIData ci34({3, 4}, 3);
    long long last = -1;
    for (long long e = 0; e <= 8; ++e)
        if (ci_hilbert(ci34, e) < 12) last = e;
    CHECK(last == 4);
    CHECK(ci_last_defect_degree(ci34) == 4);

    // single hypersurface factor: h grows without bound (cross-check values)
    CIData hyp({3}, 3);
    CHECK(ci_hilbert(hyp, 0) == 1);
    CHECK(ci_hilbert(hyp, 2) == 6);
    CHECK(ci_hilbert(hyp, 3) == 9);
    CHECK(ci_hilbert(hyp, 10) == graded_dim(make_ring(3), 10) - graded_dim(make_ring(3), 7));

    // the paper's composite-family formula: degrees d*w_i give socle d*sum(w) - n - 1
    CIData torus({3, 2}, 3);
    CHECK(ci_last_defect_degree(torus) == 2);  // 6*(5/6) - 3
    CIData segre2({6, 8}, 3);
    CHECK(ci_last_defect_degree(segre2) == 11);

    CHECK_THROWS_AS(ci_total_length(CIData({2}, 3)), HypothesisError);
    CHECK_THROWS_AS(CIData({2, 3, 4, 5}, 3), InvalidArgumentError);
}

TEST_CASE("ci oracle agrees with the Groebner route on regular sequences") {
    for (std::uint64_t s = 0; s < 12; ++s) {
        int n = 2 + static_cast<int>(s % 2);
        RingPtr R = make_ring(n + 1);
        SplitMix64 rng(6500 + s);
        std::vector<long long> degrees;
        for (int i = 0; i < n; ++i)
            degrees.push_back(1 + static_cast<long long>(rng.next() % (n == 2 ? 5 : 3)));
        Ideal I(R, regular_sequence(R, degrees, derive_seed(6500, s)));
        Ideal S = saturation_irrelevant(I);
        CIData ci(degrees, n + 1);
        for (long long e = 0; e <= ci_last_defect_degree(ci) + 2; ++e)
            CHECK(hilbert_function(S, e) == ci_hilbert(ci, e));
        // Bezout
        CHECK(scheme_length(S) == ci_total_length(ci));
    }
}
