#pragma once

#include <bit>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "satjac/groebner.hpp"
#include "satjac/hilbert_numerator.hpp"

namespace satjac {

/// Homogeneous ideal: a generator list plus a write-once cache for the reduced
/// Groebner basis (and the Hilbert numerator derived from it). Concurrent
/// readers may race to fill the cache; results are deterministic so any winner
/// stores the same value.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> generators)
        : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
        for (auto& g : generators) {
            require_same_ring(ring_, g.ring());
            if (g.is_zero()) continue;
            if (!g.homogeneity().is_homogeneous)
                throw InvalidArgumentError("ideal generators must be homogeneous");
            gens_.push_back(std::move(g));
        }
    }

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    const GroebnerBasis& groebner(const Budget& budget = Budget{}) const {
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            if (cache_->gb) return *cache_->gb;
        }
        auto gb = std::make_shared<const GroebnerBasis>(reduced_groebner(ring_, gens_, budget));
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (!cache_->gb) cache_->gb = std::move(gb);
        return *cache_->gb;
    }

    /// Numerator N(t) of the Hilbert series N(t)/(1-t)^{num_vars} of R/I,
    /// computed from the leading-term ideal of the reduced basis.
    const std::vector<Integer>& hilbert_numerator(const Budget& budget = Budget{}) const {
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            if (cache_->numerator) return *cache_->numerator;
        }
        const GroebnerBasis& gb = groebner(budget);
        std::vector<Monomial> lts;
        lts.reserve(gb.elements.size());
        for (const auto& g : gb.elements) lts.push_back(g.leading_term().mono);
        auto num = std::make_shared<const std::vector<Integer>>(
            detail::hilbert_numerator_of(std::move(lts)));
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (!cache_->numerator) cache_->numerator = std::move(num);
        return *cache_->numerator;
    }

    /// Used by operations that already know the reduced basis.
    static Ideal from_groebner(GroebnerBasis gb) {
        Ideal I(gb.ring, gb.elements);
        I.cache_->gb = std::make_shared<const GroebnerBasis>(std::move(gb));
        return I;
    }

private:
    struct Cache {
        std::mutex mu;
        std::shared_ptr<const GroebnerBasis> gb;
        std::shared_ptr<const std::vector<Integer>> numerator;
    };

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

/// Ideal generated by the n+1 partial derivatives of a homogeneous form of
/// degree >= 1.
inline Ideal jacobian_ideal(const Polynomial& f) {
    Homogeneity h = f.homogeneity();
    if (!h.is_homogeneous) throw HypothesisError("jacobian_ideal: input is not homogeneous");
    if (!h.degree || *h.degree < 1)
        throw HypothesisError("jacobian_ideal: input is constant");
    std::vector<Polynomial> partials;
    for (int i = 0; i < f.ring()->num_vars(); ++i) partials.push_back(f.derivative(i));
    return Ideal(f.ring(), std::move(partials));
}

inline bool is_unit_ideal(const Ideal& I, const Budget& budget = Budget{}) {
    const auto& gb = I.groebner(budget);
    return gb.elements.size() == 1 && gb.elements[0].total_degree() == 0;
}

inline bool ideal_equal(const Ideal& a, const Ideal& b, const Budget& budget = Budget{}) {
    require_same_ring(a.ring(), b.ring());
    return a.groebner(budget) == b.groebner(budget);
}

inline bool ideal_contains(const Ideal& I, const Polynomial& f, const Budget& budget = Budget{}) {
    return normal_form(f, I.groebner(budget)).is_zero();
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), std::move(gens));
}

namespace detail {

/// Base-ring polynomial -> integer polynomial over the extended ring with the
/// auxiliary variable at index 0.
inline ZPoly zpoly_embed(const Polynomial& p, Exponent t_power) {
    ZPoly base = zpoly_from(p, OrderKind::grevlex);
    ZPoly out;
    out.sugar = base.sugar + static_cast<int>(t_power);
    out.terms.reserve(base.terms.size());
    for (const auto& t : base.terms) {
        std::vector<Exponent> e;
        e.reserve(t.mono.num_vars() + 1);
        e.push_back(t_power);
        e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
        out.terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    sort_zpoly(out, OrderKind::elim_first);
    return out;
}

inline Polynomial poly_unembed(const RingPtr& ring, const ZPoly& z) {
    std::vector<Term> terms;
    terms.reserve(z.terms.size());
    for (const auto& t : z.terms) {
        std::vector<Exponent> e(t.mono.exponents().begin() + 1, t.mono.exponents().end());
        terms.push_back({Monomial(std::move(e)), Rational(t.coeff)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

/// Runs an elimination-order Buchberger and returns the auxiliary-variable-free
/// elements mapped back to the base ring.
inline std::vector<Polynomial> eliminate_first_var(const RingPtr& ring, std::vector<ZPoly> gens,
                                                   const Budget& budget) {
    std::vector<ZPoly> basis = buchberger(std::move(gens), OrderKind::elim_first, budget);
    basis = interreduce(std::move(basis), OrderKind::elim_first);
    std::vector<Polynomial> out;
    for (const auto& z : basis) {
        bool has_t = false;
        for (const auto& t : z.terms)
            if (t.mono.exponent(0) > 0) {
                has_t = true;
                break;
            }
        if (!has_t) out.push_back(poly_unembed(ring, z));
    }
    return out;
}

inline Polynomial permute_vars(const Polynomial& p, const std::vector<std::size_t>& perm) {
    std::vector<Term> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) terms.push_back({t.mono.permuted(perm), t.coeff});
    return Polynomial::from_terms(p.ring(), std::move(terms));
}

inline Polynomial divide_by_var_power(const Polynomial& p, std::size_t var) {
    Exponent k = 0;
    bool first = true;
    for (const auto& t : p.terms()) {
        k = first ? t.mono.exponent(var) : std::min(k, t.mono.exponent(var));
        first = false;
    }
    if (k == 0) return p;
    std::vector<Term> terms;
    terms.reserve(p.term_count());
    Monomial d = Monomial::variable(static_cast<std::size_t>(p.ring()->num_vars()), var, k);
    for (const auto& t : p.terms()) terms.push_back({t.mono.divide(d), t.coeff});
    return Polynomial::from_terms(p.ring(), std::move(terms));
}

}  // namespace detail

/// A ∩ B via the auxiliary-variable method: eliminate t from t·A + (1-t)·B.
inline Ideal ideal_intersection(const Ideal& a, const Ideal& b, const Budget& budget = Budget{}) {
    require_same_ring(a.ring(), b.ring());
    if (a.generators().empty() || b.generators().empty()) return Ideal::zero(a.ring());
    if (ideal_equal(a, b, budget)) return Ideal::from_groebner(a.groebner(budget));
    if (is_unit_ideal(a, budget)) return Ideal::from_groebner(b.groebner(budget));
    if (is_unit_ideal(b, budget)) return Ideal::from_groebner(a.groebner(budget));

    using namespace detail;
    std::vector<ZPoly> gens;
    for (const auto& g : a.generators()) gens.push_back(zpoly_embed(g, 1));
    for (const auto& h : b.generators()) {
        ZPoly e0 = zpoly_embed(h, 0);
        ZPoly e1 = zpoly_embed(h, 1);
        // h - t*h
        ZPoly diff = zp_combine(Integer(1), e0, Integer(1),
                                Monomial(static_cast<std::size_t>(h.ring()->num_vars()) + 1), e1,
                                OrderKind::elim_first);
        diff.sugar = e1.sugar;
        gens.push_back(std::move(diff));
    }
    std::vector<Polynomial> eliminated = eliminate_first_var(a.ring(), std::move(gens), budget);
    return Ideal::from_groebner(reduced_groebner(a.ring(), eliminated, budget));
}

namespace detail {

/// I : x_var^inf for homogeneous I. Variables are permuted so the target sits
/// last, where a grevlex basis saturates by dividing each element by the
/// largest power of the last variable it contains.
inline Ideal saturate_by_variable(const Ideal& I, int var, const Budget& budget) {
    const RingPtr& ring = I.ring();
    auto nv = static_cast<std::size_t>(ring->num_vars());
    auto v = static_cast<std::size_t>(var);
    if (v >= nv) throw InvalidArgumentError("variable index out of range");

    bool last = (v == nv - 1);
    std::vector<std::size_t> perm(nv);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    if (!last) std::swap(perm[v], perm[nv - 1]);

    const GroebnerBasis* gb = nullptr;
    GroebnerBasis permuted_gb;
    if (last) {
        gb = &I.groebner(budget);
    } else {
        std::vector<Polynomial> permuted;
        for (const auto& g : I.generators()) permuted.push_back(permute_vars(g, perm));
        permuted_gb = reduced_groebner(ring, permuted, budget);
        gb = &permuted_gb;
    }

    bool any_divided = false;
    std::vector<Polynomial> stripped;
    for (const auto& g : gb->elements) {
        Polynomial s = divide_by_var_power(g, nv - 1);
        any_divided = any_divided || !(s == g);
        stripped.push_back(std::move(s));
    }
    if (!any_divided) {
        // nothing was saturated away: the result is I itself
        return last ? Ideal::from_groebner(*gb) : Ideal::from_groebner(I.groebner(budget));
    }

    if (last) {
        // the stripped set is still a basis for this order; interreduce only
        std::vector<ZPoly> zs;
        for (const auto& s : stripped) zs.push_back(zpoly_from(s, OrderKind::grevlex));
        zs = interreduce(std::move(zs), OrderKind::grevlex);
        GroebnerBasis out{ring, {}};
        for (const auto& z : zs) out.elements.push_back(poly_from_zpoly_monic(ring, z));
        return Ideal::from_groebner(std::move(out));
    }
    for (auto& s : stripped) s = permute_vars(s, perm);
    // in the ring's own order the permuted-back set is only a generating set
    return Ideal::from_groebner(reduced_groebner(ring, stripped, budget));
}

/// I : g^inf by Rabinowitsch elimination: (I·R[t] + (t·g - 1)) ∩ R. Works for
/// any nonzero g; the route cross-checked against the grevlex strip trick.
inline Ideal saturate_rabinowitsch(const Ideal& I, const Polynomial& g, const Budget& budget) {
    auto nv = static_cast<std::size_t>(I.ring()->num_vars());
    std::vector<ZPoly> gens;
    for (const auto& p : I.generators()) gens.push_back(zpoly_embed(p, 0));
    ZPoly tg = zpoly_embed(g, 1);
    tg.terms.push_back({Monomial(nv + 1), Integer(-1)});
    gens.push_back(std::move(tg));
    std::vector<Polynomial> eliminated = eliminate_first_var(I.ring(), std::move(gens), budget);
    for (const auto& e : eliminated)
        if (!e.homogeneity().is_homogeneous)
            throw InvalidArgumentError(
                "saturation by a non-homogeneous polynomial left the graded category");
    return Ideal::from_groebner(reduced_groebner(I.ring(), eliminated, budget));
}

}  // namespace detail

/// I : g^inf. Monomial g: saturate variable by variable. General g: one
/// Rabinowitsch elimination, (I·R[t] + (t·g - 1)) ∩ R.
inline Ideal colon_saturate_by(const Ideal& I, const Polynomial& g, const Budget& budget = Budget{}) {
    require_same_ring(I.ring(), g.ring());
    if (g.is_zero()) throw InvalidArgumentError("saturation by zero");
    if (I.generators().empty()) return Ideal::zero(I.ring());
    if (g.term_count() == 1) {
        Ideal acc = I;
        const Monomial& m = g.leading_term().mono;
        for (std::size_t v = 0; v < m.num_vars(); ++v)
            if (m.exponent(v) > 0) acc = detail::saturate_by_variable(acc, static_cast<int>(v), budget);
        if (m.is_unit()) return Ideal::from_groebner(acc.groebner(budget));
        return acc;
    }
    return detail::saturate_rabinowitsch(I, g, budget);
}

/// I^sat = ∩_i (I : x_i^inf): removes exactly the irrelevant component.
inline Ideal saturation_irrelevant(const Ideal& I, const Budget& budget = Budget{}) {
    if (I.generators().empty()) return Ideal::zero(I.ring());
    Ideal acc = detail::saturate_by_variable(I, 0, budget);
    for (int v = 1; v < I.ring()->num_vars(); ++v) {
        Ideal next = detail::saturate_by_variable(I, v, budget);
        acc = ideal_intersection(acc, next, budget);
    }
    return acc;
}

/// Krull dimension of R/I (affine cone), from the leading-term ideal: the
/// largest |U| over variable subsets U containing no leading monomial's full
/// support. Unit ideal gives -1.
inline int krull_dimension(const Ideal& I, const Budget& budget = Budget{}) {
    const auto& gb = I.groebner(budget);
    int nv = I.ring()->num_vars();
    if (gb.elements.empty()) return nv;
    std::vector<Monomial> lts;
    for (const auto& g : gb.elements) {
        if (g.leading_term().mono.is_unit()) return -1;
        lts.push_back(g.leading_term().mono);
    }
    int best = 0;
    for (unsigned mask = 0; mask < (1u << nv); ++mask) {
        bool ok = true;
        for (const auto& m : lts) {
            bool contained = true;
            for (int i = 0; i < nv && contained; ++i)
                if (m.exponent(static_cast<std::size_t>(i)) > 0 && !(mask & (1u << i)))
                    contained = false;
            if (contained) {
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

}  // namespace satjac
