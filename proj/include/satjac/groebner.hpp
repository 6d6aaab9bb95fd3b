#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "satjac/budget.hpp"
#include "satjac/polynomial.hpp"

namespace satjac {

/// Reduced Groebner basis: monic elements, no leading term divides another,
/// tails fully reduced, sorted ascending by leading monomial. Unique for a
/// given ideal and order.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial> elements;

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return a.elements == b.elements;
    }
};

namespace detail {

enum class OrderKind { grevlex, elim_first };

inline int mono_cmp(OrderKind kind, const Monomial& a, const Monomial& b) {
    return kind == OrderKind::grevlex ? grevlex_cmp(a, b) : elim_first_cmp(a, b);
}

/// Integer-coefficient working polynomial: primitive content, positive leading
/// coefficient, terms descending under the engine's order.
struct ZTerm {
    Monomial mono;
    Integer coeff;

    friend bool operator==(const ZTerm& a, const ZTerm& b) {
        return a.mono == b.mono && a.coeff == b.coeff;
    }
};

struct ZPoly {
    std::vector<ZTerm> terms;
    int sugar = 0;

    bool is_zero() const { return terms.empty(); }
    const Monomial& lm() const { return terms.front().mono; }
    const Integer& lc() const { return terms.front().coeff; }
    int max_term_degree() const {
        int d = 0;
        for (const auto& t : terms) d = std::max(d, static_cast<int>(t.mono.degree()));
        return d;
    }
};

inline void sort_zpoly(ZPoly& p, OrderKind kind) {
    std::sort(p.terms.begin(), p.terms.end(),
              [&](const ZTerm& a, const ZTerm& b) { return mono_cmp(kind, a.mono, b.mono) > 0; });
}

/// Divide out the integer content and normalize the leading sign to +.
inline void make_primitive(ZPoly& p) {
    if (p.terms.empty()) return;
    Integer g = 0;
    for (const auto& t : p.terms) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(p.terms.front().coeff) < 0) g = -g;
    if (g != 1) {
        for (auto& t : p.terms) {
            Integer q;
            mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
            t.coeff = std::move(q);
        }
    }
}

/// a*p - b*(m*q), merged in one pass. Inputs sorted; output sorted.
inline ZPoly zp_combine(const Integer& a, const ZPoly& p, const Integer& b, const Monomial& m,
                        const ZPoly& q, OrderKind kind) {
    ZPoly out;
    out.terms.reserve(p.terms.size() + q.terms.size());
    std::size_t i = 0, j = 0;
    while (i < p.terms.size() && j < q.terms.size()) {
        Monomial qm = q.terms[j].mono * m;
        int c = mono_cmp(kind, p.terms[i].mono, qm);
        if (c > 0) {
            out.terms.push_back({p.terms[i].mono, a * p.terms[i].coeff});
            ++i;
        } else if (c < 0) {
            out.terms.push_back({std::move(qm), -b * q.terms[j].coeff});
            ++j;
        } else {
            Integer s = a * p.terms[i].coeff - b * q.terms[j].coeff;
            if (s != 0) out.terms.push_back({std::move(qm), std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < p.terms.size(); ++i) out.terms.push_back({p.terms[i].mono, a * p.terms[i].coeff});
    for (; j < q.terms.size(); ++j)
        out.terms.push_back({q.terms[j].mono * m, -b * q.terms[j].coeff});
    return out;
}

inline std::optional<std::size_t> find_reducer(const std::vector<ZPoly>& basis, const Monomial& m) {
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!basis[k].is_zero() && basis[k].lm().divides(m)) return k;
    return std::nullopt;
}

/// Fraction-free top reduction: rewrites the leading term while possible.
inline ZPoly top_reduce(ZPoly h, const std::vector<ZPoly>& basis, OrderKind kind) {
    while (!h.is_zero()) {
        auto k = find_reducer(basis, h.lm());
        if (!k) break;
        const ZPoly& g = basis[*k];
        Integer gamma;
        mpz_gcd(gamma.get_mpz_t(), h.lc().get_mpz_t(), g.lc().get_mpz_t());
        Integer a, b;
        mpz_divexact(a.get_mpz_t(), g.lc().get_mpz_t(), gamma.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), h.lc().get_mpz_t(), gamma.get_mpz_t());
        Monomial m = h.lm().divide(g.lm());
        int sugar = std::max(h.sugar, g.sugar + static_cast<int>(m.degree()));
        h = zp_combine(a, h, b, m, g, kind);
        h.sugar = sugar;
    }
    make_primitive(h);
    return h;
}

/// Fraction-free full reduction: every term ends up irreducible.
inline ZPoly full_reduce(ZPoly h, const std::vector<ZPoly>& basis, OrderKind kind,
                         std::size_t skip_index = static_cast<std::size_t>(-1)) {
    std::vector<ZTerm> done;
    int sugar = h.sugar;
    while (!h.is_zero()) {
        std::optional<std::size_t> k;
        for (std::size_t idx = 0; idx < basis.size(); ++idx) {
            if (idx == skip_index || basis[idx].is_zero()) continue;
            if (basis[idx].lm().divides(h.lm())) {
                k = idx;
                break;
            }
        }
        if (!k) {
            done.push_back(std::move(h.terms.front()));
            h.terms.erase(h.terms.begin());
            continue;
        }
        const ZPoly& g = basis[*k];
        Integer gamma;
        mpz_gcd(gamma.get_mpz_t(), h.lc().get_mpz_t(), g.lc().get_mpz_t());
        Integer a, b;
        mpz_divexact(a.get_mpz_t(), g.lc().get_mpz_t(), gamma.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), h.lc().get_mpz_t(), gamma.get_mpz_t());
        Monomial m = h.lm().divide(g.lm());
        sugar = std::max(sugar, g.sugar + static_cast<int>(m.degree()));
        if (a != 1)
            for (auto& t : done) t.coeff *= a;
        h = zp_combine(a, h, b, m, g, kind);
    }
    ZPoly out;
    out.terms = std::move(done);
    out.sugar = sugar;
    make_primitive(out);
    return out;
}

inline ZPoly spoly(const ZPoly& f, const ZPoly& g, OrderKind kind) {
    Monomial l = Monomial::lcm(f.lm(), g.lm());
    Integer gamma;
    mpz_gcd(gamma.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
    Integer a, b;
    mpz_divexact(a.get_mpz_t(), g.lc().get_mpz_t(), gamma.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), f.lc().get_mpz_t(), gamma.get_mpz_t());
    Monomial mf = l.divide(f.lm());
    Monomial mg = l.divide(g.lm());
    // a*mf*f - b*mg*g, computed as one merge of mf*f against mg*g
    ZPoly shifted;
    shifted.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) shifted.terms.push_back({t.mono * mf, t.coeff});
    ZPoly out = zp_combine(a, shifted, b, mg, g, kind);
    out.sugar = std::max(f.sugar + static_cast<int>(mf.degree()),
                         g.sugar + static_cast<int>(mg.degree()));
    return out;
}

struct SPair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
};

inline bool spair_before(OrderKind kind, const SPair& a, const SPair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = mono_cmp(kind, a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

/// Gebauer-Moeller pair update: prune old pairs by the chain criterion, then
/// admit the new pairs that survive the divisibility, equal-lcm and coprime
/// criteria.
inline void update_pairs(std::vector<SPair>& pairs, const std::vector<ZPoly>& basis,
                         std::size_t t) {
    const Monomial& new_lm = basis[t].lm();

    std::vector<SPair> kept;
    kept.reserve(pairs.size());
    for (auto& p : pairs) {
        bool drop = new_lm.divides(p.lcm) &&
                    Monomial::lcm(basis[p.i].lm(), new_lm) != p.lcm &&
                    Monomial::lcm(basis[p.j].lm(), new_lm) != p.lcm;
        if (!drop) kept.push_back(std::move(p));
    }
    pairs = std::move(kept);

    struct Cand {
        std::size_t i;
        Monomial lcm;
        bool coprime;
    };
    std::vector<Cand> cands;
    cands.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
        if (basis[i].is_zero()) continue;
        cands.push_back({i, Monomial::lcm(basis[i].lm(), new_lm), basis[i].lm().coprime(new_lm)});
    }
    // divisibility criterion: drop candidates whose lcm is a proper multiple
    // of another candidate's lcm
    std::vector<bool> dead(cands.size(), false);
    for (std::size_t a = 0; a < cands.size(); ++a) {
        if (dead[a]) continue;
        for (std::size_t b = 0; b < cands.size(); ++b) {
            if (a == b || dead[a]) continue;
            if (cands[b].lcm != cands[a].lcm && cands[b].lcm.divides(cands[a].lcm)) dead[a] = true;
        }
    }
    // equal-lcm classes: a coprime member kills the class, otherwise keep the
    // lowest index; finally the coprime criterion drops the survivor itself
    for (std::size_t a = 0; a < cands.size(); ++a) {
        if (dead[a]) continue;
        bool class_coprime = cands[a].coprime;
        std::size_t keep = a;
        for (std::size_t b = a + 1; b < cands.size(); ++b) {
            if (dead[b] || cands[b].lcm != cands[a].lcm) continue;
            class_coprime = class_coprime || cands[b].coprime;
            dead[b] = true;
        }
        if (class_coprime) {
            dead[keep] = true;
            continue;
        }
        const ZPoly& f = basis[cands[keep].i];
        int sugar = std::max(
            f.sugar + static_cast<int>(cands[keep].lcm.degree() - f.lm().degree()),
            basis[t].sugar + static_cast<int>(cands[keep].lcm.degree() - new_lm.degree()));
        pairs.push_back({cands[keep].i, t, cands[keep].lcm, sugar});
    }
}

inline bool zpoly_canonical_less(OrderKind kind, const ZPoly& a, const ZPoly& b) {
    int c = mono_cmp(kind, a.lm(), b.lm());
    if (c != 0) return c < 0;
    if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size();
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        c = mono_cmp(kind, a.terms[i].mono, b.terms[i].mono);
        if (c != 0) return c < 0;
        if (a.terms[i].coeff != b.terms[i].coeff) return a.terms[i].coeff < b.terms[i].coeff;
    }
    return false;
}

/// Buchberger with sugar selection. Returns a (not yet reduced) basis.
inline std::vector<ZPoly> buchberger(std::vector<ZPoly> gens, OrderKind kind,
                                     const Budget& budget) {
    std::vector<ZPoly> basis;
    std::vector<SPair> pairs;
    std::erase_if(gens, [](const ZPoly& p) { return p.is_zero(); });
    for (auto& g : gens) make_primitive(g);
    std::sort(gens.begin(), gens.end(),
              [&](const ZPoly& a, const ZPoly& b) { return zpoly_canonical_less(kind, a, b); });
    gens.erase(std::unique(gens.begin(), gens.end(),
                           [](const ZPoly& a, const ZPoly& b) { return a.terms == b.terms; }),
               gens.end());
    for (auto& g : gens) {
        basis.push_back(std::move(g));
        update_pairs(pairs, basis, basis.size() - 1);
    }

    long long processed = 0;
    while (!pairs.empty()) {
        budget.check_spairs(++processed);
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k)
            if (spair_before(kind, pairs[k], pairs[best])) best = k;
        SPair pair = std::move(pairs[best]);
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        ZPoly h = top_reduce(spoly(basis[pair.i], basis[pair.j], kind), basis, kind);
        if (h.is_zero()) continue;
        budget.check_degree(h.max_term_degree());
        basis.push_back(std::move(h));
        update_pairs(pairs, basis, basis.size() - 1);
    }
    return basis;
}

/// Interreduce a Groebner basis into the reduced one (still primitive-integer).
inline std::vector<ZPoly> interreduce(std::vector<ZPoly> basis, OrderKind kind) {
    std::erase_if(basis, [](const ZPoly& p) { return p.is_zero(); });
    std::sort(basis.begin(), basis.end(),
              [&](const ZPoly& a, const ZPoly& b) { return zpoly_canonical_less(kind, a, b); });
    // minimalize: drop any element whose leading monomial another divides
    std::vector<ZPoly> minimal;
    for (auto& g : basis) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.lm().divides(g.lm())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(g));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            ZPoly reduced = full_reduce(minimal[i], minimal, kind, i);
            if (reduced.terms != minimal[i].terms) {
                minimal[i] = std::move(reduced);
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const ZPoly& a, const ZPoly& b) { return zpoly_canonical_less(kind, a, b); });
    return minimal;
}

inline ZPoly zpoly_from(const Polynomial& p, OrderKind kind) {
    Integer den_lcm = 1;
    for (const auto& t : p.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    ZPoly out;
    out.terms.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        Rational scaled = t.coeff * Rational(den_lcm);
        out.terms.push_back({t.mono, Integer(scaled.get_num())});
    }
    out.sugar = std::max(0, p.total_degree());
    sort_zpoly(out, kind);
    make_primitive(out);
    return out;
}

inline Polynomial poly_from_zpoly_monic(const RingPtr& ring, const ZPoly& z) {
    // terms of a grevlex-sorted ZPoly are already in Polynomial's order
    std::vector<Term> terms;
    terms.reserve(z.terms.size());
    Rational lead(z.lc());
    for (const auto& t : z.terms) terms.push_back({t.mono, Rational(t.coeff) / lead});
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace detail

/// Unique reduced Groebner basis of the given generators under the ring's
/// grevlex order. Deterministic: sugar pair selection with ties broken by the
/// monomial order and then by index.
inline GroebnerBasis reduced_groebner(const RingPtr& ring, std::span<const Polynomial> gens,
                                      const Budget& budget = Budget{}) {
    using namespace detail;
    std::vector<ZPoly> zs;
    zs.reserve(gens.size());
    for (const auto& g : gens) {
        require_same_ring(ring, g.ring());
        if (!g.is_zero()) zs.push_back(zpoly_from(g, OrderKind::grevlex));
    }
    std::vector<ZPoly> basis = buchberger(std::move(zs), OrderKind::grevlex, budget);
    basis = interreduce(std::move(basis), OrderKind::grevlex);
    GroebnerBasis out{ring, {}};
    out.elements.reserve(basis.size());
    for (const auto& z : basis) out.elements.push_back(poly_from_zpoly_monic(ring, z));
    return out;
}

/// Unique fully reduced remainder of f modulo G; zero iff f lies in the ideal.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    require_same_ring(f.ring(), G.ring);
    std::vector<Term> done;
    Polynomial h = f;
    while (!h.is_zero()) {
        const Term& lead = h.leading_term();
        const Polynomial* reducer = nullptr;
        for (const auto& g : G.elements) {
            if (g.leading_term().mono.divides(lead.mono)) {
                reducer = &g;
                break;
            }
        }
        if (!reducer) {
            done.push_back(lead);
            h = h - Polynomial::monomial_term(h.ring(), lead.mono, lead.coeff);
            continue;
        }
        Monomial m = lead.mono.divide(reducer->leading_term().mono);
        h = h - reducer->times_term(m, lead.coeff);  // reducers are monic
    }
    return Polynomial::from_terms(f.ring(), std::move(done));
}

}  // namespace satjac
