#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pdual/groebner.hpp"

namespace pdual {

template <class F>
struct Ideal {
    RingPtr<F> ring;
    std::vector<Polynomial<F>> gens; // zero generators are dropped on construction

    bool is_zero_ideal() const { return gens.empty(); }

    bool is_homogeneous() const {
        for (const auto& g : gens)
            if (!g.is_homogeneous()) return false;
        return true;
    }
};

template <class F>
Ideal<F> make_ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens) {
    Ideal<F> I;
    I.ring = ring;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring)) throw std::invalid_argument("generator in wrong ring");
        I.gens.push_back(std::move(g));
    }
    return I;
}

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
    if (!same_ring(a.ring, b.ring)) throw std::invalid_argument("ring mismatch");
    std::vector<Polynomial<F>> gens = a.gens;
    gens.insert(gens.end(), b.gens.begin(), b.gens.end());
    return make_ideal(a.ring, std::move(gens));
}

template <class F>
GroebnerBasis<F> groebner(const Ideal<F>& I, const MonomialOrder& order,
                          const GBBudget& budget = GBBudget()) {
    if (I.gens.empty()) return GroebnerBasis<F>(I.ring, order);
    return groebner_basis(I.gens, order, budget);
}

template <class F>
GroebnerBasis<F> groebner(const Ideal<F>& I, const GBBudget& budget = GBBudget()) {
    return groebner(I, I.ring->grevlex(), budget);
}

// ---- elimination ----

// I with the first k ring variables eliminated; generators of the result use
// only the tail variables but still live in the full ring.
template <class F>
Ideal<F> eliminate(const Ideal<F>& I, int k, const GBBudget& budget = GBBudget()) {
    if (k <= 0 || k >= I.ring->arity()) throw std::invalid_argument("bad elimination count");
    auto gb = groebner(I, MonomialOrder::elimination(k, I.ring->arity()), budget);
    std::vector<Polynomial<F>> kept;
    for (const auto& g : gb.elements) {
        bool uses_head = false;
        for (const auto& t : g.terms())
            for (int v = 0; v < k && !uses_head; ++v)
                if (t.m.e[v]) uses_head = true;
        if (!uses_head) kept.push_back(g);
    }
    return make_ideal(I.ring, std::move(kept));
}

// Same, but lands in the tail ring so downstream dimension counts are right.
template <class F>
Ideal<F> eliminate_to_tail(const Ideal<F>& I, int k, const GBBudget& budget = GBBudget()) {
    Ideal<F> kept = eliminate(I, k, budget);
    RingPtr<F> tail = tail_ring(I.ring, k);
    std::vector<int> vm(I.ring->arity(), -1);
    for (int i = k; i < I.ring->arity(); ++i) vm[i] = i - k;
    std::vector<Polynomial<F>> gens;
    for (const auto& g : kept.gens) {
        std::vector<int> safe = vm;
        for (int v = 0; v < k; ++v) safe[v] = 0; // unused by construction
        gens.push_back(g.map_vars(tail, safe));
    }
    return make_ideal(tail, std::move(gens));
}

// ---- intersection (tag-variable construction) ----

template <class F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b, const GBBudget& budget = GBBudget()) {
    if (!same_ring(a.ring, b.ring)) throw std::invalid_argument("ring mismatch");
    if (a.is_zero_ideal() || b.is_zero_ideal()) return make_ideal(a.ring, {});
    auto names = fresh_names(a.ring->vars, "tag", 1);
    RingPtr<F> ext = extend_ring_front(a.ring, names);
    Polynomial<F> t = Polynomial<F>::variable(ext, 0);
    Polynomial<F> one_minus_t = Polynomial<F>::constant(ext, F::one()) - t;
    std::vector<Polynomial<F>> gens;
    for (const auto& f : a.gens) gens.push_back(t * shift_into(f, ext, 1));
    for (const auto& g : b.gens) gens.push_back(one_minus_t * shift_into(g, ext, 1));
    Ideal<F> big = make_ideal(ext, std::move(gens));
    Ideal<F> elim = eliminate_to_tail(big, 1, budget);
    // Tail ring equals the original ring by construction.
    std::vector<Polynomial<F>> back;
    std::vector<int> vm(a.ring->arity());
    for (int i = 0; i < a.ring->arity(); ++i) vm[i] = i;
    for (const auto& g : elim.gens) back.push_back(g.map_vars(a.ring, vm));
    return make_ideal(a.ring, std::move(back));
}

// ---- saturation ----

// I : g^infinity by inverting g with an auxiliary variable and eliminating it.
template <class F>
Ideal<F> saturate_by_poly(const Ideal<F>& I, const Polynomial<F>& g,
                          const GBBudget& budget = GBBudget()) {
    if (g.is_zero()) throw std::invalid_argument("saturation by zero");
    if (g.is_constant()) return I;
    auto names = fresh_names(I.ring->vars, "inv", 1);
    RingPtr<F> ext = extend_ring_front(I.ring, names);
    Polynomial<F> w = Polynomial<F>::variable(ext, 0);
    std::vector<Polynomial<F>> gens;
    for (const auto& f : I.gens) gens.push_back(shift_into(f, ext, 1));
    gens.push_back(w * shift_into(g, ext, 1) - Polynomial<F>::constant(ext, F::one()));
    Ideal<F> big = make_ideal(ext, std::move(gens));
    Ideal<F> elim = eliminate_to_tail(big, 1, budget);
    std::vector<int> vm(I.ring->arity());
    for (int i = 0; i < I.ring->arity(); ++i) vm[i] = i;
    std::vector<Polynomial<F>> back;
    for (const auto& h : elim.gens) back.push_back(h.map_vars(I.ring, vm));
    return make_ideal(I.ring, std::move(back));
}

// I : J^infinity = intersection over generators g of I : g^infinity.
template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Ideal<F>& J, const GBBudget& budget = GBBudget()) {
    if (!same_ring(I.ring, J.ring)) throw std::invalid_argument("ring mismatch");
    if (J.gens.empty()) throw std::invalid_argument("saturation by zero ideal");
    std::optional<Ideal<F>> acc;
    for (const auto& g : J.gens) {
        Ideal<F> s = saturate_by_poly(I, g, budget);
        acc = acc ? intersect(*acc, s, budget) : std::move(s);
    }
    return *acc;
}

// I : x_i^infinity for homogeneous I: reverse-lex with x_i cheapest makes the
// saturation a division of basis elements by their x_i powers.
template <class F>
Ideal<F> saturate_by_variable(const Ideal<F>& I, int var, const GBBudget& budget = GBBudget()) {
    int n = I.ring->arity();
    if (var < 0 || var >= n) throw std::invalid_argument("variable index out of range");
    if (!I.is_homogeneous())
        return saturate_by_poly(I, Polynomial<F>::variable(I.ring, var), budget);
    // Permute var to the last slot, grevlex there, divide, permute back.
    std::vector<int> perm(n), inv(n);
    int w = 0;
    for (int i = 0; i < n; ++i)
        if (i != var) perm[i] = w++;
    perm[var] = n - 1;
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    std::vector<std::string> pvars(n);
    for (int i = 0; i < n; ++i) pvars[perm[i]] = I.ring->vars[i];
    RingPtr<F> pring = make_ring(I.ring->field, pvars);
    std::vector<Polynomial<F>> pg;
    for (const auto& g : I.gens) pg.push_back(g.map_vars(pring, perm));
    auto gb = groebner_basis(pg, pring->grevlex(), budget);
    std::vector<Polynomial<F>> out;
    for (const auto& g : gb.elements) {
        uint16_t emin = UINT16_MAX;
        for (const auto& t : g.terms()) emin = std::min(emin, t.m.e[n - 1]);
        Polynomial<F> h = g;
        if (emin > 0) {
            std::vector<Term<F>> ts = g.terms();
            for (auto& t : ts) {
                t.m.e[n - 1] = static_cast<uint16_t>(t.m.e[n - 1] - emin);
                t.m.deg -= emin;
            }
            h = Polynomial<F>::from_terms(pring, std::move(ts));
        }
        out.push_back(h.map_vars(I.ring, inv));
    }
    return make_ideal(I.ring, std::move(out));
}

// Saturation by the irrelevant maximal ideal (projective closure cleanup).
template <class F>
Ideal<F> saturate_irrelevant(const Ideal<F>& I, const GBBudget& budget = GBBudget()) {
    if (I.gens.empty()) return I;
    std::optional<Ideal<F>> acc;
    for (int v = 0; v < I.ring->arity(); ++v) {
        Ideal<F> s = saturate_by_variable(I, v, budget);
        acc = acc ? intersect(*acc, s, budget) : std::move(s);
    }
    return *acc;
}

// ---- colon ----

// Exact division f / g; throws if g does not divide f.
template <class F>
Polynomial<F> poly_divide_exact(const Polynomial<F>& f, const Polynomial<F>& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    const RingPtr<F>& ring = f.ring();
    MonomialOrder ord = ring->grevlex();
    Polynomial<F> rem = f, quot = Polynomial<F>::zero(ring);
    Monomial glm = leading_monomial(g, ord);
    typename F::Elem glc = g.coefficient_of(glm);
    while (!rem.is_zero()) {
        Monomial rlm = leading_monomial(rem, ord);
        if (!glm.divides(rlm)) throw std::domain_error("inexact polynomial division");
        typename F::Elem c = ring->field.div(rem.coefficient_of(rlm), glc);
        Monomial m = rlm.div(glm);
        Polynomial<F> piece = Polynomial<F>::from_terms(ring, {{c, m}});
        quot = quot + piece;
        rem = rem - g.term_multiplied(c, m);
    }
    return quot;
}

template <class F>
Ideal<F> colon_by_poly(const Ideal<F>& I, const Polynomial<F>& g,
                       const GBBudget& budget = GBBudget()) {
    if (g.is_zero()) throw std::invalid_argument("colon by zero");
    Ideal<F> principal = make_ideal(I.ring, {g});
    Ideal<F> inter = intersect(I, principal, budget);
    std::vector<Polynomial<F>> gens;
    for (const auto& h : inter.gens) gens.push_back(poly_divide_exact(h, g));
    return make_ideal(I.ring, std::move(gens));
}

template <class F>
Ideal<F> colon(const Ideal<F>& I, const Ideal<F>& J, const GBBudget& budget = GBBudget()) {
    if (J.gens.empty()) throw std::invalid_argument("colon by zero ideal");
    std::optional<Ideal<F>> acc;
    for (const auto& g : J.gens) {
        Ideal<F> c = colon_by_poly(I, g, budget);
        acc = acc ? intersect(*acc, c, budget) : std::move(c);
    }
    return *acc;
}

// ---- membership ----

template <class F>
bool ideal_member(const Polynomial<F>& p, const GroebnerBasis<F>& gb,
                  const GBBudget& budget = GBBudget()) {
    return normal_form(p, gb, budget).is_zero();
}

// p in rad(I), decided by inverting p and asking whether 1 appears.
template <class F>
bool radical_membership(const Polynomial<F>& p, const Ideal<F>& I,
                        const GBBudget& budget = GBBudget()) {
    if (p.is_zero()) return true;
    if (I.gens.empty()) return false;
    auto names = fresh_names(I.ring->vars, "inv", 1);
    RingPtr<F> ext = extend_ring_front(I.ring, names);
    Polynomial<F> w = Polynomial<F>::variable(ext, 0);
    std::vector<Polynomial<F>> gens;
    for (const auto& f : I.gens) gens.push_back(shift_into(f, ext, 1));
    gens.push_back(w * shift_into(p, ext, 1) - Polynomial<F>::constant(ext, F::one()));
    auto gb = groebner_basis(gens, ext->grevlex(), budget);
    return gb.is_unit_ideal();
}

// V(a) = V(b) as sets, by two-sided radical membership of generators.
template <class F>
bool ideal_equal_up_to_radical(const Ideal<F>& a, const Ideal<F>& b,
                               const GBBudget& budget = GBBudget()) {
    for (const auto& g : a.gens)
        if (!radical_membership(g, b, budget)) return false;
    for (const auto& g : b.gens)
        if (!radical_membership(g, a, budget)) return false;
    return true;
}

// Ideal-level equality via mutual normal forms.
template <class F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b, const GBBudget& budget = GBBudget()) {
    if (a.gens.empty() || b.gens.empty()) return a.gens.empty() && b.gens.empty();
    auto ga = groebner(a, budget), gb = groebner(b, budget);
    if (ga.elements.size() != gb.elements.size()) return false;
    for (size_t i = 0; i < ga.elements.size(); ++i)
        if (ga.elements[i] != gb.elements[i]) return false;
    return true;
}

// ---- gcd and squarefree part (via principal-ideal intersection) ----

template <class F>
Polynomial<F> poly_normalize_monic(const Polynomial<F>& f) {
    if (f.is_zero()) return f;
    MonomialOrder ord = f.ring()->grevlex();
    auto lc = f.coefficient_of(leading_monomial(f, ord));
    return f.scaled(f.ring()->field.inv(lc));
}

template <class F>
Polynomial<F> poly_lcm(const Polynomial<F>& f, const Polynomial<F>& g,
                       const GBBudget& budget = GBBudget()) {
    Ideal<F> inter = intersect(make_ideal(f.ring(), {f}), make_ideal(g.ring(), {g}), budget);
    auto gb = groebner(inter, budget);
    if (gb.elements.size() != 1)
        throw std::logic_error("intersection of principal ideals was not principal");
    return gb.elements[0];
}

template <class F>
Polynomial<F> poly_gcd(const Polynomial<F>& f, const Polynomial<F>& g,
                       const GBBudget& budget = GBBudget()) {
    if (f.is_zero()) return poly_normalize_monic(g);
    if (g.is_zero()) return poly_normalize_monic(f);
    Polynomial<F> l = poly_lcm(f, g, budget);
    return poly_normalize_monic(poly_divide_exact(f * g, l));
}

template <class F>
Polynomial<F> squarefree_part(const Polynomial<F>& f, const GBBudget& budget = GBBudget()) {
    if (f.is_zero() || f.is_constant()) return f;
    Polynomial<F> d = Polynomial<F>::zero(f.ring());
    for (int v = 0; v < f.ring()->arity(); ++v) {
        Polynomial<F> pd = f.derivative(v);
        if (pd.is_zero()) continue;
        d = d.is_zero() ? poly_normalize_monic(pd) : poly_gcd(d, pd, budget);
        if (d.is_constant()) return poly_normalize_monic(f);
    }
    if (d.is_zero()) return poly_normalize_monic(f); // constant in characteristic 0 never lands here
    Polynomial<F> d2 = poly_gcd(d, f, budget);
    return poly_normalize_monic(poly_divide_exact(f, d2));
}

// ---- initial forms at the origin (tangent cone input) ----

// Ideal of initial forms of an affine ideal at the origin. The affine ring is
// the input ring itself; the output lives there too, generated by homogeneous
// forms. Shortcut for principal ideals: initial form of the generator.
template <class F>
Ideal<F> initial_forms_at_origin(const Ideal<F>& I, const GBBudget& budget = GBBudget()) {
    if (I.gens.empty()) return I;
    for (const auto& g : I.gens)
        if (!I.ring->field.is_zero(g.coefficient_of(Monomial::one())))
            throw std::domain_error("origin does not lie on the variety");
    if (I.gens.size() == 1)
        return make_ideal(I.ring, {I.gens[0].lowest_degree_part()});
    int n = I.ring->arity();
    // Degree-compatible basis first, so homogenisation gives the projective closure.
    auto gb = groebner(I, I.ring->grevlex(), budget);
    if (gb.is_unit_ideal())
        throw std::domain_error("origin does not lie on the variety");
    auto names = fresh_names(I.ring->vars, "h", 1);
    RingPtr<F> ext = extend_ring_front(I.ring, names);
    std::vector<Polynomial<F>> hom;
    for (const auto& g : gb.elements) {
        int d = g.degree();
        std::vector<Term<F>> ts;
        for (const auto& t : g.terms()) {
            Term<F> nt;
            nt.c = t.c;
            nt.m = Monomial::one();
            nt.m.e[0] = static_cast<uint16_t>(d - static_cast<int>(t.m.deg));
            for (int i = 0; i < n; ++i) nt.m.e[i + 1] = t.m.e[i];
            nt.m.deg = static_cast<uint32_t>(d);
            ts.push_back(std::move(nt));
        }
        hom.push_back(Polynomial<F>::from_terms(ext, std::move(ts)));
    }
    // Order with the homogenising variable dominant: on homogeneous input the
    // leading term then carries the lowest-degree affine part.
    MonomialOrder cone_order = MonomialOrder::block(1, MonomialOrder::grevlex(1),
                                                    MonomialOrder::grevlex(n));
    auto gb2 = groebner_basis(hom, cone_order, budget);
    std::vector<Polynomial<F>> out;
    std::vector<int> vm(n + 1, 0);
    for (int i = 0; i < n; ++i) vm[i + 1] = i;
    for (const auto& g : gb2.elements) {
        // Dehomogenise, then take the lowest-degree part.
        std::vector<Term<F>> ts;
        for (const auto& t : g.terms()) {
            Term<F> nt;
            nt.c = t.c;
            nt.m = t.m;
            nt.m.deg -= nt.m.e[0];
            nt.m.e[0] = 0;
            ts.push_back(std::move(nt));
        }
        Polynomial<F> deh = Polynomial<F>::from_terms(ext, std::move(ts));
        out.push_back(deh.lowest_degree_part().map_vars(I.ring, vm));
    }
    return make_ideal(I.ring, std::move(out));
}

// ---- flat limit along a one-parameter family ----

// Family ideal lives in ring (vars..., t) with t last; the limit at t = 0 is
// ((I : t^inf) + (t)) with t eliminated, returned in the ring without t.
template <class F>
Ideal<F> flat_limit(const Ideal<F>& I, const GBBudget& budget = GBBudget()) {
    int n = I.ring->arity();
    if (n < 2) throw std::invalid_argument("family ring needs a parameter variable");
    int tvar = n - 1;
    Ideal<F> sat = saturate_by_poly(I, Polynomial<F>::variable(I.ring, tvar), budget);
    // Move t to the front and eliminate it.
    std::vector<std::string> pvars;
    pvars.push_back(I.ring->vars[tvar]);
    for (int i = 0; i < tvar; ++i) pvars.push_back(I.ring->vars[i]);
    RingPtr<F> pring = make_ring(I.ring->field, pvars);
    std::vector<int> perm(n);
    perm[tvar] = 0;
    for (int i = 0; i < tvar; ++i) perm[i] = i + 1;
    std::vector<Polynomial<F>> gens;
    for (const auto& g : sat.gens) gens.push_back(g.map_vars(pring, perm));
    gens.push_back(Polynomial<F>::variable(pring, 0));
    return eliminate_to_tail(make_ideal(pring, std::move(gens)), 1, budget);
}

} // namespace pdual
