#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdual/polynomial.hpp"

namespace pdual {

struct GBBudget {
    uint64_t max_pairs = 400000;  // S-pairs processed
    uint32_t max_degree = 64;     // total degree any intermediate may reach

    static GBBudget unlimited() { return {UINT64_MAX, 60000}; }
};

struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Engine-internal polynomial: terms strictly descending in the target order.
template <class F>
struct OrdPoly {
    std::vector<Term<F>> t;

    bool is_zero() const { return t.empty(); }
    const Monomial& lm() const { return t.front().m; }
    const typename F::Elem& lc() const { return t.front().c; }
    uint32_t degree() const {
        uint32_t d = 0;
        for (const auto& x : t) d = std::max(d, x.m.deg);
        return d;
    }
};

template <class F>
OrdPoly<F> to_internal(const Polynomial<F>& p, const MonomialOrder& ord) {
    OrdPoly<F> r;
    r.t = p.terms();
    std::sort(r.t.begin(), r.t.end(), [&](const Term<F>& a, const Term<F>& b) {
        return ord.greater(a.m, b.m);
    });
    return r;
}

template <class F>
Polynomial<F> from_internal(const RingPtr<F>& ring, const OrdPoly<F>& p) {
    return Polynomial<F>::from_terms(ring, p.t);
}

// r -= c * m * g, merging sorted term lists.
template <class F>
void submul(const F& k, const MonomialOrder& ord, OrdPoly<F>& r,
            const typename F::Elem& c, const Monomial& m, const OrdPoly<F>& g) {
    std::vector<Term<F>> out;
    out.reserve(r.t.size() + g.t.size());
    size_t i = 0, j = 0;
    while (i < r.t.size() && j < g.t.size()) {
        Monomial gm = g.t[j].m.mul(m);
        int cmp = ord.compare(r.t[i].m, gm);
        if (cmp > 0) out.push_back(std::move(r.t[i++]));
        else if (cmp < 0) {
            out.push_back({k.neg(k.mul(c, g.t[j].c)), gm});
            ++j;
        } else {
            typename F::Elem s = k.sub(r.t[i].c, k.mul(c, g.t[j].c));
            if (!k.is_zero(s)) out.push_back({std::move(s), gm});
            ++i; ++j;
        }
    }
    while (i < r.t.size()) out.push_back(std::move(r.t[i++]));
    while (j < g.t.size()) {
        out.push_back({k.neg(k.mul(c, g.t[j].c)), g.t[j].m.mul(m)});
        ++j;
    }
    r.t = std::move(out);
}

inline void check_degree(uint32_t deg, const GBBudget& budget) {
    if (deg > budget.max_degree)
        throw BudgetExhausted("budget exhausted: intermediate degree " + std::to_string(deg) +
                              " exceeds cap " + std::to_string(budget.max_degree));
}

// Coefficient normalization: primitive integer form over Q (keeps growth in
// check during long reductions), monic over a prime field.
template <class F>
void normalize_coeffs(const F& k, OrdPoly<F>& p) {
    if (p.is_zero()) return;
    if constexpr (std::is_same_v<F, QField>) {
        mpz_class den(1), num(0);
        for (const auto& t : p.t) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den().get_mpz_t());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.c.get_num().get_mpz_t());
        }
        if (num == 0) num = 1;
        mpq_class scale(den, num);
        scale.canonicalize();
        if (p.t.front().c < 0) scale = -scale;
        for (auto& t : p.t) { t.c *= scale; t.c.canonicalize(); }
    } else {
        typename F::Elem inv = k.inv(p.lc());
        for (auto& t : p.t) t.c = k.mul(t.c, inv);
    }
}

template <class F>
void make_monic(const F& k, OrdPoly<F>& p) {
    if (p.is_zero()) return;
    typename F::Elem inv = k.inv(p.lc());
    for (auto& t : p.t) t.c = k.mul(t.c, inv);
}

// Full normal form (head and tail reduced) against `basis`.
template <class F>
OrdPoly<F> normal_form_internal(const F& k, const MonomialOrder& ord,
                                OrdPoly<F> p, const std::vector<OrdPoly<F>>& basis,
                                const GBBudget& budget) {
    OrdPoly<F> result;
    uint64_t steps = 0;
    while (!p.is_zero()) {
        check_degree(p.lm().deg, budget);
        if (++steps % 4096 == 0) normalize_coeffs(k, p);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero() || !g.lm().divides(p.lm())) continue;
            typename F::Elem c = k.div(p.lc(), g.lc());
            submul(k, ord, p, c, p.lm().div(g.lm()), g);
            reduced = true;
            break;
        }
        if (!reduced) {
            result.t.push_back(p.t.front());
            p.t.erase(p.t.begin());
        }
    }
    return result;
}

template <class F>
OrdPoly<F> s_poly(const F& k, const MonomialOrder& ord,
                  const OrdPoly<F>& f, const OrdPoly<F>& g) {
    Monomial l = f.lm().lcm_with(g.lm());
    OrdPoly<F> r = f;
    typename F::Elem scale = k.div(g.lc(), f.lc());
    for (auto& t : r.t) t.c = k.mul(t.c, scale);
    // r = (lcm/lm f) * (g.lc/f.lc) * f  -  (lcm/lm g) * g
    Monomial mf = l.div(f.lm());
    for (auto& t : r.t) t.m = t.m.mul(mf);
    submul(k, ord, r, k.one(), l.div(g.lm()), g);
    return r;
}

} // namespace detail

template <class F>
Monomial leading_monomial(const Polynomial<F>& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw std::domain_error("leading monomial of zero");
    const auto& ts = p.terms();
    size_t best = 0;
    for (size_t i = 1; i < ts.size(); ++i)
        if (ord.greater(ts[i].m, ts[best].m)) best = i;
    return ts[best].m;
}

template <class F>
struct GroebnerBasis {
    RingPtr<F> ring;
    MonomialOrder order;
    std::vector<Polynomial<F>> elements; // reduced basis, ascending leading monomials
    uint64_t pairs_processed = 0;

    GroebnerBasis(RingPtr<F> r, MonomialOrder o) : ring(std::move(r)), order(std::move(o)) {}

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        for (const auto& g : elements) out.push_back(leading_monomial(g, order));
        return out;
    }

    // The only reduced basis of the unit ideal is {1}.
    bool is_unit_ideal() const {
        return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
    }
};

template <class F>
typename F::Elem leading_coefficient(const Polynomial<F>& p, const MonomialOrder& ord) {
    Monomial lm = leading_monomial(p, ord);
    return p.coefficient_of(lm);
}

// Buchberger with the Gebauer-Moller pair criteria and normal (minimal lcm)
// selection. Output is the reduced basis: minimal, inter-reduced, monic,
// sorted ascending by leading monomial; it is the unique reduced basis of the
// ideal for this order, regardless of generator order.
template <class F>
GroebnerBasis<F> groebner_basis(const std::vector<Polynomial<F>>& gens_in,
                                const MonomialOrder& order,
                                const GBBudget& budget = GBBudget()) {
    using detail::OrdPoly;
    if (gens_in.empty()) throw std::invalid_argument("groebner_basis of empty generator list");
    const RingPtr<F>& ring = gens_in[0].ring();
    const F& k = ring->field;
    if (order.nvars() != ring->arity()) throw std::invalid_argument("order arity mismatch");

    // Canonical input order: sort by leading monomial, then term count.
    std::vector<OrdPoly<F>> input;
    for (const auto& g : gens_in) {
        if (!same_ring(g.ring(), ring)) throw std::invalid_argument("ring mismatch");
        if (g.is_zero()) continue;
        input.push_back(detail::to_internal(g, order));
    }
    GroebnerBasis<F> out(ring, order);
    if (input.empty()) return out; // zero ideal
    std::sort(input.begin(), input.end(), [&](const OrdPoly<F>& a, const OrdPoly<F>& b) {
        int c = order.compare(a.lm(), b.lm());
        if (c != 0) return c < 0;
        return a.t.size() < b.t.size();
    });

    std::vector<OrdPoly<F>> basis;
    struct Pair {
        uint32_t deg;
        Monomial lcm;
        size_t i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };
    std::vector<Pair> pairs; // kept as a heap-free sorted-on-pop list

    auto add_element = [&](OrdPoly<F> h) {
        detail::normalize_coeffs(k, h);
        size_t t = basis.size();
        // Gebauer-Moller update. New pairs (i, t):
        std::vector<Pair> fresh;
        for (size_t i = 0; i < t; ++i) {
            Monomial l = basis[i].lm().lcm_with(h.lm());
            fresh.push_back({l.deg, l, i, t});
        }
        // M criterion: drop (i,t) when another new lcm properly divides its lcm.
        std::vector<bool> drop(fresh.size(), false);
        for (size_t a = 0; a < fresh.size(); ++a)
            for (size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[a] || drop[b]) continue;
                if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm))
                    drop[a] = true;
            }
        // F criterion: one representative per lcm value; a coprime member
        // kills its whole class (its S-polynomial reduces to zero anyway).
        for (size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            for (size_t b = a + 1; b < fresh.size(); ++b) {
                if (drop[b] || !(fresh[a].lcm == fresh[b].lcm)) continue;
                drop[b] = true;
                if (basis[fresh[b].i].lm().coprime_with(h.lm())) drop[a] = true;
            }
        }
        // B (product) criterion on the survivors.
        for (size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a] && basis[fresh[a].i].lm().coprime_with(h.lm())) drop[a] = true;
        // Chain criterion against old pairs: drop (i,j) once lm(h) divides
        // lcm(i,j) and both mixed lcms differ from it.
        std::vector<Pair> kept;
        for (const auto& p : pairs) {
            Monomial lij = p.lcm;
            if (h.lm().divides(lij)) {
                Monomial lit = basis[p.i].lm().lcm_with(h.lm());
                Monomial ljt = basis[p.j].lm().lcm_with(h.lm());
                if (!(lit == lij) && !(ljt == lij)) continue;
            }
            kept.push_back(p);
        }
        pairs = std::move(kept);
        for (size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) pairs.push_back(fresh[a]);
        basis.push_back(std::move(h));
    };

    for (auto& g : input) add_element(std::move(g));

    uint64_t processed = 0;
    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t i = 1; i < pairs.size(); ++i)
            if (pair_less(pairs[i], pairs[best])) best = i;
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));
        if (++processed > budget.max_pairs)
            throw BudgetExhausted("budget exhausted: S-pair count exceeds cap " +
                                  std::to_string(budget.max_pairs));
        detail::check_degree(p.lcm.deg, budget);
        OrdPoly<F> s = detail::s_poly(k, order, basis[p.i], basis[p.j]);
        if (!s.is_zero()) detail::check_degree(s.degree(), budget);
        detail::normalize_coeffs(k, s);
        OrdPoly<F> r = detail::normal_form_internal(k, order, std::move(s), basis, budget);
        if (!r.is_zero()) add_element(std::move(r));
    }
    out.pairs_processed = processed;

    // Minimalize.
    std::vector<bool> keep(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[i] || !keep[j]) continue;
            if (basis[j].lm().divides(basis[i].lm()) &&
                !(i < j && basis[j].lm() == basis[i].lm()))
                keep[i] = false;
        }
    std::vector<OrdPoly<F>> minimal;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));

    // Inter-reduce tails, make monic, sort ascending by leading monomial.
    std::vector<OrdPoly<F>> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OrdPoly<F>> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        OrdPoly<F> r = detail::normal_form_internal(k, order, minimal[i], others, budget);
        if (!r.is_zero()) {
            detail::make_monic(k, r);
            reduced.push_back(std::move(r));
        }
    }
    std::sort(reduced.begin(), reduced.end(), [&](const OrdPoly<F>& a, const OrdPoly<F>& b) {
        return order.less(a.lm(), b.lm());
    });
    for (const auto& g : reduced) out.elements.push_back(detail::from_internal(ring, g));
    return out;
}

// Unique normal form with respect to a (reduced or not) basis.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& p, const GroebnerBasis<F>& gb,
                          const GBBudget& budget = GBBudget()) {
    if (gb.elements.empty()) return p; // zero ideal
    const F& k = gb.ring->field;
    std::vector<detail::OrdPoly<F>> basis;
    for (const auto& g : gb.elements) basis.push_back(detail::to_internal(g, gb.order));
    auto r = detail::normal_form_internal(k, gb.order,
                                          detail::to_internal(p, gb.order), basis, budget);
    return detail::from_internal(gb.ring, r);
}

template <class F>
bool ideal_contains_one(const GroebnerBasis<F>& gb) {
    return gb.is_unit_ideal();
}

} // namespace pdual
