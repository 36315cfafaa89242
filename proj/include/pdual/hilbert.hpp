#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "pdual/ideal.hpp"

namespace pdual {

namespace detail {

// Coefficient vector of a polynomial in t (index = power of t).
using ZPoly = std::vector<mpz_class>;

inline void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    zp_trim(r);
    return r;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zp_trim(r);
    return r;
}

inline ZPoly zp_shift(const ZPoly& a, uint32_t k) {
    if (a.empty()) return {};
    ZPoly r(a.size() + k, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

// 1 - t^d
inline ZPoly zp_one_minus_power(uint32_t d) {
    ZPoly r(d + 1, mpz_class(0));
    r[0] = 1;
    r[d] = -1;
    return r;
}

inline void keep_minimal_monomials(std::vector<Monomial>& ms) {
    std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
    });
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Monomial> out;
    for (const auto& m : ms) {
        bool redundant = false;
        for (const auto& kept : out)
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    ms = std::move(out);
}

// Numerator of the Hilbert series of R/(monomial ideal), over the full
// (1 - t)^n denominator: recursion on a variable pivot.
inline ZPoly monomial_numerator(std::vector<Monomial> gens) {
    keep_minimal_monomials(gens);
    if (gens.empty()) return ZPoly{mpz_class(1)};
    if (gens[0].is_one()) return ZPoly{};
    // Pairwise coprime: product formula.
    bool coprime = true;
    for (size_t i = 0; i < gens.size() && coprime; ++i)
        for (size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!gens[i].coprime_with(gens[j])) coprime = false;
    if (coprime) {
        ZPoly r{mpz_class(1)};
        for (const auto& m : gens) r = zp_mul(r, zp_one_minus_power(m.deg));
        return r;
    }
    // Pivot on the most frequently occurring variable.
    std::array<uint32_t, kMaxVars> freq{};
    for (const auto& m : gens)
        for (int v = 0; v < kMaxVars; ++v)
            if (m.e[v]) ++freq[v];
    int pivot = 0;
    for (int v = 1; v < kMaxVars; ++v)
        if (freq[v] > freq[pivot]) pivot = v;
    // N(I) = N(I + (x)) + t * N(I : x) with x the pivot variable.
    std::vector<Monomial> plus, quot;
    plus.push_back(Monomial::variable(pivot));
    for (const auto& m : gens) {
        if (m.e[pivot] == 0) plus.push_back(m);
        Monomial q = m;
        if (q.e[pivot]) {
            q.e[pivot] -= 1;
            q.deg -= 1;
        }
        quot.push_back(q);
    }
    return zp_add(monomial_numerator(std::move(plus)),
                  zp_shift(monomial_numerator(std::move(quot)), 1));
}

} // namespace detail

struct HilbertData {
    int ring_arity = 0;      // number of ring variables n
    int affine_dimension = 0; // Krull dimension of R/I
    int proj_dimension = -1;  // affine_dimension - 1; -1 means empty projective scheme
    int64_t degree = 0;       // projective degree; 0 for the empty scheme
    detail::ZPoly numerator;  // Hilbert series numerator over (1 - t)^n
};

// Values of the Hilbert function of R/I for d = 0..upto, from the numerator.
inline std::vector<mpz_class> hilbert_function_values(const detail::ZPoly& numerator, int arity,
                                                      int upto) {
    if (upto < 0) return {};
    std::vector<mpz_class> v(static_cast<size_t>(upto) + 1, mpz_class(0));
    for (size_t i = 0; i < numerator.size() && i <= static_cast<size_t>(upto); ++i)
        v[i] = numerator[i];
    // Multiply by 1/(1 - t)^arity == iterated partial sums.
    for (int k = 0; k < arity; ++k)
        for (int d = 1; d <= upto; ++d) v[d] += v[d - 1];
    return v;
}

template <class F>
HilbertData hilbert_data_from_leading_terms(RingPtr<F> ring, std::vector<Monomial> lts) {
    HilbertData hd;
    hd.ring_arity = ring->arity();
    hd.numerator = detail::monomial_numerator(std::move(lts));
    // Strip (1 - t) factors: multiplicity of root t = 1.
    detail::ZPoly q = hd.numerator;
    int stripped = 0;
    auto value_at_one = [](const detail::ZPoly& p) {
        mpz_class s = 0;
        for (const auto& c : p) s += c;
        return s;
    };
    if (q.empty()) {
        // Unit ideal: quotient ring is zero.
        hd.affine_dimension = 0;
        hd.proj_dimension = -1;
        hd.degree = 0;
        return hd;
    }
    while (value_at_one(q) == 0) {
        // Synthetic division by (1 - t): q(t) = (1 - t) * r(t).
        detail::ZPoly r(q.size() - 1, mpz_class(0));
        mpz_class carry = 0;
        for (size_t i = 0; i + 1 < q.size(); ++i) {
            r[i] = q[i] + carry;
            carry = r[i];
        }
        q = std::move(r);
        detail::zp_trim(q);
        ++stripped;
        if (q.empty()) throw std::logic_error("hilbert numerator vanished");
    }
    hd.affine_dimension = hd.ring_arity - stripped;
    hd.proj_dimension = hd.affine_dimension - 1;
    mpz_class deg = value_at_one(q);
    if (deg <= 0) throw std::logic_error("nonpositive degree from hilbert numerator");
    // For affine_dimension == 0 (empty projective scheme, proj_dimension -1)
    // the value is the length of the graded quotient rather than a degree.
    hd.degree = static_cast<int64_t>(deg.get_si());
    return hd;
}

template <class F>
HilbertData hilbert_data(const Ideal<F>& I, const GBBudget& budget = GBBudget()) {
    if (!I.is_homogeneous()) throw std::invalid_argument("hilbert data needs a homogeneous ideal");
    if (I.gens.empty()) {
        HilbertData hd;
        hd.ring_arity = I.ring->arity();
        hd.affine_dimension = hd.ring_arity;
        hd.proj_dimension = hd.ring_arity - 1;
        hd.degree = 1;
        hd.numerator = detail::ZPoly{mpz_class(1)};
        return hd;
    }
    auto gb = groebner(I, budget);
    return hilbert_data_from_leading_terms<F>(I.ring, gb.leading_monomials());
}

} // namespace pdual
