#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdual/hilbert.hpp"
#include "pdual/ideal.hpp"
#include "pdual/linear.hpp"
#include "pdual/matrix.hpp"

namespace pdual {

// A projective scheme X ⊂ P^N held by a homogeneous ideal, with its reduced
// Groebner basis and Hilbert data computed once at construction so dimension
// and degree queries are free afterwards.
template <class F>
class ProjectiveVariety {
public:
    explicit ProjectiveVariety(Ideal<F> ideal, const GBBudget& budget = GBBudget())
        : ideal_(check_homogeneous(std::move(ideal))),
          gb_(groebner(ideal_, budget)),
          hd_(hilbert_data_from_leading_terms<F>(ideal_.ring, gb_.leading_monomials())) {}

    const Ideal<F>& ideal() const { return ideal_; }
    const RingPtr<F>& ring() const { return ideal_.ring; }
    const GroebnerBasis<F>& gb() const { return gb_; }
    const HilbertData& hilbert() const { return hd_; }

    int ambient_dim() const { return ideal_.ring->arity() - 1; }
    int dim() const { return hd_.proj_dimension; }
    int codim() const { return ambient_dim() - dim(); }
    int64_t degree() const { return hd_.degree; }
    bool is_empty() const { return dim() < 0; }

    // Linear spaces (including P^N itself) have a reduced basis of linear forms.
    bool is_linear() const {
        for (const auto& g : gb_.elements)
            if (g.degree() > 1) return false;
        return true;
    }

    bool contains(const PointP<F>& x) const {
        if (x.ambient_dim() != ambient_dim())
            throw std::invalid_argument("point lives in the wrong ambient space");
        for (const auto& g : ideal_.gens)
            if (!ideal_.ring->field.is_zero(g.evaluate(x.coords()))) return false;
        return true;
    }

    // Jacobian of the defining generators evaluated at x; rows follow gens.
    Mat<F> jacobian_at(const PointP<F>& x) const {
        const auto& ring = ideal_.ring;
        Mat<F> j(ring->field, static_cast<int>(ideal_.gens.size()), ring->arity());
        for (size_t r = 0; r < ideal_.gens.size(); ++r)
            for (int c = 0; c < ring->arity(); ++c)
                j.at(static_cast<int>(r), c) = ideal_.gens[r].derivative(c).evaluate(x.coords());
        return j;
    }

    bool is_smooth_point(const PointP<F>& x) const {
        if (!contains(x)) return false;
        if (ideal_.gens.empty()) return true;
        return jacobian_at(x).rank() == codim();
    }

private:
    static Ideal<F> check_homogeneous(Ideal<F> ideal) {
        for (const auto& g : ideal.gens)
            if (!g.is_homogeneous())
                throw std::invalid_argument("variety ideal must be homogeneous");
        return ideal;
    }

    Ideal<F> ideal_;
    GroebnerBasis<F> gb_;
    HilbertData hd_;
};

// Embedded projective tangent space at a smooth point: the projectivized
// kernel of the Jacobian at x. Errors out on points off X and singular points.
template <class F>
LinearSubspace<F> tangent_space(const ProjectiveVariety<F>& X, const PointP<F>& x) {
    if (!X.contains(x)) throw std::domain_error("tangent space: point does not lie on the variety");
    const F& field = X.ring()->field;
    if (X.ideal().gens.empty()) {
        // X = P^N: tangent space is everything.
        std::vector<std::vector<typename F::Elem>> rows;
        for (int i = 0; i <= X.ambient_dim(); ++i) {
            std::vector<typename F::Elem> e(X.ambient_dim() + 1, F::zero());
            e[i] = F::one();
            rows.push_back(std::move(e));
        }
        return LinearSubspace<F>::from_spanning_points(field, rows);
    }
    Mat<F> j = X.jacobian_at(x);
    int rank = j.rank();
    if (rank != X.codim())
        throw std::domain_error("tangent space: singular point (jacobian rank " +
                                std::to_string(rank) + ", codimension " +
                                std::to_string(X.codim()) + ")");
    return LinearSubspace<F>::from_spanning_points(field, j.kernel_basis());
}

// I(X) + the c x c minors of the Jacobian, c = codim X. Cuts out the locus
// where the Jacobian drops below the rank it attains at smooth points.
template <class F>
Ideal<F> singular_locus(const ProjectiveVariety<F>& X) {
    if (X.ideal().gens.empty() || X.codim() <= 0) {
        // P^N (or a scheme of codimension 0) has no singular points.
        return make_ideal(X.ring(), {Polynomial<F>::constant(X.ring(), F::one())});
    }
    auto gens = X.ideal().gens;
    auto minors = poly_minors(jacobian_matrix(gens), X.codim());
    for (auto& m : minors)
        if (!m.is_zero()) gens.push_back(std::move(m));
    return make_ideal(X.ring(), std::move(gens));
}

// ---- random linear data ----

template <class F>
Polynomial<F> random_linear_form(const RingPtr<F>& ring, RandomSource& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Term<F>> terms;
        for (int i = 0; i < ring->arity(); ++i) {
            int64_t c = rng.small_int();
            if (c != 0) terms.push_back({ring->field.from_int(c), Monomial::variable(i)});
        }
        if (!terms.empty()) return Polynomial<F>::from_terms(ring, std::move(terms));
    }
    throw std::runtime_error("random linear form sampling failed");
}

// Generic hyperplane slices; reduces dimension by `count` for generic draws.
template <class F>
ProjectiveVariety<F> slice_with_random_hyperplanes(const ProjectiveVariety<F>& X, int count,
                                                   RandomSource& rng,
                                                   const GBBudget& budget = GBBudget()) {
    auto gens = X.ideal().gens;
    for (int i = 0; i < count; ++i) gens.push_back(random_linear_form(X.ring(), rng));
    return ProjectiveVariety<F>(make_ideal(X.ring(), std::move(gens)), budget);
}

// ---- rational points of zero-dimensional systems (exact, best effort) ----
//
// The point sampler slices a variety down to dimension zero with random
// hyperplanes and extracts the rational solutions. Rational roots of the
// univariate eliminants are found exactly for degrees one and two, and through
// a divisor search elsewhere, so a slice through irrational points simply
// reports no solutions and the sampler redraws. This is a sampler, not a
// decision procedure: a miss costs a retry, never a wrong answer.

namespace detail {

// Coefficients (low degree first) of a polynomial that uses only `var`.
template <class F>
std::optional<std::vector<typename F::Elem>> univariate_coeffs(const Polynomial<F>& p, int var) {
    std::vector<typename F::Elem> coeffs;
    for (const auto& t : p.terms()) {
        for (int v = 0; v < p.ring()->arity(); ++v)
            if (v != var && t.m.e[v] != 0) return std::nullopt;
        uint32_t d = t.m.e[var];
        if (coeffs.size() <= d) coeffs.resize(d + 1, F::zero());
        coeffs[d] = t.c;
    }
    while (!coeffs.empty() && p.ring()->field.is_zero(coeffs.back())) coeffs.pop_back();
    return coeffs;
}

inline std::vector<mpq_class> uni_trim(std::vector<mpq_class> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Remainder of a by b, coefficients low-first, over Q.
inline std::vector<mpq_class> uni_rem(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
    while (a.size() >= b.size() && !b.empty()) {
        mpq_class q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        a = uni_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

inline std::vector<mpq_class> uni_gcd(std::vector<mpq_class> a, std::vector<mpq_class> b) {
    a = uni_trim(std::move(a));
    b = uni_trim(std::move(b));
    while (!b.empty()) {
        auto r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        mpq_class lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

inline std::vector<mpq_class> uni_derivative(const std::vector<mpq_class>& a) {
    std::vector<mpq_class> d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(mpq_class(static_cast<long>(i)) * a[i]);
    return uni_trim(std::move(d));
}

// Divisors of |n|, found by trial division. Large prime cofactors beyond the
// trial bound contribute only themselves, so the list can be incomplete; a
// missed divisor merely hides a root from the sampler.
inline std::vector<mpz_class> budgeted_divisors(mpz_class n, size_t cap = 4096) {
    n = abs(n);
    std::vector<std::pair<mpz_class, int>> factors;
    if (n == 0) return {};
    for (mpz_class p = 2; p * p <= n && p < 100000; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) factors.push_back({p, e});
    }
    if (n > 1) factors.push_back({n, 1});
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * pk);
                if (divs.size() > cap) return divs;
            }
        }
    }
    return divs;
}

// All rational roots for degree <= 2, a rational-root-theorem search beyond.
inline std::vector<mpq_class> rational_roots(std::vector<mpq_class> f) {
    f = uni_trim(std::move(f));
    std::vector<mpq_class> roots;
    auto finish = [&roots]() {
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        return roots;
    };
    if (f.size() <= 1) return finish(); // zero or constant: no isolated roots
    // Squarefree reduction keeps the divisor search small.
    auto der = uni_derivative(f);
    auto g = uni_gcd(f, der);
    if (g.size() > 1) {
        // Exact deflation f / gcd(f, f').
        std::vector<mpq_class> q(f.size() - g.size() + 1, 0);
        std::vector<mpq_class> rem = f;
        for (size_t i = q.size(); i-- > 0;) {
            if (rem.size() < g.size() + i) continue;
            q[i] = rem[g.size() - 1 + i] / g.back();
            for (size_t j = 0; j < g.size(); ++j) rem[i + j] -= q[i] * g[j];
        }
        f = uni_trim(std::move(q));
        if (f.size() <= 1) return finish();
    }
    if (f[0] == 0) {
        roots.push_back(0);
        std::vector<mpq_class> shifted(f.begin() + 1, f.end());
        f = std::move(shifted);
        if (f.size() <= 1) return finish();
    }
    // Clear denominators to a primitive integer polynomial.
    mpz_class den = 1;
    for (const auto& c : f) den = lcm(den, c.get_den());
    std::vector<mpz_class> z;
    for (const auto& c : f) z.push_back(mpz_class(c * den));
    mpz_class content = 0;
    for (const auto& c : z) content = gcd(content, c);
    if (content > 1)
        for (auto& c : z) c /= content;
    size_t deg = z.size() - 1;
    auto eval = [&](const mpq_class& x) {
        mpq_class acc = 0;
        for (size_t i = z.size(); i-- > 0;) acc = acc * x + mpq_class(z[i]);
        return acc;
    };
    if (deg == 1) {
        roots.push_back(mpq_class(-z[0]) / mpq_class(z[1]));
        return finish();
    }
    if (deg == 2) {
        mpz_class disc = z[1] * z[1] - 4 * z[0] * z[2];
        if (disc >= 0) {
            mpz_class s = sqrt(disc);
            if (s * s == disc) {
                roots.push_back(mpq_class(-z[1] + s) / mpq_class(2 * z[2]));
                if (s != 0) roots.push_back(mpq_class(-z[1] - s) / mpq_class(2 * z[2]));
            }
        }
        return finish();
    }
    auto ps = budgeted_divisors(z[0]);
    auto qs = budgeted_divisors(z[deg]);
    for (const auto& p : ps)
        for (const auto& q : qs) {
            mpq_class cand(p, q);
            cand.canonicalize();
            if (eval(cand) == 0) roots.push_back(cand);
            cand = -cand;
            if (eval(cand) == 0) roots.push_back(cand);
        }
    return finish();
}

// Assignments (one field element per ring variable) solving the affine system.
// Best effort: systems of positive dimension or with untraceable roots yield
// an empty list. `cap` bounds the number of solutions explored.
template <class F>
std::vector<std::vector<typename F::Elem>> solve_affine(const Ideal<F>& I, size_t cap,
                                                        const GBBudget& budget) {
    if constexpr (!std::is_same_v<typename F::Elem, mpq_class>) {
        (void)I; (void)cap; (void)budget;
        throw std::domain_error("exact point solving is implemented over Q only");
    } else {
    const RingPtr<F>& ring = I.ring;
    int m = ring->arity();
    std::vector<Polynomial<F>> live;
    for (const auto& g : I.gens) {
        if (g.is_zero()) continue;
        if (g.degree() == 0) return {}; // nonzero constant: inconsistent
        live.push_back(g);
    }
    if (live.empty()) return {}; // positive-dimensional: not a finite set
    auto gb = groebner(make_ideal(ring, live), budget);
    if (gb.is_unit_ideal()) return {};
    // Univariate eliminant in the last variable.
    std::vector<std::vector<mpq_class>> uni;
    if (m == 1) {
        for (const auto& g : gb.elements)
            if (auto c = univariate_coeffs(g, 0)) uni.push_back(*c);
    } else {
        Ideal<F> elim = eliminate(make_ideal(ring, gb.elements), m - 1, budget);
        for (const auto& g : elim.gens)
            if (auto c = univariate_coeffs(g, m - 1)) uni.push_back(*c);
    }
    if (uni.empty()) return {}; // not zero-dimensional in the last variable
    std::vector<mpq_class> elimpoly = uni[0];
    for (size_t i = 1; i < uni.size(); ++i) elimpoly = uni_gcd(elimpoly, uni[i]);
    auto roots = rational_roots(std::move(elimpoly));
    std::vector<std::vector<mpq_class>> out;
    if (m == 1) {
        for (const auto& r : roots) {
            out.push_back({r});
            if (out.size() >= cap) break;
        }
        return out;
    }
    RingPtr<F> head = make_ring(ring->field, std::vector<std::string>(
                                                 ring->vars.begin(), ring->vars.end() - 1));
    for (const auto& r : roots) {
        // Substitute the root and recurse on one fewer variable.
        std::vector<Polynomial<F>> images;
        for (int v = 0; v + 1 < m; ++v) images.push_back(Polynomial<F>::variable(ring, v));
        images.push_back(Polynomial<F>::constant(ring, r));
        std::vector<Polynomial<F>> reduced;
        for (const auto& g : gb.elements) {
            Polynomial<F> s = g.substitute(ring, images);
            if (s.is_zero()) continue;
            std::vector<int> vm(m);
            for (int v = 0; v + 1 < m; ++v) vm[v] = v;
            vm[m - 1] = 0; // unused: substituted polynomials no longer mention it
            reduced.push_back(s.map_vars(head, vm));
        }
        auto sub = solve_affine(make_ideal(head, std::move(reduced)), cap - out.size(), budget);
        for (auto& asg : sub) {
            asg.push_back(r);
            out.push_back(std::move(asg));
            if (out.size() >= cap) return out;
        }
    }
    return out;
    }
}

} // namespace detail

// Rational points of a zero-dimensional projective scheme, chart by chart
// (chart i fixes x_i = 1 and x_j = 0 for j < i, so no point appears twice).
// Best effort: points whose coordinates root untraceably large integers are
// missed, which callers absorb by retrying with a different slice.
template <class F>
std::vector<PointP<F>> solve_projective_points(const Ideal<F>& I, size_t cap = 64,
                                               const GBBudget& budget = GBBudget()) {
    const RingPtr<F>& ring = I.ring;
    int n = ring->arity();
    std::vector<PointP<F>> pts;
    for (int chart = 0; chart < n && pts.size() < cap; ++chart) {
        std::vector<std::string> tail_vars(ring->vars.begin() + chart + 1, ring->vars.end());
        RingPtr<F> affine = tail_vars.empty() ? nullptr : make_ring(ring->field, tail_vars);
        std::vector<Polynomial<F>> gens;
        bool inconsistent = false;
        for (const auto& g : I.gens) {
            std::vector<Polynomial<F>> images;
            for (int v = 0; v < n; ++v) {
                if (v < chart) images.push_back(Polynomial<F>::zero(ring));
                else if (v == chart) images.push_back(Polynomial<F>::constant(ring, F::one()));
                else images.push_back(Polynomial<F>::variable(ring, v));
            }
            Polynomial<F> s = g.substitute(ring, images);
            if (s.is_zero()) continue;
            if (s.degree() == 0) { inconsistent = true; break; }
            if (affine) {
                std::vector<int> vm(n, 0);
                for (int v = chart + 1; v < n; ++v) vm[v] = v - chart - 1;
                gens.push_back(s.map_vars(affine, vm));
            }
        }
        if (inconsistent) continue;
        if (!affine) {
            // Last chart: the single candidate point (0:...:0:1).
            std::vector<typename F::Elem> coords(n, F::zero());
            coords[n - 1] = F::one();
            pts.emplace_back(ring->field, std::move(coords));
            continue;
        }
        auto sols = detail::solve_affine(make_ideal(affine, std::move(gens)),
                                         cap - pts.size(), budget);
        for (const auto& asg : sols) {
            std::vector<typename F::Elem> coords(n, F::zero());
            coords[chart] = F::one();
            for (int v = chart + 1; v < n; ++v) coords[v] = asg[v - chart - 1];
            pts.emplace_back(ring->field, std::move(coords));
        }
    }
    return pts;
}

struct SampleOptions {
    int retries = 200;          // fresh random slices drawn before giving up
    bool require_smooth = false;
    size_t solve_cap = 16;      // solutions extracted per slice
};

// Seeded random rational point on X: slice with dim X random hyperplanes and
// solve the resulting finite system; redraw until a (smooth, if requested)
// rational point appears. Deterministic per RandomSource state.
template <class F>
PointP<F> sample_point(const ProjectiveVariety<F>& X, RandomSource& rng,
                       const SampleOptions& opts = SampleOptions(),
                       const GBBudget& budget = GBBudget()) {
    if (X.is_empty()) throw std::domain_error("sampling from an empty variety");
    if (X.is_linear()) {
        auto forms = X.gb().elements;
        std::vector<std::vector<typename F::Elem>> rows;
        for (const auto& f : forms) {
            std::vector<typename F::Elem> row(X.ambient_dim() + 1, F::zero());
            for (const auto& t : f.terms())
                for (int v = 0; v <= X.ambient_dim(); ++v)
                    if (t.m.e[v]) row[v] = t.c;
            rows.push_back(std::move(row));
        }
        auto span = LinearSubspace<F>::from_cutting_forms(X.ring()->field, rows, X.ambient_dim());
        return span.random_point(rng);
    }
    for (int attempt = 0; attempt < opts.retries; ++attempt) {
        auto gens = X.ideal().gens;
        for (int i = 0; i < X.dim(); ++i) gens.push_back(random_linear_form(X.ring(), rng));
        auto pts = solve_projective_points(make_ideal(X.ring(), std::move(gens)),
                                           opts.solve_cap, budget);
        for (const auto& p : pts) {
            if (!X.contains(p)) continue;
            if (opts.require_smooth && !X.is_smooth_point(p)) continue;
            return p;
        }
    }
    throw std::runtime_error("point sampling failed after retry budget");
}

} // namespace pdual
