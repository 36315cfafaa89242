#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pdual/variety.hpp"

namespace pdual {

// Names for the dual coordinate block. Duals of x-named varieties live in
// u-variables and vice versa, so a double dual lands back in the x-names.
inline std::vector<std::string> dual_block_names(const std::vector<std::string>& taken) {
    std::string stem = "u";
    for (const auto& v : taken)
        if (!v.empty() && v[0] == 'u') { stem = "x"; break; }
    return fresh_names(taken, stem, static_cast<int>(taken.size()));
}

// Substitute x_i -> sum_j M[i][j] x_j into every generator: the result cuts
// out M^{-1} . V(I).
template <class F>
Ideal<F> apply_linear_change(const Ideal<F>& I, const Mat<F>& M) {
    const RingPtr<F>& ring = I.ring;
    int n = ring->arity();
    if (M.rows() != n || M.cols() != n) throw std::invalid_argument("change-of-coordinates size");
    std::vector<Polynomial<F>> images;
    for (int i = 0; i < n; ++i) {
        std::vector<Term<F>> terms;
        for (int j = 0; j < n; ++j)
            if (!ring->field.is_zero(M.at(i, j)))
                terms.push_back({M.at(i, j), Monomial::variable(j)});
        images.push_back(Polynomial<F>::from_terms(ring, std::move(terms)));
    }
    std::vector<Polynomial<F>> gens;
    for (const auto& g : I.gens) gens.push_back(g.substitute(ring, images));
    return make_ideal(ring, std::move(gens));
}

// Conormal variety I(X/P^N) in the ring [x-block, u-block]: pairs (x, H) with
// x in X and H a tangent hyperplane. Generators: I(X) plus the (c+1)-minors of
// the Jacobian stacked with the u-row, c = codim X; the rank condition only
// expresses tangency where the Jacobian attains rank c, so the ideal is
// saturated by a Jacobian c-minor that is nonzero on X, which removes the
// components over the singular locus and the x = 0 cone vertex in one pass.
template <class F>
Ideal<F> conormal_variety(const ProjectiveVariety<F>& X, const GBBudget& budget = GBBudget()) {
    if (X.is_empty()) throw std::domain_error("conormal of the empty variety");
    if (X.is_linear()) throw std::domain_error("conormal of a linear space is undefined");
    const RingPtr<F>& ring = X.ring();
    int n = ring->arity();
    int c = X.codim();
    const auto& gens = X.ideal().gens;

    // Pick a c-minor of the Jacobian that does not vanish identically on X.
    PolyMat<F> jac = jacobian_matrix(gens);
    auto cminors = poly_minors(jac, c);
    const Polynomial<F>* sigma = nullptr;
    for (const auto& m : cminors) {
        if (m.is_zero()) continue;
        if (normal_form(m, X.gb()).is_zero()) continue;
        if (radical_membership(m, X.ideal(), budget)) continue;
        sigma = &m;
        break;
    }
    if (!sigma)
        throw std::domain_error("conormal: variety is singular along every chart "
                                "(no Jacobian minor survives on X)");

    RingPtr<F> big = extend_ring_back(ring, dual_block_names(ring->vars));
    std::vector<Polynomial<F>> congens;
    for (const auto& g : gens) congens.push_back(shift_into(g, big, 0));

    // Stack each c-subset of Jacobian rows with the u-row and take maximal minors.
    PolyMat<F> jac_big;
    for (const auto& row : jac) {
        std::vector<Polynomial<F>> r;
        for (const auto& entry : row) r.push_back(shift_into(entry, big, 0));
        jac_big.push_back(std::move(r));
    }
    std::vector<Polynomial<F>> urow;
    for (int j = 0; j < n; ++j) urow.push_back(Polynomial<F>::variable(big, n + j));

    int g = static_cast<int>(jac_big.size());
    std::vector<int> rs(c);
    for (int i = 0; i < c; ++i) rs[i] = i;
    auto next_subset = [](std::vector<int>& s, int limit) {
        int k = static_cast<int>(s.size());
        int i = k - 1;
        while (i >= 0 && s[i] == limit - k + i) --i;
        if (i < 0) return false;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
        return true;
    };
    do {
        PolyMat<F> stacked;
        for (int r : rs) stacked.push_back(jac_big[r]);
        stacked.push_back(urow);
        for (auto& m : poly_minors(stacked, c + 1))
            if (!m.is_zero()) congens.push_back(std::move(m));
    } while (next_subset(rs, g));

    Ideal<F> raw = make_ideal(big, std::move(congens));
    Ideal<F> sat = saturate_by_poly(raw, shift_into(*sigma, big, 0), budget);
    return make_ideal(big, groebner(sat, budget).elements);
}

// Projective dual X^*: eliminate the x-block from the conormal variety. A
// principal result is replaced by its squarefree part, so hypersurface duals
// come back reduced and their point multiplicities are the classical ones.
template <class F>
ProjectiveVariety<F> dual_variety(const ProjectiveVariety<F>& X,
                                  const GBBudget& budget = GBBudget()) {
    int n = X.ring()->arity();
    Ideal<F> con = conormal_variety(X, budget);
    Ideal<F> elim = eliminate_to_tail(con, n, budget);
    auto gb = groebner(elim, budget);
    std::vector<Polynomial<F>> gens;
    if (gb.elements.size() == 1)
        gens.push_back(squarefree_part(gb.elements[0], budget));
    else
        gens = gb.elements;
    return ProjectiveVariety<F>(make_ideal(elim.ring, std::move(gens)), budget);
}

// Dual defect def(X) = codim(X^*) - 1, read off a computed dual.
template <class F>
int dual_defect(const ProjectiveVariety<F>& dual) { return dual.codim() - 1; }

// Embedded projective tangent cone C_z(Z), computed in coordinates moved so z
// becomes (1:0:...:0): dehomogenize there, take initial forms at the origin,
// and read the forms back as a cone with vertex at the moved z. The cone is
// reported in the moved coordinates together with the change of coordinates.
template <class F>
struct TangentCone {
    ProjectiveVariety<F> cone; // in moved coordinates (same variable names)
    Mat<F> change;             // B with x_old = B . x_new; column 0 is z
    Mat<F> change_inv;

    // The cone as a subvariety of the original coordinates.
    Ideal<F> cone_in_original_coords() const {
        return apply_linear_change(cone.ideal(), change_inv);
    }
};

template <class F>
TangentCone<F> tangent_cone(const ProjectiveVariety<F>& Z, const PointP<F>& z,
                            const GBBudget& budget = GBBudget()) {
    if (!Z.contains(z)) throw std::domain_error("tangent cone: point does not lie on the variety");
    const RingPtr<F>& ring = Z.ring();
    const F& field = ring->field;
    int n = ring->arity();

    int pivot = 0;
    while (pivot < n && field.is_zero(z.coords()[pivot])) ++pivot;
    Mat<F> B(field, n, n);
    for (int i = 0; i < n; ++i) B.at(i, 0) = z.coords()[i];
    int col = 1;
    for (int j = 0; j < n; ++j) {
        if (j == pivot) continue;
        B.at(j, col++) = F::one();
    }
    Mat<F> Binv = mat_inverse(B);

    Ideal<F> moved = apply_linear_change(Z.ideal(), B);

    // Dehomogenize at the moved point: first variable = 1.
    RingPtr<F> affine = tail_ring(ring, 1);
    std::vector<Polynomial<F>> affgens;
    for (const auto& gmv : moved.gens) {
        std::vector<Polynomial<F>> images;
        images.push_back(Polynomial<F>::constant(ring, F::one()));
        for (int v = 1; v < n; ++v) images.push_back(Polynomial<F>::variable(ring, v));
        Polynomial<F> d = gmv.substitute(ring, images);
        if (d.is_zero()) continue;
        std::vector<int> vm(n, 0);
        for (int v = 1; v < n; ++v) vm[v] = v - 1;
        affgens.push_back(d.map_vars(affine, vm));
    }

    Ideal<F> forms = initial_forms_at_origin(make_ideal(affine, std::move(affgens)), budget);
    std::vector<Polynomial<F>> conegens;
    for (const auto& f : forms.gens) conegens.push_back(shift_into(f, ring, 1));
    return TangentCone<F>{ProjectiveVariety<F>(make_ideal(ring, std::move(conegens)), budget),
                          std::move(B), std::move(Binv)};
}

// Hilbert-Samuel multiplicity of Z at z: the degree of the tangent cone.
template <class F>
int64_t multiplicity_at(const ProjectiveVariety<F>& Z, const PointP<F>& z,
                        const GBBudget& budget = GBBudget()) {
    return tangent_cone(Z, z, budget).cone.degree();
}

} // namespace pdual
