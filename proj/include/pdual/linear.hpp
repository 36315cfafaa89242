#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pdual/matrix.hpp"
#include "pdual/rng.hpp"

namespace pdual {

// Projective point: coordinates scaled so the first nonzero entry is 1.
template <class F>
class PointP {
public:
    using Elem = typename F::Elem;

    PointP(F field, std::vector<Elem> coords) : field_(field), x_(std::move(coords)) {
        int lead = -1;
        for (size_t i = 0; i < x_.size(); ++i)
            if (!field_.is_zero(x_[i])) { lead = static_cast<int>(i); break; }
        if (lead < 0) throw std::invalid_argument("zero vector is not a projective point");
        Elem inv = field_.inv(x_[lead]);
        for (auto& c : x_) c = field_.mul(c, inv);
    }

    int ambient_dim() const { return static_cast<int>(x_.size()) - 1; }
    const std::vector<Elem>& coords() const { return x_; }
    const F& field() const { return field_; }

    bool operator==(const PointP& o) const {
        if (x_.size() != o.x_.size()) return false;
        for (size_t i = 0; i < x_.size(); ++i)
            if (!field_.equal(x_[i], o.x_[i])) return false;
        return true;
    }
    bool operator!=(const PointP& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < x_.size(); ++i) {
            if (i) s += ":";
            s += field_.to_string(x_[i]);
        }
        return s + ")";
    }

private:
    F field_;
    std::vector<Elem> x_;
};

// Linear subspace of P^N, held as canonical RREF spanning rows; the cutting
// forms (the RREF kernel basis) are derived on demand. Two subspaces are equal
// iff their spanning matrices are identical.
template <class F>
class LinearSubspace {
public:
    using Elem = typename F::Elem;

    static LinearSubspace from_spanning_points(F field, std::vector<std::vector<Elem>> pts) {
        if (pts.empty()) throw std::invalid_argument("subspace needs at least one spanning point");
        Mat<F> m = Mat<F>::from_rows(field, pts);
        m.rref();
        m.trim_zero_rows();
        if (m.rows() == 0) throw std::invalid_argument("spanning points were all zero");
        return LinearSubspace(field, std::move(m));
    }

    // The empty subspace (dim -1) of P^ambient_dim.
    static LinearSubspace empty_space(F field, int ambient_dim) {
        if (ambient_dim < 0) throw std::invalid_argument("bad ambient dimension");
        return LinearSubspace(field, Mat<F>(field, 0, ambient_dim + 1));
    }

    // Forms are coefficient vectors of linear equations cutting the subspace.
    static LinearSubspace from_cutting_forms(F field, std::vector<std::vector<Elem>> forms,
                                             int ambient_dim) {
        int n = ambient_dim + 1;
        Mat<F> m = Mat<F>::from_rows(field, forms);
        if (m.rows() == 0) m = Mat<F>(field, 0, n);
        if (m.cols() != n && m.rows() > 0) throw std::invalid_argument("form width mismatch");
        if (m.rows() == 0) {
            // No constraints: the whole space.
            Mat<F> full(field, n, n);
            for (int i = 0; i < n; ++i) full.at(i, i) = F::one();
            return LinearSubspace(field, std::move(full));
        }
        auto ker = m.kernel_basis();
        if (ker.empty()) return empty_space(field, ambient_dim);
        return from_spanning_points(field, ker);
    }

    int ambient_dim() const { return span_.cols() - 1; }
    int dim() const { return span_.rows() - 1; }
    int codim() const { return ambient_dim() - dim(); }

    const Mat<F>& spanning_rows() const { return span_; }

    // Canonical RREF basis of the annihilator.
    std::vector<std::vector<Elem>> cutting_forms() const {
        auto ker = span_.kernel_basis();
        Mat<F> m = Mat<F>::from_rows(span_.field(), ker);
        if (m.rows() == 0) return {};
        m.rref();
        m.trim_zero_rows();
        std::vector<std::vector<Elem>> out;
        for (int r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
        return out;
    }

    // Annihilator under the standard pairing; perp of the whole space is the
    // empty subspace and vice versa, so perp is an involution on all inputs.
    LinearSubspace perp() const {
        auto forms = cutting_forms();
        if (forms.empty()) return empty_space(span_.field(), ambient_dim());
        return from_spanning_points(span_.field(), forms);
    }

    LinearSubspace join(const LinearSubspace& o) const {
        std::vector<std::vector<Elem>> rows;
        for (int r = 0; r < span_.rows(); ++r) rows.push_back(span_.row(r));
        for (int r = 0; r < o.span_.rows(); ++r) rows.push_back(o.span_.row(r));
        if (rows.empty()) return empty_space(span_.field(), ambient_dim());
        return from_spanning_points(span_.field(), rows);
    }

    static LinearSubspace single_point(const PointP<F>& p) {
        return from_spanning_points(p.field(), {p.coords()});
    }

    bool contains(const PointP<F>& p) const {
        std::vector<std::vector<Elem>> rows;
        for (int r = 0; r < span_.rows(); ++r) rows.push_back(span_.row(r));
        rows.push_back(p.coords());
        Mat<F> m = Mat<F>::from_rows(span_.field(), rows);
        return m.rank() == span_.rows();
    }

    bool contains(const LinearSubspace& o) const {
        std::vector<std::vector<Elem>> rows;
        for (int r = 0; r < span_.rows(); ++r) rows.push_back(span_.row(r));
        for (int r = 0; r < o.span_.rows(); ++r) rows.push_back(o.span_.row(r));
        Mat<F> m = Mat<F>::from_rows(span_.field(), rows);
        return m.rank() == span_.rows();
    }

    // Seeded random point; spanning combinations are drawn until nonzero.
    PointP<F> random_point(RandomSource& rng) const {
        if (dim() < 0) throw std::domain_error("random point of the empty subspace");
        const F& k = span_.field();
        for (int attempt = 0; attempt < 64; ++attempt) {
            std::vector<Elem> v(span_.cols(), F::zero());
            for (int r = 0; r < span_.rows(); ++r) {
                Elem c = k.from_int(rng.small_int());
                for (int col = 0; col < span_.cols(); ++col)
                    v[col] = k.add(v[col], k.mul(c, span_.at(r, col)));
            }
            bool zero = true;
            for (const auto& c : v) if (!k.is_zero(c)) { zero = false; break; }
            if (!zero) return PointP<F>(k, std::move(v));
        }
        throw std::runtime_error("random point sampling failed");
    }

    // Cutting forms as linear polynomials of `ring`.
    std::vector<Polynomial<F>> cutting_ideal_gens(const RingPtr<F>& ring) const {
        if (ring->arity() != span_.cols()) throw std::invalid_argument("ring arity mismatch");
        std::vector<Polynomial<F>> out;
        for (const auto& form : cutting_forms()) {
            std::vector<Term<F>> terms;
            for (int i = 0; i < ring->arity(); ++i)
                if (!ring->field.is_zero(form[i]))
                    terms.push_back({form[i], Monomial::variable(i)});
            out.push_back(Polynomial<F>::from_terms(ring, std::move(terms)));
        }
        return out;
    }

    bool operator==(const LinearSubspace& o) const {
        if (span_.rows() != o.span_.rows() || span_.cols() != o.span_.cols()) return false;
        for (int r = 0; r < span_.rows(); ++r)
            for (int c = 0; c < span_.cols(); ++c)
                if (!span_.field().equal(span_.at(r, c), o.span_.at(r, c))) return false;
        return true;
    }

private:
    LinearSubspace(F field, Mat<F> span) : span_(std::move(span)) { (void)field; }

    Mat<F> span_;
};

// Hyperplane {sum z_i x_i = 0} determined by a dual-space point.
template <class F>
Polynomial<F> hyperplane_form(const RingPtr<F>& ring, const PointP<F>& dual_point) {
    if (ring->arity() != dual_point.ambient_dim() + 1)
        throw std::invalid_argument("ring arity mismatch");
    std::vector<Term<F>> terms;
    for (int i = 0; i < ring->arity(); ++i)
        if (!ring->field.is_zero(dual_point.coords()[i]))
            terms.push_back({dual_point.coords()[i], Monomial::variable(i)});
    return Polynomial<F>::from_terms(ring, std::move(terms));
}

} // namespace pdual
