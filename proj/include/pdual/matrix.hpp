#pragma once

#include <stdexcept>
#include <vector>

#include "pdual/polynomial.hpp"

namespace pdual {

// Dense matrix over a field. Row reduction is exact; RREF output is the
// canonical representative (leading entries 1, pivots cleared), so two row
// spaces are equal iff their RREFs are identical.
template <class F>
class Mat {
public:
    using Elem = typename F::Elem;

    Mat() : rows_(0), cols_(0) {}
    Mat(F field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * cols, F::zero()) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const F& field() const { return field_; }

    Elem& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Elem& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<Elem> row(int r) const {
        std::vector<Elem> out(cols_);
        for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
        return out;
    }

    void set_row(int r, const std::vector<Elem>& v) {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row width mismatch");
        for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
    }

    static Mat from_rows(F field, const std::vector<std::vector<Elem>>& rows) {
        if (rows.empty()) return Mat(field, 0, 0);
        Mat m(field, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<int>(r), rows[r]);
        return m;
    }

    // In-place reduced row echelon form; returns rank.
    int rref() {
        int rank = 0;
        for (int c = 0; c < cols_ && rank < rows_; ++c) {
            int pivot = -1;
            for (int r = rank; r < rows_; ++r)
                if (!field_.is_zero(at(r, c))) { pivot = r; break; }
            if (pivot < 0) continue;
            swap_rows(pivot, rank);
            Elem inv = field_.inv(at(rank, c));
            for (int cc = c; cc < cols_; ++cc) at(rank, cc) = field_.mul(at(rank, cc), inv);
            for (int r = 0; r < rows_; ++r) {
                if (r == rank || field_.is_zero(at(r, c))) continue;
                Elem f = at(r, c);
                for (int cc = c; cc < cols_; ++cc)
                    at(r, cc) = field_.sub(at(r, cc), field_.mul(f, at(rank, cc)));
            }
            ++rank;
        }
        return rank;
    }

    int rank() const {
        Mat copy = *this;
        return copy.rref();
    }

    // Drops all-zero rows; assumes the matrix is already in RREF.
    void trim_zero_rows() {
        std::vector<Elem> out;
        int kept = 0;
        for (int r = 0; r < rows_; ++r) {
            bool zero = true;
            for (int c = 0; c < cols_; ++c)
                if (!field_.is_zero(at(r, c))) { zero = false; break; }
            if (zero) continue;
            for (int c = 0; c < cols_; ++c) out.push_back(at(r, c));
            ++kept;
        }
        a_ = std::move(out);
        rows_ = kept;
    }

    // Basis of the right kernel {v : A v = 0}, canonical under RREF.
    std::vector<std::vector<Elem>> kernel_basis() const {
        Mat red = *this;
        red.rref();
        std::vector<int> pivot_col_of_row;
        std::vector<bool> is_pivot(cols_, false);
        for (int r = 0; r < red.rows_; ++r) {
            int pc = -1;
            for (int c = 0; c < cols_; ++c)
                if (!field_.is_zero(red.at(r, c))) { pc = c; break; }
            if (pc < 0) break;
            pivot_col_of_row.push_back(pc);
            is_pivot[pc] = true;
        }
        std::vector<std::vector<Elem>> basis;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Elem> v(cols_, F::zero());
            v[free] = F::one();
            for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
                v[pivot_col_of_row[r]] = field_.neg(red.at(static_cast<int>(r), free));
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }

    F field_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

// ---- polynomial matrices ----

template <class F>
using PolyMat = std::vector<std::vector<Polynomial<F>>>;

template <class F>
PolyMat<F> jacobian_matrix(const std::vector<Polynomial<F>>& gens) {
    if (gens.empty()) throw std::invalid_argument("jacobian of empty system");
    const RingPtr<F>& ring = gens[0].ring();
    PolyMat<F> j;
    for (const auto& g : gens) {
        if (!same_ring(g.ring(), ring)) throw std::invalid_argument("ring mismatch");
        std::vector<Polynomial<F>> row;
        for (int v = 0; v < ring->arity(); ++v) row.push_back(g.derivative(v));
        j.push_back(std::move(row));
    }
    return j;
}

template <class F>
Polynomial<F> poly_determinant(const PolyMat<F>& m) {
    size_t n = m.size();
    if (n == 0) throw std::invalid_argument("empty determinant");
    const RingPtr<F>& ring = m[0][0].ring();
    if (n == 1) return m[0][0];
    Polynomial<F> det = Polynomial<F>::zero(ring);
    // Laplace along the first row; minor sizes stay small here.
    for (size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        PolyMat<F> sub;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Polynomial<F>> row;
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            sub.push_back(std::move(row));
        }
        Polynomial<F> contrib = m[0][c] * poly_determinant(sub);
        det = (c % 2 == 0) ? det + contrib : det - contrib;
    }
    return det;
}

// All k x k minors taken from the given rows; row/column subsets enumerated in
// lexicographic order so output order is reproducible.
template <class F>
std::vector<Polynomial<F>> poly_minors(const PolyMat<F>& m, int k) {
    int nr = static_cast<int>(m.size());
    int nc = nr ? static_cast<int>(m[0].size()) : 0;
    std::vector<Polynomial<F>> out;
    if (k <= 0 || k > nr || k > nc) return out;
    std::vector<int> rs(k), cs(k);
    for (int i = 0; i < k; ++i) rs[i] = i;
    auto next_subset = [](std::vector<int>& s, int n) {
        int k2 = static_cast<int>(s.size());
        int i = k2 - 1;
        while (i >= 0 && s[i] == n - k2 + i) --i;
        if (i < 0) return false;
        ++s[i];
        for (int j = i + 1; j < k2; ++j) s[j] = s[j - 1] + 1;
        return true;
    };
    do {
        for (int i = 0; i < k; ++i) cs[i] = i;
        do {
            PolyMat<F> sub;
            for (int r : rs) {
                std::vector<Polynomial<F>> row;
                for (int c : cs) row.push_back(m[r][c]);
                sub.push_back(std::move(row));
            }
            out.push_back(poly_determinant(sub));
        } while (next_subset(cs, nc));
    } while (next_subset(rs, nr));
    return out;
}

// ---- square-matrix utilities over the coefficient field ----

template <class F>
Mat<F> mat_transpose(const Mat<F>& m) {
    Mat<F> t(m.field(), m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
    return t;
}

template <class F>
Mat<F> mat_inverse(const Mat<F>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows();
    Mat<F> aug(m.field(), n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = F::one();
    }
    aug.rref();
    // Singular input leaves a non-identity left block (pivots escape into the
    // adjoined identity columns).
    const F& k = m.field();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            bool want_one = (r == c);
            if (want_one ? !k.equal(aug.at(r, c), F::one()) : !k.is_zero(aug.at(r, c)))
                throw std::invalid_argument("matrix is singular");
        }
    Mat<F> inv(m.field(), n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

template <class F>
std::vector<typename F::Elem> mat_apply(const Mat<F>& m, const std::vector<typename F::Elem>& v) {
    if (static_cast<int>(v.size()) != m.cols()) throw std::invalid_argument("vector width mismatch");
    std::vector<typename F::Elem> out(m.rows(), F::zero());
    const F& k = m.field();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out[r] = k.add(out[r], k.mul(m.at(r, c), v[c]));
    return out;
}

} // namespace pdual
