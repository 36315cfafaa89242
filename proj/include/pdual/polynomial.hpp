#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdual/ring.hpp"

namespace pdual {

template <class F>
struct Term {
    typename F::Elem c;
    Monomial m;
};

// Terms are kept strictly descending in the ring's grevlex order with no zero
// coefficients; every operation restores that invariant.
template <class F>
class Polynomial {
public:
    using Elem = typename F::Elem;

    Polynomial() = default;
    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr<F> ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr<F> ring, Elem c) {
        Polynomial p(ring);
        if (!ring->field.is_zero(c)) p.terms_.push_back({std::move(c), Monomial::one()});
        return p;
    }

    static Polynomial variable(RingPtr<F> ring, int i, uint16_t exp = 1) {
        if (i < 0 || i >= ring->arity()) throw std::invalid_argument("variable index out of range");
        Polynomial p(ring);
        if (exp == 0) return constant(ring, F::one());
        p.terms_.push_back({F::one(), Monomial::variable(i, exp)});
        return p;
    }

    static Polynomial from_terms(RingPtr<F> ring, std::vector<Term<F>> terms) {
        Polynomial p(ring);
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Term<F>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.deg));
        return d;
    }

    int min_degree() const {
        if (terms_.empty()) return -1;
        uint32_t d = terms_[0].m.deg;
        for (const auto& t : terms_) d = std::min(d, t.m.deg);
        return static_cast<int>(d);
    }

    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.m.deg != terms_[0].m.deg) return false;
        return true;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
    }

    Polynomial degree_part(uint32_t d) const {
        Polynomial r(ring_);
        for (const auto& t : terms_)
            if (t.m.deg == d) r.terms_.push_back(t);
        return r;
    }

    Polynomial lowest_degree_part() const {
        if (terms_.empty()) return *this;
        return degree_part(static_cast<uint32_t>(min_degree()));
    }

    Elem coefficient_of(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.m == m) return t.c;
        return F::zero();
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.c = ring_->field.neg(t.c);
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        check_ring(o);
        MonomialOrder ord = ring_->grevlex();
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = ord.compare(terms_[i].m, o.terms_[j].m);
            if (c > 0) r.terms_.push_back(terms_[i++]);
            else if (c < 0) r.terms_.push_back(o.terms_[j++]);
            else {
                Elem s = ring_->field.add(terms_[i].c, o.terms_[j].c);
                if (!ring_->field.is_zero(s)) r.terms_.push_back({std::move(s), terms_[i].m});
                ++i; ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial scaled(const Elem& c) const {
        if (ring_->field.is_zero(c)) return zero(ring_);
        Polynomial r(ring_);
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.c = ring_->field.mul(t.c, c);
        return r;
    }

    Polynomial term_multiplied(const Elem& c, const Monomial& m) const {
        if (ring_->field.is_zero(c)) return zero(ring_);
        Polynomial r(ring_);
        r.terms_ = terms_;
        for (auto& t : r.terms_) {
            t.c = ring_->field.mul(t.c, c);
            t.m = t.m.mul(m);
        }
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_ring(o);
        std::vector<Term<F>> prod;
        prod.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_)
                prod.push_back({ring_->field.mul(a.c, b.c), a.m.mul(b.m)});
        return from_terms(ring_, std::move(prod));
    }

    Polynomial pow(uint32_t n) const {
        Polynomial r = constant(ring_, F::one());
        Polynomial base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    Polynomial derivative(int var) const {
        if (var < 0 || var >= ring_->arity()) throw std::invalid_argument("variable index out of range");
        Polynomial r(ring_);
        for (const auto& t : terms_) {
            uint16_t e = t.m.e[var];
            if (e == 0) continue;
            Term<F> nt;
            nt.c = ring_->field.mul(t.c, ring_->field.from_int(e));
            nt.m = t.m;
            nt.m.e[var] = static_cast<uint16_t>(e - 1);
            nt.m.deg -= 1;
            r.terms_.push_back(std::move(nt));
        }
        r.normalize();
        return r;
    }

    Elem evaluate(const std::vector<Elem>& x) const {
        if (static_cast<int>(x.size()) != ring_->arity())
            throw std::invalid_argument("evaluation point arity mismatch");
        const F& k = ring_->field;
        Elem acc = F::zero();
        for (const auto& t : terms_) {
            Elem v = t.c;
            for (int i = 0; i < ring_->arity(); ++i)
                for (uint16_t e = 0; e < t.m.e[i]; ++e) v = k.mul(v, x[i]);
            acc = k.add(acc, v);
        }
        return acc;
    }

    // General substitution: one image per ring variable, all in `target`.
    Polynomial substitute(const RingPtr<F>& target,
                          const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != ring_->arity())
            throw std::invalid_argument("substitute: one image required per variable");
        for (const auto& im : images)
            if (!same_ring(im.ring(), target))
                throw std::invalid_argument("substitute: image in wrong ring");
        Polynomial acc = zero(target);
        for (const auto& t : terms_) {
            Polynomial v = constant(target, t.c);
            for (int i = 0; i < ring_->arity(); ++i)
                if (t.m.e[i]) v = v * images[i].pow(t.m.e[i]);
            acc = acc + v;
        }
        return acc;
    }

    // Variable-to-variable transport: variable i of this ring becomes variable
    // var_map[i] of the target. Cheap path for ring extension and permutation.
    Polynomial map_vars(const RingPtr<F>& target, const std::vector<int>& var_map) const {
        if (static_cast<int>(var_map.size()) != ring_->arity())
            throw std::invalid_argument("map_vars: one target index per variable");
        Polynomial r(target);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Term<F> nt;
            nt.c = t.c;
            nt.m = Monomial::one();
            for (int i = 0; i < ring_->arity(); ++i) {
                if (!t.m.e[i]) continue;
                int j = var_map[i];
                if (j < 0 || j >= target->arity())
                    throw std::invalid_argument("map_vars: target index out of range");
                nt.m.e[j] = static_cast<uint16_t>(nt.m.e[j] + t.m.e[i]);
                nt.m.deg += t.m.e[i];
            }
            r.terms_.push_back(std::move(nt));
        }
        r.normalize();
        return r;
    }

    bool operator==(const Polynomial& o) const {
        if (!same_ring(ring_, o.ring_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].m != o.terms_[i].m ||
                !ring_->field.equal(terms_[i].c, o.terms_[i].c)) return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        const F& k = ring_->field;
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            std::string cs = k.to_string(t.c);
            bool negative = !cs.empty() && cs[0] == '-';
            if (first) {
                if (negative) { out += "-"; cs = cs.substr(1); }
            } else {
                out += negative ? " - " : " + ";
                if (negative) cs = cs.substr(1);
            }
            first = false;
            std::string mono = monomial_string(t.m);
            if (mono.empty()) out += cs;
            else if (cs == "1") out += mono;
            else out += cs + "*" + mono;
        }
        return out;
    }

private:
    void check_ring(const Polynomial& o) const {
        if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("ring mismatch");
    }

    std::string monomial_string(const Monomial& m) const {
        std::string out;
        for (int i = 0; i < ring_->arity(); ++i) {
            if (!m.e[i]) continue;
            if (!out.empty()) out += "*";
            out += ring_->vars[i];
            if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
        }
        return out;
    }

    void normalize() {
        MonomialOrder ord = ring_->grevlex();
        std::sort(terms_.begin(), terms_.end(), [&](const Term<F>& a, const Term<F>& b) {
            return ord.greater(a.m, b.m);
        });
        std::vector<Term<F>> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().m == t.m)
                out.back().c = ring_->field.add(out.back().c, t.c);
            else
                out.push_back(std::move(t));
            if (!out.empty() && ring_->field.is_zero(out.back().c)) out.pop_back();
        }
        terms_ = std::move(out);
    }

    RingPtr<F> ring_;
    std::vector<Term<F>> terms_;
};

// Identity-with-offset map for moving a polynomial into an extended ring whose
// shared variables sit at offset `shift`.
template <class F>
Polynomial<F> shift_into(const Polynomial<F>& p, const RingPtr<F>& target, int shift) {
    std::vector<int> vm(p.ring()->arity());
    for (int i = 0; i < p.ring()->arity(); ++i) vm[i] = i + shift;
    return p.map_vars(target, vm);
}

} // namespace pdual
