#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

namespace pdual {

// Hard upper bound on ring arity. The widest rings in practice are secant
// constructions with a few variable blocks plus elimination helpers.
constexpr int kMaxVars = 24;

struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    uint32_t deg = 0;

    static Monomial one() { return Monomial{}; }

    static Monomial variable(int i, uint16_t exp = 1) {
        Monomial m;
        m.e[static_cast<size_t>(i)] = exp;
        m.deg = exp;
        return m;
    }

    bool is_one() const { return deg == 0; }

    Monomial mul(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i)
            r.e[i] = static_cast<uint16_t>(e[i] + o.e[i]);
        r.deg = deg + o.deg;
        if (r.deg > 60000) throw std::overflow_error("monomial degree overflow");
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg > o.deg) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // Quotient; caller guarantees divisibility.
    Monomial div(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i)
            r.e[i] = static_cast<uint16_t>(e[i] - o.e[i]);
        r.deg = deg - o.deg;
        return r;
    }

    Monomial lcm_with(const Monomial& o) const {
        Monomial r;
        uint32_t d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = std::max(e[i], o.e[i]);
            d += r.e[i];
        }
        r.deg = d;
        return r;
    }

    Monomial gcd_with(const Monomial& o) const {
        Monomial r;
        uint32_t d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = std::min(e[i], o.e[i]);
            d += r.e[i];
        }
        r.deg = d;
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

// Term orders. Block orders split the variable range and are what elimination
// and tangent-cone computations run on; compare() returns <0, 0, >0.
class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex, Block };

    static MonomialOrder lex(int nvars) { return MonomialOrder(Kind::Lex, nvars); }
    static MonomialOrder grevlex(int nvars) { return MonomialOrder(Kind::Grevlex, nvars); }

    // First block = variables [0, k), compared by `first`; ties fall to `rest`
    // on variables [k, nvars). An order of this shape with k elimination
    // variables in front is an elimination order for them.
    static MonomialOrder block(int k, MonomialOrder first, MonomialOrder rest) {
        MonomialOrder o(Kind::Block, k + rest.nvars_);
        o.split_ = k;
        o.first_ = std::make_shared<MonomialOrder>(std::move(first));
        o.rest_ = std::make_shared<MonomialOrder>(std::move(rest));
        return o;
    }

    static MonomialOrder elimination(int k, int nvars) {
        return block(k, grevlex(k), grevlex(nvars - k));
    }

    int nvars() const { return nvars_; }
    Kind kind() const { return kind_; }

    int compare(const Monomial& a, const Monomial& b) const {
        return cmp_range(a, b, 0, nvars_);
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    MonomialOrder(Kind k, int n) : kind_(k), nvars_(n) {
        if (n < 0 || n > kMaxVars) throw std::invalid_argument("bad arity for order");
    }

    int cmp_range(const Monomial& a, const Monomial& b, int lo, int hi) const {
        switch (kind_) {
        case Kind::Lex:
            for (int i = lo; i < hi; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            return 0;
        case Kind::Grevlex: {
            uint32_t da = 0, db = 0;
            for (int i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
            if (da != db) return da < db ? -1 : 1;
            for (int i = hi - 1; i >= lo; --i)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
            return 0;
        }
        case Kind::Block: {
            int c = first_->cmp_range(a, b, lo, lo + split_);
            if (c != 0) return c;
            return rest_->cmp_range(a, b, lo + split_, hi);
        }
        }
        return 0;
    }

    Kind kind_;
    int nvars_;
    int split_ = 0;
    std::shared_ptr<MonomialOrder> first_, rest_;
};

} // namespace pdual
