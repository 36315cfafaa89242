#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

#include "pdual/rng.hpp"

namespace pdual {

// Field concept used throughout: a small value type carrying the arithmetic.
// Elem values are only meaningful together with the field object that made them
// (the prime field stores its modulus in the field object, not in each element).

class QField {
public:
    using Elem = mpq_class;

    static Elem zero() { return Elem(0); }
    static Elem one() { return Elem(1); }
    uint64_t characteristic() const { return 0; }

    Elem from_int(int64_t n) const { return Elem(static_cast<long>(n)); }
    Elem from_fraction(int64_t n, int64_t d) const {
        if (d == 0) throw std::invalid_argument("zero denominator");
        Elem r(static_cast<long>(n), static_cast<long>(d));
        r.canonicalize();
        return r;
    }
    // Digits may exceed any machine width; GMP parses them directly.
    Elem from_decimal(const std::string& num, const std::string& den = "1") const {
        mpz_class n(num), d(den);
        if (d == 0) throw std::invalid_argument("zero denominator");
        Elem r(n, d);
        r.canonicalize();
        return r;
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    std::string to_string(const Elem& a) const { return a.get_str(); }

    bool operator==(const QField&) const { return true; }
};

class FpField {
public:
    using Elem = uint64_t;

    FpField() : p_(0) {}
    explicit FpField(uint64_t p) : p_(p) {
        if (p < 2 || p >= (1ULL << 31))
            throw std::invalid_argument("modulus must be a prime below 2^31");
    }

    static Elem zero() { return 0; }
    static Elem one() { return 1; }
    uint64_t characteristic() const { return p_; }

    Elem from_int(int64_t n) const {
        int64_t m = n % static_cast<int64_t>(p_);
        if (m < 0) m += static_cast<int64_t>(p_);
        return static_cast<Elem>(m);
    }
    Elem from_fraction(int64_t n, int64_t d) const {
        return div(from_int(n), from_int(d));
    }
    Elem from_decimal(const std::string& num, const std::string& den = "1") const {
        mpz_class n(num), d(den);
        mpz_class pz(static_cast<unsigned long>(p_));
        mpz_class nr = n % pz, dr = d % pz;
        if (nr < 0) nr += pz;
        if (dr < 0) dr += pz;
        return div(nr.get_ui(), dr.get_ui());
    }

    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; } // p < 2^31 keeps this in range
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        // Extended Euclid; p prime so gcd is 1.
        int64_t t = 0, nt = 1, r = static_cast<int64_t>(p_), nr = static_cast<int64_t>(a);
        while (nr != 0) {
            int64_t q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        if (t < 0) t += static_cast<int64_t>(p_);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }
    bool equal(Elem a, Elem b) const { return a == b; }

    std::string to_string(Elem a) const { return std::to_string(a); }

    bool operator==(const FpField& o) const { return p_ == o.p_; }

private:
    uint64_t p_;
};

// Random 30-bit prime for screen-mode runs.
inline uint64_t random_prime30(RandomSource& rng) {
    for (;;) {
        uint64_t c = (1ULL << 29) + rng.below(1ULL << 29);
        c |= 1;
        mpz_class z(static_cast<unsigned long>(c));
        if (mpz_probab_prime_p(z.get_mpz_t(), 32) > 0) return c;
    }
}

} // namespace pdual
