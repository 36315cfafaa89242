#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "pdual/polynomial.hpp"

namespace pdual {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Grammar: polynomial = [sign] term { ('+'|'-') term }
//          term       = coefficient [ '*' factors ] | factors
//          factors    = factor { '*' factor }
//          factor     = var [ '^' uint ]
//          coefficient = uint [ '/' uint ]
// Whitespace is insignificant everywhere.
template <class F>
class PolyParser {
public:
    PolyParser(RingPtr<F> ring, const std::string& src) : ring_(std::move(ring)), s_(src) {}

    Polynomial<F> parse() {
        std::vector<Term<F>> terms;
        skip_ws();
        bool neg = take_sign();
        parse_term(terms, neg);
        skip_ws();
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            skip_ws();
            parse_term(terms, c == '-');
            skip_ws();
        }
        return Polynomial<F>::from_terms(ring_, std::move(terms));
    }

private:
    void parse_term(std::vector<Term<F>>& terms, bool negate) {
        typename F::Elem coef = F::one();
        Monomial mono = Monomial::one();
        bool saw_factor = false;

        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            coef = parse_coefficient();
            saw_factor = true;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') { ++pos_; skip_ws(); parse_factors(coef, mono); }
        } else {
            parse_factors(coef, mono);
            saw_factor = true;
        }
        if (!saw_factor) fail("empty term");
        if (negate) coef = ring_->field.neg(coef);
        terms.push_back({std::move(coef), mono});
    }

    void parse_factors(typename F::Elem& coef, Monomial& mono) {
        for (;;) {
            parse_factor(coef, mono);
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') { ++pos_; skip_ws(); continue; }
            break;
        }
    }

    void parse_factor(typename F::Elem& coef, Monomial& mono) {
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            // Numeric factor inside a product, e.g. "1/2*x0".
            coef = ring_->field.mul(coef, parse_coefficient());
            return;
        }
        if (pos_ >= s_.size() || !is_ident_start(s_[pos_])) fail("expected variable");
        size_t start = pos_;
        while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        int idx = ring_->var_index(name);
        if (idx < 0) fail("unknown variable '" + name + "'");
        uint16_t exp = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip_ws();
            exp = static_cast<uint16_t>(parse_uint_small());
        }
        Monomial v = Monomial::variable(idx, exp);
        if (exp) mono = mono.mul(v);
        else mono = mono.mul(Monomial::one());
    }

    typename F::Elem parse_coefficient() {
        std::string num = parse_digits();
        skip_ws();
        std::string den = "1";
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            skip_ws();
            den = parse_digits();
        }
        try {
            return ring_->field.from_decimal(num, den);
        } catch (const std::exception& e) {
            fail(std::string("bad coefficient: ") + e.what());
        }
    }

    std::string parse_digits() {
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected number");
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    uint32_t parse_uint_small() {
        std::string d = parse_digits();
        if (d.size() > 4) fail("exponent too large");
        return static_cast<uint32_t>(std::stoul(d));
    }

    bool take_sign() {
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            bool neg = s_[pos_] == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    static bool is_ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("polynomial parse error at position " + std::to_string(pos_) +
                         ": " + why + " in \"" + s_ + "\"");
    }

    RingPtr<F> ring_;
    const std::string& s_;
    size_t pos_ = 0;
};

template <class F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, const std::string& src) {
    PolyParser<F> p(ring, src);
    return p.parse();
}

} // namespace pdual
