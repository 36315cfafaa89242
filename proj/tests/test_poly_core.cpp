#include <catch_amalgamated.hpp>

#include "pdual/fields.hpp"
#include "pdual/linear.hpp"
#include "pdual/matrix.hpp"
#include "pdual/parser.hpp"
#include "pdual/polynomial.hpp"
#include "pdual/rng.hpp"

using namespace pdual;

namespace {

RingPtr<QField> ringQ3() { return make_ring(QField{}, {"x0", "x1", "x2"}); }
RingPtr<QField> ringQ4() { return make_ring(QField{}, {"x0", "x1", "x2", "x3"}); }

Polynomial<QField> pq(const RingPtr<QField>& r, const std::string& s) {
    return parse_polynomial(r, s);
}

// Seeded random polynomial with small integer coefficients.
template <class F>
Polynomial<F> random_poly(const RingPtr<F>& ring, RandomSource& rng, int nterms, uint32_t maxdeg) {
    std::vector<Term<F>> ts;
    for (int t = 0; t < nterms; ++t) {
        Monomial m;
        uint32_t budget = maxdeg;
        for (int v = 0; v < ring->arity(); ++v) {
            uint16_t e = static_cast<uint16_t>(rng.below(budget + 1));
            m.e[v] = e;
            m.deg += e;
            budget -= e;
        }
        ts.push_back({ring->field.from_int(rng.small_int()), m});
    }
    return Polynomial<F>::from_terms(ring, std::move(ts));
}

} // namespace

TEST_CASE("monomial arithmetic") {
    Monomial a = Monomial::variable(0, 2); // x0^2
    Monomial b = Monomial::variable(0).mul(Monomial::variable(1)); // x0*x1
    CHECK(a.deg == 2);
    CHECK(a.mul(b).deg == 4);
    CHECK(a.mul(b).e[0] == 3);
    CHECK_FALSE(a.divides(b));
    CHECK(Monomial::variable(0).divides(a));
    CHECK(a.lcm_with(b).e[0] == 2);
    CHECK(a.lcm_with(b).e[1] == 1);
    CHECK(a.gcd_with(b).e[0] == 1);
    CHECK(a.gcd_with(b).deg == 1);
    CHECK(a.div(Monomial::variable(0)) == Monomial::variable(0));
    CHECK(Monomial::variable(0, 2).coprime_with(Monomial::variable(1, 3)));
    CHECK_FALSE(a.coprime_with(b));
}

TEST_CASE("grevlex and lex orders on degree-2 monomials in 3 variables") {
    auto m = [](uint16_t a, uint16_t b, uint16_t c) {
        Monomial x;
        x.e[0] = a; x.e[1] = b; x.e[2] = c;
        x.deg = static_cast<uint32_t>(a + b + c);
        return x;
    };
    // Descending in grevlex: x0^2, x0x1, x1^2, x0x2, x1x2, x2^2.
    std::vector<Monomial> grev = {m(2,0,0), m(1,1,0), m(0,2,0), m(1,0,1), m(0,1,1), m(0,0,2)};
    MonomialOrder g = MonomialOrder::grevlex(3);
    for (size_t i = 0; i + 1 < grev.size(); ++i) CHECK(g.greater(grev[i], grev[i+1]));
    // Descending in lex: x0^2, x0x1, x0x2, x1^2, x1x2, x2^2.
    std::vector<Monomial> lex = {m(2,0,0), m(1,1,0), m(1,0,1), m(0,2,0), m(0,1,1), m(0,0,2)};
    MonomialOrder l = MonomialOrder::lex(3);
    for (size_t i = 0; i + 1 < lex.size(); ++i) CHECK(l.greater(lex[i], lex[i+1]));
    // Degree dominates in grevlex; lex ignores it.
    CHECK(g.greater(m(0,0,2), m(1,0,0)));
    CHECK(l.greater(m(1,0,0), m(0,0,2)));
    // Block order eliminating x0: any x0 power beats anything without x0.
    MonomialOrder e = MonomialOrder::elimination(1, 3);
    CHECK(e.greater(m(1,0,0), m(0,2,2)));
}

TEST_CASE("rational field canonical arithmetic") {
    QField k;
    auto half = k.from_fraction(2, 4);
    CHECK(k.to_string(half) == "1/2");
    CHECK(k.equal(k.add(half, half), k.one()));
    CHECK(k.to_string(k.neg(k.from_fraction(3, 2))) == "-3/2");
    CHECK(k.equal(k.inv(k.from_int(4)), k.from_fraction(1, 4)));
    CHECK(k.to_string(k.from_decimal("123456789012345678901234567890")) ==
          "123456789012345678901234567890");
    CHECK_THROWS(k.from_fraction(1, 0));
}

TEST_CASE("prime field arithmetic") {
    FpField k(7);
    CHECK(k.from_int(-3) == 4);
    CHECK(k.mul(3, 5) == 1);
    CHECK(k.inv(3) == 5);
    CHECK(k.add(6, 5) == 4);
    CHECK(k.sub(2, 5) == 4);
    CHECK_THROWS(k.inv(0));
    CHECK_THROWS(FpField(1ULL << 32));
    // from_decimal reduces big integers mod p.
    CHECK(k.from_decimal("700000000000000000003") == 3);
    RandomSource rng(7);
    uint64_t p = random_prime30(rng);
    CHECK(p >= (1ULL << 29));
    CHECK(p < (1ULL << 31));
    FpField big(p);
    CHECK(big.mul(big.inv(12345), 12345) == 1);
}

TEST_CASE("parser grammar and canonical forms") {
    auto r = ringQ3();
    auto f = pq(r, "x0*x2 - x1^2");
    CHECK(f.term_count() == 2);
    Monomial m02 = Monomial::variable(0).mul(Monomial::variable(2));
    CHECK(r->field.equal(f.coefficient_of(m02), r->field.one()));
    CHECK(r->field.equal(f.coefficient_of(Monomial::variable(1, 2)), r->field.from_int(-1)));

    CHECK(pq(r, "0").is_zero());
    CHECK(pq(r, "2/4*x0") == pq(r, "1/2 * x0"));
    CHECK(pq(r, "-x0 + x0") .is_zero());
    CHECK(pq(r, "x0^2*x1*x0") == pq(r, "x0^3*x1"));
    CHECK(pq(r, "3") == Polynomial<QField>::constant(r, r->field.from_int(3)));
    CHECK(pq(r, " - 2*x1 ") == pq(r, "0 - 2*x1"));

    CHECK_THROWS_AS(pq(r, "y0 + 1"), ParseError);
    CHECK_THROWS_AS(pq(r, "x0 + + x1"), ParseError);
    CHECK_THROWS_AS(pq(r, "1/0*x0"), ParseError);
    CHECK_THROWS_AS(pq(r, "x0^"), ParseError);
    CHECK_THROWS_AS(pq(r, ""), ParseError);
}

TEST_CASE("to_string round-trips through the parser") {
    auto r = ringQ4();
    RandomSource rng(42);
    for (int i = 0; i < 40; ++i) {
        auto p = random_poly(r, rng, 6, 4);
        CHECK(pq(r, p.to_string()) == p);
    }
    // Some specific shapes.
    for (const char* s : {"x0", "-x0", "1/2*x0^3 - x1*x2", "x0^2 + 2*x0*x1 + x1^2", "7"})
        CHECK(pq(r, pq(r, s).to_string()) == pq(r, s));
}

TEST_CASE("ring axioms on random triples over Q and F_p") {
    RandomSource rng(2024);
    auto rQ = ringQ3();
    for (int i = 0; i < 25; ++i) {
        auto p = random_poly(rQ, rng, 4, 3), q = random_poly(rQ, rng, 4, 3),
             s = random_poly(rQ, rng, 4, 3);
        CHECK((p + q) + s == p + (q + s));
        CHECK(p * (q + s) == p * q + p * s);
        CHECK(p * q == q * p);
        CHECK(p - p == Polynomial<QField>::zero(rQ));
    }
    auto rP = make_ring(FpField(32003), {"x0", "x1", "x2"});
    for (int i = 0; i < 25; ++i) {
        auto p = random_poly(rP, rng, 4, 3), q = random_poly(rP, rng, 4, 3),
             s = random_poly(rP, rng, 4, 3);
        CHECK((p + q) + s == p + (q + s));
        CHECK(p * (q + s) == p * q + p * s);
    }
}

TEST_CASE("pow, degree bookkeeping, homogeneous parts") {
    auto r = ringQ3();
    auto f = pq(r, "x0 + x1");
    CHECK(f.pow(3) == pq(r, "x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3"));
    CHECK(f.pow(0) == pq(r, "1"));
    auto g = pq(r, "x0^3 + x1*x2 - x0");
    CHECK(g.degree() == 3);
    CHECK(g.min_degree() == 1);
    CHECK_FALSE(g.is_homogeneous());
    CHECK(g.lowest_degree_part() == pq(r, "-x0"));
    CHECK(g.degree_part(2) == pq(r, "x1*x2"));
    CHECK(pq(r, "x0*x2 - x1^2").is_homogeneous());
    CHECK(Polynomial<QField>::zero(r).degree() == -1);
}

TEST_CASE("derivatives satisfy Leibniz on random pairs") {
    auto r = ringQ3();
    RandomSource rng(7);
    for (int i = 0; i < 20; ++i) {
        auto p = random_poly(r, rng, 4, 3), q = random_poly(r, rng, 4, 3);
        for (int v = 0; v < 3; ++v)
            CHECK((p * q).derivative(v) == p.derivative(v) * q + p * q.derivative(v));
    }
    CHECK(pq(r, "x0^3").derivative(0) == pq(r, "3*x0^2"));
    CHECK(pq(r, "x0^3").derivative(1).is_zero());
}

TEST_CASE("jacobian matrices match hand differentiation") {
    auto r = ringQ3();
    auto j = jacobian_matrix<QField>({pq(r, "x0*x2 - x1^2")});
    REQUIRE(j.size() == 1);
    REQUIRE(j[0].size() == 3);
    CHECK(j[0][0] == pq(r, "x2"));
    CHECK(j[0][1] == pq(r, "-2*x1"));
    CHECK(j[0][2] == pq(r, "x0"));

    auto j2 = jacobian_matrix<QField>({pq(r, "x0^3")});
    CHECK(j2[0][0] == pq(r, "3*x0^2"));
    CHECK(j2[0][1].is_zero());

    auto r4 = ringQ4();
    std::vector<Polynomial<QField>> cubic = {
        parse_polynomial(r4, "x0*x2 - x1^2"),
        parse_polynomial(r4, "x0*x3 - x1*x2"),
        parse_polynomial(r4, "x1*x3 - x2^2"),
    };
    auto j3 = jacobian_matrix(cubic);
    REQUIRE(j3.size() == 3);
    for (const auto& row : j3) {
        REQUIRE(row.size() == 4);
        for (const auto& entry : row)
            if (!entry.is_zero()) CHECK(entry.degree() == 1);
    }
}

TEST_CASE("substitution: dehomogenisation, identity, line restriction") {
    auto r = ringQ3();
    auto f = pq(r, "x0*x2 - x1^2");

    std::vector<Polynomial<QField>> dehom = {pq(r, "1"), pq(r, "x1"), pq(r, "x2")};
    CHECK(f.substitute(r, dehom) == pq(r, "x2 - x1^2"));

    std::vector<Polynomial<QField>> id = {pq(r, "x0"), pq(r, "x1"), pq(r, "x2")};
    CHECK(f.substitute(r, id) == f);

    auto st = make_ring(QField{}, {"s", "t"});
    // Restrict to the line through (1:0:0) and (0:1:1).
    std::vector<Polynomial<QField>> line = {
        parse_polynomial(st, "s"), parse_polynomial(st, "t"), parse_polynomial(st, "t")};
    CHECK(f.substitute(st, line) == parse_polynomial(st, "s*t - t^2"));
}

TEST_CASE("substitution is multiplicative") {
    auto r = ringQ3();
    RandomSource rng(99);
    auto st = make_ring(QField{}, {"s", "t"});
    std::vector<Polynomial<QField>> images;
    for (int v = 0; v < 3; ++v) {
        auto a = Polynomial<QField>::constant(st, st->field.from_int(rng.small_int()));
        auto b = Polynomial<QField>::constant(st, st->field.from_int(rng.small_int()));
        images.push_back(a * parse_polynomial(st, "s") + b * parse_polynomial(st, "t"));
    }
    for (int i = 0; i < 15; ++i) {
        auto p = random_poly(r, rng, 4, 3), q = random_poly(r, rng, 4, 3);
        CHECK((p * q).substitute(st, images) ==
              p.substitute(st, images) * q.substitute(st, images));
    }
}

TEST_CASE("evaluation at points") {
    auto r = ringQ3();
    auto f = pq(r, "x0*x2 - x1^2");
    QField k;
    std::vector<mpq_class> pt = {k.from_int(1), k.from_int(2), k.from_int(4)};
    CHECK(k.equal(f.evaluate(pt), k.zero())); // (1:2:4) lies on the conic
    std::vector<mpq_class> pt2 = {k.from_int(1), k.from_int(1), k.from_int(3)};
    CHECK(k.equal(f.evaluate(pt2), k.from_int(2)));
}

TEST_CASE("map_vars transports polynomials between rings") {
    auto r = ringQ3();
    auto big = make_ring(QField{}, {"w", "x0", "x1", "x2"});
    auto f = pq(r, "x0*x2 - x1^2");
    auto g = shift_into(f, big, 1);
    CHECK(g == parse_polynomial(big, "x0*x2 - x1^2"));
    std::vector<int> back = {1, 2, 3};
    CHECK(f.map_vars(big, back) == g);
}

TEST_CASE("dense matrix rref, rank, kernel") {
    QField k;
    Mat<QField> m = Mat<QField>::from_rows(k, {
        {k.from_int(1), k.from_int(2), k.from_int(3), k.from_int(4)},
        {k.from_int(2), k.from_int(4), k.from_int(6), k.from_int(8)},
        {k.from_int(0), k.from_int(1), k.from_int(0), k.from_int(1)},
    });
    CHECK(m.rank() == 2);
    auto ker = m.kernel_basis();
    CHECK(ker.size() == 2);
    for (const auto& v : ker) {
        // Verify each kernel vector annihilates every row.
        for (int r = 0; r < m.rows(); ++r) {
            mpq_class dot = 0;
            for (int c = 0; c < m.cols(); ++c) dot += m.at(r, c) * v[c];
            CHECK(dot == 0);
        }
    }
}

TEST_CASE("polynomial determinants and minors") {
    auto r = ringQ4();
    PolyMat<QField> hankel = {
        {parse_polynomial(r, "x0"), parse_polynomial(r, "x1"), parse_polynomial(r, "x2")},
        {parse_polynomial(r, "x1"), parse_polynomial(r, "x2"), parse_polynomial(r, "x3")},
    };
    auto minors = poly_minors(hankel, 2);
    REQUIRE(minors.size() == 3);
    CHECK(minors[0] == parse_polynomial(r, "x0*x2 - x1^2"));
    CHECK(minors[1] == parse_polynomial(r, "x0*x3 - x1*x2"));
    CHECK(minors[2] == parse_polynomial(r, "x1*x3 - x2^2"));

    PolyMat<QField> sq = {
        {parse_polynomial(r, "x0"), parse_polynomial(r, "x1"), parse_polynomial(r, "0")},
        {parse_polynomial(r, "x1"), parse_polynomial(r, "x2"), parse_polynomial(r, "x3")},
        {parse_polynomial(r, "1"), parse_polynomial(r, "0"), parse_polynomial(r, "x0")},
    };
    // Laplace expansion oracle by hand:
    // det = x0*(x2*x0 - 0) - x1*(x1*x0 - x3) + 0 = x0^2*x2 - x0*x1^2 + x1*x3.
    CHECK(poly_determinant(sq) == parse_polynomial(r, "x0^2*x2 - x0*x1^2 + x1*x3"));
}

TEST_CASE("projective points and linear subspaces") {
    QField k;
    PointP<QField> p(k, {k.from_int(0), k.from_int(2), k.from_int(4)});
    CHECK(k.equal(p.coords()[1], k.one())); // scaled so first nonzero is 1
    CHECK(p.to_string() == "(0:1:2)");
    CHECK_THROWS(PointP<QField>(k, {k.zero(), k.zero()}));

    // Line spanned by e0, e1 in P^2: cut by x2.
    auto L = LinearSubspace<QField>::from_spanning_points(
        k, {{k.one(), k.zero(), k.zero()}, {k.zero(), k.one(), k.zero()}});
    CHECK(L.dim() == 1);
    CHECK(L.codim() == 1);
    auto forms = L.cutting_forms();
    REQUIRE(forms.size() == 1);
    CHECK(k.equal(forms[0][2], k.one()));
    CHECK(k.is_zero(forms[0][0]));

    // perp is an involution.
    auto Lp = L.perp();
    CHECK(Lp.dim() == 0);
    CHECK(Lp.perp() == L);

    // Join with e2 fills the plane.
    PointP<QField> e2(k, {k.zero(), k.zero(), k.one()});
    auto whole = L.join(LinearSubspace<QField>::single_point(e2));
    CHECK(whole.dim() == 2);
    CHECK(whole.cutting_forms().empty());

    CHECK(L.contains(PointP<QField>(k, {k.from_int(3), k.from_int(-1), k.zero()})));
    CHECK_FALSE(L.contains(e2));
    CHECK(whole.contains(L));
    CHECK_FALSE(L.contains(whole));

    // from_cutting_forms inverts cutting_forms.
    auto L2 = LinearSubspace<QField>::from_cutting_forms(k, forms, 2);
    CHECK(L2 == L);

    // Seeded random points stay inside.
    RandomSource rng(5);
    for (int i = 0; i < 10; ++i) {
        auto q = L.random_point(rng);
        mpq_class dot = 0;
        for (int c = 0; c < 3; ++c) dot += forms[0][c] * q.coords()[c];
        CHECK(dot == 0);
    }

    auto r = ringQ3();
    auto gens = L.cutting_ideal_gens(r);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == parse_polynomial(r, "x2"));

    PointP<QField> h(k, {k.zero(), k.one(), k.from_int(2)});
    CHECK(hyperplane_form(r, h) == parse_polynomial(r, "x1 + 2*x2"));
}

TEST_CASE("random source is deterministic and in range") {
    RandomSource a(123), b(123);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    RandomSource c(9, 3);
    for (int i = 0; i < 200; ++i) {
        int64_t v = c.small_int();
        CHECK(v >= -3);
        CHECK(v <= 3);
        CHECK(c.small_int_nonzero() != 0);
        CHECK(c.below(10) < 10);
    }
    RandomSource d1 = a.split(1);
    RandomSource b2(123);
    for (int i = 0; i < 100; ++i) b2.next_u64();
    RandomSource d2 = b2.split(1);
    CHECK(d1.next_u64() == d2.next_u64());
}
