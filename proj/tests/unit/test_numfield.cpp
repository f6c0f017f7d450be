#include <doctest.h>

#include <random>

#include "kloc/error.hpp"
#include "kloc/intlinalg/normal_form.hpp"
#include "kloc/numfield/factor_z.hpp"
#include "kloc/numfield/lattice.hpp"
#include "kloc/numfield/number_field.hpp"
#include "kloc/numfield/poly_fp.hpp"
#include "support/integrality.hpp"

using namespace kloc;

namespace {

ErrorKind kind_of(auto && f)
{
    try {
        f();
    } catch (Error const & e) {
        return e.kind();
    }
    return ErrorKind::InvalidInput;
}

ZPoly random_monic(std::mt19937_64 & rng, int deg, long range)
{
    std::uniform_int_distribution<long> d(-range, range);
    std::vector<Integer> c;
    for (int k = 0; k < deg; ++k) c.emplace_back(d(rng));
    c.emplace_back(1);
    return ZPoly(c);
}

/* k^n f(x / k): generator scaled by k, so k divides the index */
ZPoly scale_root(ZPoly const & f, long k)
{
    std::vector<Integer> c = f.coeffs();
    int n = f.degree();
    for (int j = 0; j <= n; ++j) c[j] *= ipow(Integer(k), n - j);
    return ZPoly(c);
}

} // namespace

TEST_CASE("polynomial parser")
{
    CHECK(parse_polynomial("x^6 - 793*x^3 + 226981") == ZPoly({226981, 0, 0, -793, 0, 0, 1}));
    CHECK(parse_polynomial("x^2+1") == ZPoly({1, 0, 1}));
    CHECK(parse_polynomial("-x + 3x^2") == ZPoly({0, -1, 3}));
    CHECK(parse_polynomial("x") == ZPoly({0, 1}));
    CHECK(parse_polynomial("2*x^3 - x - 1") == ZPoly({-1, -1, 0, 2}));
    CHECK(kind_of([] { parse_polynomial("x^"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_polynomial("x**2"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_polynomial(""); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_polynomial("x+y"); }) == ErrorKind::ParseError);
}

TEST_CASE("factoring over F_p")
{
    auto fac = factor(FpPoly(3, ZPoly({226981, 0, 0, -793, 0, 0, 1})));
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first == FpPoly(3, ZPoly({1, 1})));
    CHECK(fac[0].second == 6);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 11, 101}[t % 6];
        ZPoly f = random_monic(rng, 1 + t % 9, 50);
        FpPoly fb(p, f);
        FpPoly prod = FpPoly::constant(p, 1);
        for (auto const & [g, e] : factor(fb, t)) {
            CHECK(g.lead() == 1);
            CHECK(factor_degrees(g) == std::vector<int>{g.degree()});
            for (unsigned k = 0; k < e; ++k) prod = prod * g;
        }
        CHECK(prod == fb.monic());
    }
}

TEST_CASE("factoring over Z")
{
    CHECK(is_irreducible(ZPoly({226981, 0, 0, -793, 0, 0, 1})));
    CHECK(!is_irreducible(ZPoly({-1, 0, 0, 0, 1})));
    CHECK(is_irreducible(ZPoly({1, 0, 0, 0, 1})));
    auto fac = factor_over_z(ZPoly({-1, 0, 0, 0, 1}));
    CHECK(fac.size() == 3);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        ZPoly a = random_monic(rng, 1 + t % 4, 9), b = random_monic(rng, 1 + t % 3, 9);
        ZPoly f = a * b;
        ZPoly prod({1});
        int total = 0;
        for (auto const & [g, e] : factor_over_z(f)) {
            CHECK(is_irreducible(g));
            for (unsigned k = 0; k < e; ++k) prod = prod * g;
            total += e;
        }
        CHECK(prod == f);
        CHECK(total >= 2);
    }
}

TEST_CASE("lattice reduction and enumeration")
{
    IntMatrix b{{1, 0, 0, 12345}, {0, 1, 0, 23456}, {0, 0, 1, 34567}};
    IntMatrix r = lll_exact(b);
    CHECK(r.rows() == 3);
    CHECK(hnf(r) == hnf(b));
    /* |b_1|^2 <= 2^(n-1) det(G)^(1/n) */
    Integer det = (b * b.transpose()).determinant();
    Integer n0 = 0;
    for (std::size_t j = 0; j < 4; ++j) n0 += r(0, j) * r(0, j);
    CHECK(n0 * n0 * n0 <= 64 * det);
    RealVectors g{{2, 1}, {1, 2}};
    int count = 0;
    enumerate_short_vectors(g, 2.5L, [&](std::vector<long> const &, long double v) {
        CHECK(v <= 2.5L);
        ++count;
        return true;
    });
    CHECK(count == 3); /* (1,0), (0,1), (1,-1) up to sign */
}

TEST_CASE("new_field errors")
{
    CHECK(kind_of([] { NumberField::create(ZPoly({1, 0, 2})); }) == ErrorKind::NotMonic);
    CHECK(kind_of([] { NumberField::create(ZPoly({-1, 0, 1})); }) == ErrorKind::Reducible);
    CHECK(kind_of([] { NumberField::create(ZPoly({5})); }) == ErrorKind::DegreeZero);
}

TEST_CASE("quadratic fields")
{
    auto k = NumberField::create(ZPoly({5, 0, 1}));
    CHECK(k->discriminant() == -20);
    CHECK(k->signature() == Signature{0, 1});
    CHECK(k->minkowski_bound() > Rational(2847, 1000));
    CHECK(k->minkowski_bound() < Rational(2848, 1000));
    auto m = NumberField::create(ZPoly({-1, -1, 1}));
    CHECK(m->discriminant() == 5);
    CHECK(m->unit_rank() == 1);
    auto r = NumberField::create(ZPoly({-5, 0, 1}));
    CHECK(r->discriminant() == 5);
    CHECK(r->index() == 2);
    for (long d = -60; d <= 60; ++d) {
        Integer root;
        if (d == 0 || d == 1 || perfect_square(Integer(d), root)) continue;
        bool sqfree = true;
        for (long q = 2; q * q <= std::abs(d); ++q)
            if (d % (q * q) == 0) sqfree = false;
        if (!sqfree) continue;
        auto f = NumberField::create(ZPoly({-d, 0, 1}));
        long expect = floor_mod(Integer(d), 4) == 1 ? d : 4 * d;
        CHECK(f->discriminant() == expect);
        CHECK(f->automorphisms().size() == 2);
    }
}

TEST_CASE("degree one")
{
    auto q = NumberField::create(ZPoly({0, 1}));
    CHECK(q->degree() == 1);
    CHECK(q->discriminant() == 1);
    CHECK(q->minkowski_bound() == 1);
    CHECK(q->automorphisms().size() == 1);
}

TEST_CASE("example sextic field")
{
    auto k = NumberField::create(parse_polynomial("x^6 - 793*x^3 + 226981"));
    CHECK(k->discriminant() == -ipow(3, 9) * ipow(61, 4));
    CHECK(k->index() == ipow(5, 3) * ipow(61, 4));
    CHECK(k->signature() == Signature{0, 3});
    auto autos = k->automorphisms();
    REQUIRE(autos.size() == 6);
    CHECK(autos[0].is_identity());
    for (auto const & s : autos) CHECK(k->is_zero(k->evaluate(k->poly(), s.image)));
    Elem x = k->add(k->theta(), k->from_integer(3));
    Elem y = k->mul(x, x);
    for (auto const & s : autos) CHECK(s.apply(y) == k->mul(s.apply(x), s.apply(x)));
}

TEST_CASE("cyclotomic field of conductor 5")
{
    auto k = NumberField::create(ZPoly({1, 1, 1, 1, 1}));
    CHECK(k->discriminant() == 125);
    CHECK(k->automorphisms().size() == 4);
    CHECK(k->norm(k->sub(k->one(), k->theta())) == 5);
}

TEST_CASE("maximal order against brute-force integrality")
{
    std::mt19937_64 rng(2024);
    int checked = 0;
    while (checked < 100) {
        int deg = 2 + checked % 3;
        ZPoly g = random_monic(rng, deg, 6);
        long k = std::vector<long>{1, 2, 3, 6, 2, 5}[checked % 6];
        ZPoly f = scale_root(g, k);
        if (!is_irreducible(f)) continue;
        auto field = NumberField::create(f);
        ++checked;
        auto basis = field->integral_basis();
        for (std::size_t i = 0; i < field->degree(); ++i) {
            Elem e(field->degree());
            e[i] = 1;
            CHECK(oracle::is_algebraic_integer(field->to_poly(e), f));
        }
        CHECK(discriminant(f) == field->discriminant() * field->index() * field->index());
        /* no x/q outside O with x in O, for primes q dividing the index of Z[theta] */
        for (auto const & [q, e] : factor_integer(discriminant(f))) {
            if (e < 2 || q > 7) continue;
            long qq = q.get_si();
            std::size_t n = field->degree();
            std::vector<long> c(n, 0);
            for (;;) {
                std::size_t pos = 0;
                while (pos < n && ++c[pos] == qq) c[pos++] = 0;
                if (pos == n) break;
                Elem x(c.begin(), c.end());
                QPoly xq = Rational(1, qq) * field->to_poly(x);
                CHECK_FALSE(oracle::is_algebraic_integer(xq, f));
            }
        }
    }
}

TEST_CASE("element arithmetic properties")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> d(-20, 20);
    int done = 0;
    while (done < 100) {
        ZPoly f = random_monic(rng, 2 + done % 4, 5);
        if (!is_irreducible(f)) continue;
        auto k = NumberField::create(f);
        ++done;
        std::size_t n = k->degree();
        Elem a(n), b(n);
        for (auto & v : a) v = d(rng);
        for (auto & v : b) v = d(rng);
        if (k->is_zero(a) || k->is_zero(b)) continue;
        Elem ab = k->mul(a, b);
        CHECK(k->norm(ab) == k->norm(a) * k->norm(b));
        CHECK(k->trace(k->add(a, b)) == k->trace(a) + k->trace(b));
        auto back = k->divide(ab, b);
        REQUIRE(back.has_value());
        CHECK(*back == a);
        CHECK(k->to_elem(k->to_poly(a)) == a);
        /* product in the power basis agrees with the table */
        QPoly prod = (k->to_poly(a) * k->to_poly(b)) % to_q(f);
        CHECK(k->to_poly(ab) == prod);
        /* T2 agrees with the embeddings */
        long double t2 = 0;
        auto roots = k->roots();
        for (std::size_t j = 0; j < roots.size(); ++j) {
            long double v = k->embed(a, j).norm().to_ld();
            t2 += j < k->signature().r1 ? v : 2 * v;
        }
        CHECK(std::abs(t2 - k->t2(a)) <= 1e-9L * (1 + t2));
        CHECK(roots.size() == k->signature().r1 + k->signature().r2);
    }
}
