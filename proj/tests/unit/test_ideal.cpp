#include <doctest.h>

#include <random>

#include "kloc/error.hpp"
#include "kloc/numfield/factor_z.hpp"
#include "kloc/numfield/ideal.hpp"

using namespace kloc;

namespace {

FieldPtr field(std::string const & f) { return NumberField::create(parse_polynomial(f)); }

Ideal product_of(FieldPtr const & k, std::vector<PrimeIdealFactor> const & ps)
{
    Ideal acc = Ideal::unit(k);
    for (auto const & p : ps) acc = ideal_mul(acc, ideal_pow(p.ideal, p.e));
    return acc;
}

Elem random_elem(std::mt19937_64 & rng, std::size_t n, long range)
{
    std::uniform_int_distribution<long> d(-range, range);
    Elem a(n);
    for (auto & c : a) c = d(rng);
    if (a[0] == 0) a[0] = 1;
    return a;
}

std::vector<FieldPtr> sample_fields()
{
    std::vector<FieldPtr> out;
    for (auto const * f : {"x^2+1", "x^2+5", "x^2-x-1", "x^3-2", "x^4+x^3+x^2+x+1", "x^3+x^2-2*x+8", "x^2+23", "x^4-10*x^2+1",
                           "x^6-793*x^3+226981", "x^3-x-1", "x^5-x+1"})
        out.push_back(field(f));
    return out;
}

/* x^2 + xy + c y^2 or x^2 + c y^2 represents m */
bool represents(long a, long b, long c, long m)
{
    for (long y = 0; 4 * a * c * y * y <= 4 * a * m + b * b * y * y + 4 * a * m; ++y)
        for (long x = -2 * (m + 1); x <= 2 * (m + 1); ++x)
            if (a * x * x + b * x * y + c * y * y == m) return true;
    return false;
}

} // namespace

TEST_CASE("factor_rational_prime examples")
{
    auto gauss = field("x^2+1");
    auto f5 = factor_rational_prime(gauss, 5);
    REQUIRE(f5.size() == 2);
    for (auto const & p : f5) CHECK((p.e == 1 && p.f == 1));
    auto f2 = factor_rational_prime(gauss, 2);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].e == 2);
    CHECK(f2[0].f == 1);
    auto k = field("x^6-793*x^3+226981");
    auto f3 = factor_rational_prime(k, 3);
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].e == 6);
    CHECK(f3[0].f == 1);
    for (long q : {5, 61, 2, 7, 13}) {
        auto ps = factor_rational_prime(k, q);
        unsigned total = 0;
        for (auto const & p : ps) total += p.e * p.f;
        CHECK(total == 6);
        CHECK(product_of(k, ps) == Ideal::from_integer(k, q));
    }
}

TEST_CASE("ideal arithmetic examples")
{
    auto k = field("x^2+5");
    Ideal one = Ideal::unit(k);
    Elem a{Integer(1), Integer(1)};
    Ideal p2 = Ideal::generated(k, {k->from_integer(2), a});
    CHECK(ideal_mul(p2, one) == p2);
    CHECK(ideal_norm(p2) == 2);
    auto s = k->automorphisms();
    REQUIRE(s.size() == 2);
    CHECK(ideal_mul(p2, apply(s[1], p2)) == Ideal::from_integer(k, 2));
    auto t = is_principal(p2);
    CHECK(!t.generator);
    CHECK(t.certified);
    auto r = is_principal(Ideal::principal(k, k->theta()));
    REQUIRE(r.generator);
    CHECK(abs(k->norm(*r.generator)) == 5);
    auto five = is_principal(Ideal::from_integer(k, 5));
    REQUIRE(five.generator);
    CHECK(Ideal::principal(k, *five.generator) == Ideal::from_integer(k, 5));
    auto sext = field("x^6-793*x^3+226981");
    CHECK(ideal_norm(Ideal::from_integer(sext, 3)) == 729);
    CHECK_THROWS_AS(ideal_mul(p2, Ideal::unit(sext)), Error);
    try {
        ideal_mul(p2, Ideal::unit(sext));
    } catch (Error const & e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
    }
}

TEST_CASE("prime decompositions multiply back")
{
    auto fields = sample_fields();
    int cases = 0;
    for (auto const & k : fields)
        for (long q : {2, 3, 5, 7, 11, 13, 23, 61}) {
            auto ps = factor_rational_prime(k, q);
            unsigned total = 0;
            for (auto const & p : ps) {
                total += p.e * p.f;
                CHECK(ideal_norm(p.ideal) == ipow(Integer(q), p.f));
                CHECK(p.ideal.contains(k->from_integer(q)));
            }
            CHECK(total == k->degree());
            CHECK(product_of(k, ps) == Ideal::from_integer(k, q));
            ++cases;
        }
    CHECK(cases >= 80);
}

TEST_CASE("norm multiplicativity and valuations")
{
    auto fields = sample_fields();
    std::mt19937_64 rng(5);
    for (int t = 0; t < 120; ++t) {
        auto const & k = fields[t % fields.size()];
        std::size_t n = k->degree();
        Ideal i = Ideal::generated(k, {random_elem(rng, n, 6), k->from_integer(2 + t % 7)});
        Ideal j = Ideal::generated(k, {random_elem(rng, n, 6), random_elem(rng, n, 3)});
        Ideal ij = ideal_mul(i, j);
        CHECK(ideal_norm(ij) == ideal_norm(i) * ideal_norm(j));
        Ideal rebuilt = Ideal::unit(k);
        for (auto const & [p, v] : factor_ideal(ij)) {
            CHECK(valuation(p, ij) == valuation(p, i) + valuation(p, j));
            rebuilt = ideal_mul(rebuilt, ideal_pow(p.ideal, v));
        }
        CHECK(rebuilt == ij);
        Elem a = random_elem(rng, n, 9), b = random_elem(rng, n, 9);
        for (auto const & p : factor_rational_prime(k, 2))
            CHECK(valuation(p, k->mul(a, b)) == valuation(p, a) + valuation(p, b));
    }
}

TEST_CASE("automorphism groups close")
{
    for (auto const * f : {"x^2+1", "x^4+x^3+x^2+x+1", "x^6-793*x^3+226981", "x^4-10*x^2+1", "x^3-2", "x^3-3*x+1"}) {
        auto k = field(f);
        auto autos = k->automorphisms();
        CHECK(k->degree() % autos.size() == 0);
        std::vector<Elem> images;
        for (auto const & s : autos) images.push_back(s.image);
        for (auto const & s : autos)
            for (auto const & t : autos) {
                Elem st = s.apply(t.image);
                CHECK(std::find(images.begin(), images.end(), st) != images.end());
            }
    }
    CHECK(field("x^3-2")->automorphisms().size() == 1);
    CHECK(field("x^3-3*x+1")->automorphisms().size() == 3);
}

TEST_CASE("principality in imaginary quadratic fields matches the norm form")
{
    int cases = 0;
    for (long d : {1, 2, 5, 6, 10, 13, 14, 15, 17, 21, 23, 26, 29, 30, 31, 47}) {
        auto k = NumberField::create(ZPoly({d, 0, 1}));
        bool half = (-d) % 4 == -3 || (4 - d % 4) % 4 == 1;
        long b = half ? 1 : 0;
        long c = half ? (1 + d) / 4 : d;
        for (long q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
            for (auto const & p : factor_rational_prime(k, q)) {
                if (p.f != 1) continue;
                auto t = is_principal(p.ideal);
                CHECK(t.certified);
                CHECK(t.generator.has_value() == represents(1, b, c, q));
                if (t.generator) CHECK(Ideal::principal(k, *t.generator) == p.ideal);
                ++cases;
            }
        }
    }
    CHECK(cases >= 100);
}
