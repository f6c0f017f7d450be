#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "kloc/cyclolayer/cyclotomic.hpp"
#include "kloc/cyclolayer/layer.hpp"
#include "kloc/error.hpp"

using namespace kloc;

namespace {

FieldPtr field(std::string const & f) { return NumberField::create(parse_polynomial(f)); }
FieldPtr rationals() { return NumberField::create(ZPoly({0, 1})); }

std::vector<std::uint64_t> kappas(Layer const & l)
{
    std::vector<std::uint64_t> k;
    for (auto const & g : l.gamma) k.push_back(g.kappa);
    std::sort(k.begin(), k.end());
    return k;
}

} // namespace

TEST_CASE("cyclotomic ring arithmetic")
{
    CycloRing z(3, 2);
    CHECK(z.modulus() == 9);
    CHECK(z.phi() == 6);
    /* sum of all 9th roots of unity is zero */
    auto s = z.zero();
    for (std::uint64_t j = 0; j < 9; ++j) s = z.add(s, z.zeta_power(j));
    CHECK(z.equal(s, z.zero()));
    /* primitive ones sum to mu(9) = 0; each primitive cube root is hit three times */
    Integer v;
    CHECK(z.is_rational(orbit_sum(z, unit_group(9), 1), v));
    CHECK(v == 0);
    CHECK(z.is_rational(orbit_sum(z, unit_group(9), 3), v));
    CHECK(v == -3);
    CHECK(z.equal(z.mul(z.zeta_power(5), z.zeta_power(7)), z.zeta_power(3)));
    CHECK(z.equal(z.sigma(z.zeta_power(2), 4), z.zeta_power(8)));
    CHECK(unit_group(2) == std::vector<std::uint64_t>{1});
    CHECK(generated_subgroup({2}, 9).size() == 6);
    CHECK(generated_subgroup({4}, 9).size() == 3);
}

TEST_CASE("subfield generators give rational minimal polynomials")
{
    for (auto [p, n] : {std::pair<std::uint64_t, unsigned>{5, 1}, {7, 1}, {3, 2}, {13, 1}, {2, 4}}) {
        CycloRing z(p, n);
        auto g = unit_group(z.modulus());
        for (auto h : g) {
            auto sub = generated_subgroup({h}, z.modulus());
            auto gen = subfield_generator(z, sub, g);
            CHECK(gen.cosets.size() * sub.size() == g.size());
            CHECK(gen.cosets[0] == 1);
            Integer v;
            for (auto const & c : conjugate_polynomial(z, gen.conjugates)) CHECK(z.is_rational(c, v));
        }
    }
}

TEST_CASE("character image examples")
{
    CHECK(char_image(rationals(), 5, 1).elements == std::vector<std::uint64_t>{1, 2, 3, 4});
    CHECK(char_image(field("x^2-5"), 5, 1).elements == std::vector<std::uint64_t>{1, 4});
    CHECK(char_image(field("x^2+1"), 2, 2).elements == std::vector<std::uint64_t>{1});
    CHECK(char_image(field("x^2+x+1"), 3, 2).elements == std::vector<std::uint64_t>{1, 4, 7});
    CHECK(char_image(field("x^4+x^3+x^2+x+1"), 5, 1).size() == 1);
    CHECK(char_image(field("x^2+2"), 2, 3).elements == std::vector<std::uint64_t>{1, 3});
}

TEST_CASE("layer examples")
{
    auto q = rationals();
    auto l = build_layer(q, 5, 1, 2);
    CHECK(l.degree() == 2);
    CHECK(l.field->discriminant() == 5);
    CHECK(kappas(l) == std::vector<std::uint64_t>{1, 4});
    auto t = build_layer(q, 3, 1, 2);
    CHECK(t.degree() == 1);
    CHECK(t.field->degree() == 1);
    auto k = field("x^2+5");
    auto z = build_layer(k, 7, 0, 3);
    CHECK(z.field == k);
    CHECK(z.degree() == 1);
    /* full cyclotomic fields */
    auto c7 = build_layer(q, 7, 1, 1);
    CHECK(c7.degree() == 6);
    CHECK(c7.field->discriminant() == Integer(-16807));
    auto c9 = build_layer(q, 3, 2, 1);
    CHECK(c9.field->degree() == 6);
    CHECK(c9.field->discriminant() == Integer(-19683));
    /* cubic subfield of Q(mu_7) */
    auto c = build_layer(q, 7, 1, 2);
    CHECK(c.degree() == 3);
    CHECK(c.field->discriminant() == 49);
    CHECK(kappas(c) == std::vector<std::uint64_t>{1, 2, 4});
}

TEST_CASE("layers over a nontrivial base")
{
    auto k = field("x^2+1");
    auto l = build_layer(k, 3, 1, 1);
    CHECK(l.degree() == 2);
    CHECK(l.field->degree() == 4);
    /* Q(i, sqrt(-3)) */
    CHECK(l.field->discriminant() == 144);
    CHECK(l.field->is_zero(l.field->evaluate(k->poly(), l.theta_image)));
    auto s = layer_s_primes(l);
    CHECK(s.over_base.size() == 1);
    CHECK(s.over_base[0].e == 2);
    CHECK(s.over_base[0].above.size() == 1);
}

TEST_CASE("s-primes of layers")
{
    auto c5 = build_layer(rationals(), 5, 1, 1);
    auto s5 = layer_s_primes(c5);
    CHECK(s5.primes.size() == 1);
    CHECK(s5.over_base[0].e == 4);
    auto k = field("x^6-793*x^3+226981");
    auto l1 = build_layer(k, 3, 1, 1);
    CHECK(l1.degree() == 1);
    auto s1 = layer_s_primes(l1);
    CHECK(s1.primes.size() == 1);
    CHECK(s1.primes[0].e == 6);
    auto l2 = build_layer(k, 3, 2, 1, {false});
    CHECK(l2.degree() == 3);
    auto s2 = layer_s_primes(l2);
    CHECK(s2.over_base.size() == 1);
    CHECK(s2.over_base[0].totally_split(3));
}

TEST_CASE("residue degrees and local orders")
{
    CHECK(residue_extension_degree(Integer(2), 3, 1, 1) == 2);
    CHECK(residue_extension_degree(Integer(2), 3, 1, 2) == 1);
    CHECK(residue_extension_degree(Integer(3), 61, 1, 1) == 10);
    CHECK_THROWS_AS(residue_extension_degree(Integer(6), 3, 1, 1), Error);
    CHECK(local_k_order(Integer(3), 1) == 2);
    CHECK(local_k_order(Integer(4), 2) == 15);
    CHECK(local_k_order(Integer(2), 3) == 7);
}

TEST_CASE("exceptional fields at 2")
{
    CHECK(!is_nonexceptional(rationals()));
    CHECK(is_nonexceptional(field("x^2+1")));
    CHECK(is_nonexceptional(field("x^2+2")));
    CHECK(!is_nonexceptional(field("x^2-2")));
    CHECK_THROWS_AS(build_layer(rationals(), 2, 2, 1), Error);
    auto l = build_layer(field("x^2+1"), 2, 3, 1);
    CHECK(l.degree() == 2);
}

TEST_CASE("layer invariants")
{
    int cases = 0;
    auto q = rationals();
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
        for (unsigned long i = 1; i <= p - 1; ++i) {
            auto l = build_layer(q, p, 1, i);
            std::uint64_t d = (p - 1) / std::gcd(p - 1, i);
            CAPTURE(p);
            CAPTURE(i);
            CHECK(l.degree() == d);
            CHECK(l.field->degree() == d);
            CHECK(l.field->is_maximal());
            /* p totally ramified, nothing else */
            auto s = layer_s_primes(l);
            CHECK(s.primes.size() == 1);
            CHECK(s.over_base[0].e == d);
            Integer disc = abs(l.field->discriminant());
            CHECK(disc == ipow(Integer(p), d - 1));
            /* kappa is h^i and the automorphisms are distinct */
            std::set<Elem> images;
            for (auto const & g : l.gamma) {
                CHECK(g.kappa == powmod(g.h, i, p));
                images.insert(g.sigma.image);
            }
            CHECK(images.size() == d);
            ++cases;
        }
    }
    for (std::uint64_t q : {2, 5, 7, 11, 13, 17})
        for (std::uint64_t p : {3, 5, 7, 61})
            for (unsigned long i = 1; i <= 4; ++i) {
                if (q == p) continue;
                std::uint64_t r = residue_extension_degree(Integer(q), p, 1, i);
                CHECK(powmod(powmod(q, i, p), r, p) == 1);
                CHECK((p - 1) % r == 0);
                ++cases;
            }
    CHECK(cases >= 100);
}
