#include <doctest.h>

#include <random>

#include "kloc/classgrp/class_group.hpp"
#include "kloc/error.hpp"
#include "kloc/numfield/factor_z.hpp"
#include "support/binary_forms.hpp"

using namespace kloc;

namespace {

FieldPtr field(std::string const & f) { return NumberField::create(parse_polynomial(f)); }

std::vector<Integer> invariants(std::initializer_list<long> l)
{
    std::vector<Integer> v;
    for (long x : l) v.emplace_back(x);
    return v;
}

long torsion_count(FiniteAbelianGroup const & g, long m)
{
    long c = 1;
    for (auto const & d : g.invariants()) c *= gcd(Integer(m), d).get_si();
    return c;
}

bool squarefree(long d)
{
    for (long q = 2; q * q <= d; ++q)
        if (d % (q * q) == 0) return false;
    return true;
}

Elem random_elem(std::mt19937_64 & rng, std::size_t n, long range)
{
    std::uniform_int_distribution<long> d(-range, range);
    Elem a(n);
    for (auto & c : a) c = d(rng);
    if (a[0] == 0) a[0] = 1;
    return a;
}

std::vector<Integer> add(FiniteAbelianGroup const & g, std::vector<Integer> a, std::vector<Integer> const & b)
{
    for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
    return g.reduce(a);
}

} // namespace

TEST_CASE("class groups of small fields")
{
    CHECK(class_group(field("x^2+5"))->structure().invariants() == invariants({2}));
    CHECK(class_group(field("x^2+23"))->structure().invariants() == invariants({3}));
    CHECK(class_group(field("x^4+x^3+x^2+x+1"))->structure().is_trivial());
    CHECK(class_group(field("x^2+1"))->structure().is_trivial());
    CHECK(class_group(field("x^2-10"))->structure().invariants() == invariants({2}));
    CHECK(class_group(field("x^2-79"))->structure().invariants() == invariants({3}));
    CHECK(class_group(field("x^2+21"))->structure().invariants() == invariants({2, 2}));
    CHECK(class_group(field("x^3-2"))->structure().is_trivial());
    CHECK(class_group(NumberField::create(ZPoly({0, 1})))->structure().is_trivial());
}

TEST_CASE("torsion units")
{
    CHECK(class_group(field("x^2+1"))->torsion_order() == 4);
    CHECK(class_group(field("x^2+x+1"))->torsion_order() == 6);
    CHECK(class_group(field("x^4+x^3+x^2+x+1"))->torsion_order() == 10);
    CHECK(class_group(field("x^2+5"))->torsion_order() == 2);
    CHECK(class_group(field("x^2-2"))->torsion_order() == 2);
}

TEST_CASE("example sextic field")
{
    auto k = field("x^6-793*x^3+226981");
    auto cl = class_group(k);
    CHECK(cl->structure().invariants() == invariants({39}));
    CHECK(cl->torsion_order() == 6);
    auto s = s_quotient(cl, 3);
    CHECK(s.structure().invariants() == invariants({39}));
    CHECK(p_primary_part(s.structure(), 3).group.invariants() == invariants({3}));
    /* actions compose */
    auto autos = k->automorphisms();
    std::vector<IntMatrix> acts;
    for (auto const & a : autos) acts.push_back(galois_action_on_classes(*cl, a));
    CHECK(acts[0] == IntMatrix{{1}});
    for (std::size_t a = 0; a < autos.size(); ++a)
        for (std::size_t b = 0; b < autos.size(); ++b) {
            Elem img = autos[a].apply(autos[b].image);
            std::size_t c = 0;
            while (autos[c].image != img) ++c;
            IntMatrix prod = acts[a] * acts[b];
            CHECK(floor_mod(prod(0, 0), 39) == acts[c](0, 0));
        }
}

TEST_CASE("focused search keeps the focus part")
{
    ClassGroupConfig cfg;
    cfg.focus = 3;
    auto cl = class_group(field("x^6-793*x^3+226981"), cfg);
    CHECK(!cl->exact());
    CHECK(p_primary_part(cl->structure(), 3).group.invariants() == invariants({3}));
    auto s = s_quotient(cl, 3);
    CHECK(p_primary_part(s.structure(), 3).group.invariants() == invariants({3}));
}

TEST_CASE("s_quotient examples")
{
    auto k = field("x^2+5");
    auto cl = class_group(k);
    CHECK(s_quotient(cl, 2).structure().is_trivial());
    CHECK(s_quotient(cl, 5).structure().invariants() == invariants({2}));
    /* quotienting by the same primes again changes nothing */
    for (long p : {2, 3, 5, 7}) {
        auto s = s_quotient(cl, p);
        for (auto const & q : s.s_primes) CHECK(s.structure().is_zero(s.map(cl->log_prime(q))));
    }
    auto c23 = class_group(field("x^2+23"));
    auto s2 = s_quotient(c23, 2);
    CHECK(s2.structure().is_trivial());
    CHECK(s_quotient(c23, 23).structure().invariants() == invariants({3}));
}

TEST_CASE("galois action examples")
{
    auto k23 = field("x^2+23");
    auto cl23 = class_group(k23);
    auto conj23 = k23->automorphisms()[1];
    CHECK(galois_action_on_classes(*cl23, conj23) == IntMatrix{{2}});
    auto k5 = field("x^2+5");
    auto cl5 = class_group(k5);
    CHECK(galois_action_on_classes(*cl5, k5->automorphisms()[1]) == IntMatrix{{1}});
}

TEST_CASE("imaginary quadratic class groups match reduced forms")
{
    int cases = 0;
    for (long d = 1; d <= 200; ++d) {
        if (!squarefree(d)) continue;
        long disc = (d % 4 == 3) ? -d : -4 * d;
        if (-disc > 200) continue;
        auto cl = class_group(NumberField::create(ZPoly({d, 0, 1})));
        auto forms = oracle::reduced_forms(disc);
        CAPTURE(d);
        CHECK(cl->structure().order() == static_cast<long>(forms.size()));
        for (auto const & [m, cnt] : oracle::torsion_counts(disc)) CHECK(torsion_count(cl->structure(), m) == cnt);
        ++cases;
    }
    CHECK(cases >= 60);
}

TEST_CASE("generator orders are confirmed by principality")
{
    int cases = 0;
    for (long d : {5, 6, 10, 13, 14, 15, 17, 21, 23, 26, 29, 30, 31, 47, 71}) {
        auto k = NumberField::create(ZPoly({d, 0, 1}));
        auto cl = class_group(k);
        auto const & g = cl->structure();
        for (std::size_t q = 2; q < 60; ++q) {
            if (!is_prime(Integer(q))) continue;
            for (auto const & p : factor_rational_prime(k, q)) {
                auto l = cl->log_prime(p);
                /* order of [P] in the group */
                long ord = 1;
                std::vector<Integer> acc = l;
                while (!g.is_zero(acc)) {
                    acc = add(g, acc, l);
                    ++ord;
                }
                auto t = is_principal(ideal_pow(p.ideal, ord));
                CHECK(t.generator.has_value());
                for (auto const & [ell, e] : factor_integer(ord)) {
                    auto u = is_principal(ideal_pow(p.ideal, ord / ell.get_si()));
                    CHECK(u.certified);
                    CHECK(!u.generator);
                }
                ++cases;
            }
        }
    }
    CHECK(cases >= 100);
}

TEST_CASE("discrete log is a homomorphism")
{
    std::mt19937_64 rng(17);
    int cases = 0;
    for (auto const * f : {"x^2+5", "x^2+23", "x^2+21", "x^2-10", "x^2-79", "x^3-x+23", "x^4+12"}) {
        auto k = field(f);
        auto cl = class_group(k);
        auto const & g = cl->structure();
        std::size_t n = k->degree();
        for (int t = 0; t < 20; ++t) {
            Ideal i = Ideal::generated(k, {random_elem(rng, n, 5), k->from_integer(2 + t % 5)});
            Ideal j = Ideal::generated(k, {random_elem(rng, n, 5), k->from_integer(3 + t % 7)});
            CHECK(cl->discrete_log(ideal_mul(i, j)) == add(g, cl->discrete_log(i), cl->discrete_log(j)));
            Elem a = random_elem(rng, n, 7);
            CHECK(g.is_zero(cl->discrete_log(Ideal::principal(k, a))));
            ++cases;
        }
    }
    CHECK(cases >= 100);
}

TEST_CASE("effort caps")
{
    ClassGroupConfig cfg;
    cfg.max_degree = 4;
    CHECK_THROWS_AS(class_group(field("x^6-793*x^3+226981"), cfg), Error);
    ClassGroupConfig small_disc;
    small_disc.max_abs_disc = 1000;
    CHECK_THROWS_AS(class_group(field("x^6-793*x^3+226981"), small_disc), Error);
    ClassGroupConfig tiny;
    tiny.max_candidates = 5;
    try {
        class_group(field("x^6-793*x^3+226981"), tiny);
        CHECK(false);
    } catch (Error const & e) {
        CHECK(e.kind() == ErrorKind::EffortExceeded);
    }
}

TEST_CASE("hints do not change the answer")
{
    auto k = field("x^2+47");
    auto plain = class_group(k);
    ClassGroupConfig cfg;
    cfg.hints = plain->certificate_elements();
    /* junk: units, zero coordinates, non-smooth norms */
    cfg.hints.push_back(k->one());
    cfg.hints.push_back(k->from_integer(0));
    cfg.hints.push_back(k->add(k->theta(), k->from_integer(1000003)));
    auto hinted = class_group(k, cfg);
    CHECK(hinted->structure() == plain->structure());
    CHECK(hinted->structure() == FiniteAbelianGroup(invariants({5})));

    cfg.seed = 9;
    cfg.hints = {k->theta(), k->scale(k->theta(), 3)};
    CHECK(class_group(k, cfg)->structure().order() == 5);
}
