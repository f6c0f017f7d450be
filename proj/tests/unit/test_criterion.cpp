#include <doctest.h>

#include <random>

#include "kloc/criterion/criterion.hpp"
#include "kloc/error.hpp"
#include "kloc/rationals/bernoulli.hpp"

using namespace kloc;

namespace {

FieldPtr field(std::string const & f) { return NumberField::create(parse_polynomial(f)); }
FieldPtr rationals() { return NumberField::create(ZPoly({0, 1})); }
FieldPtr example() { return field("x^6-793*x^3+226981"); }

std::vector<Integer> invariants(std::initializer_list<long> l)
{
    std::vector<Integer> v;
    for (long x : l) v.emplace_back(x);
    return v;
}

} // namespace

TEST_CASE("obstruction examples")
{
    for (auto const & k : {rationals(), field("x^2+1"), example()})
        for (unsigned long i : {1ul, 2ul, 7ul}) CHECK(obstruction(k, 3, i, 0).group.is_trivial());
    auto r = obstruction(example(), 3, 1, 1);
    CHECK(r.group.invariants() == invariants({3}));
    CHECK(r.layer_degree == 1);
    CHECK(r.s_prime_count == 1);
    CHECK(obstruction(rationals(), 5, 1, 1).group.is_trivial());
    CHECK(obstruction(rationals(), 5, 1, 1).layer_degree == 4);
    CHECK(obstruction(field("x^2+1"), 2, 1, 1).large_n_only);
    CHECK_THROWS_AS(obstruction(rationals(), 2, 1, 1), Error);
}

TEST_CASE("twisted action reaches the coinvariants")
{
    /* Q(sqrt(-23)) has class group Z/3, 23 is inert-free ramified; level 1 at p = 3 adjoins sqrt(-3) */
    auto r = obstruction(field("x^2+23"), 3, 1, 1);
    CHECK(r.layer_degree == 2);
    CHECK(r.route == ObstructionRoute::FullCoinvariants);
}

TEST_CASE("trieste shortcut")
{
    auto w = trieste_shortcut(example(), 3);
    REQUIRE(w.has_value());
    CHECK(w->class_p_part.invariants() == invariants({3}));
    CHECK(!trieste_shortcut(field("x^4+x^3+x^2+x+1"), 5));
    CHECK(!trieste_shortcut(rationals(), 3));
    CHECK(!trieste_shortcut(field("x^2+x+1"), 3));
}

TEST_CASE("splitting verdicts")
{
    for (unsigned long i : {1ul, 2ul}) {
        auto v = analyze_splitting(example(), 3, i, 2);
        CHECK(v.kind == VerdictKind::DoesNotSplit);
        CHECK(v.level == 1);
        CHECK(v.via_trieste);
    }
    auto q3 = analyze_splitting(rationals(), 3, 1, 2);
    CHECK(q3.kind == VerdictKind::SplitsCertified);
    auto q5 = analyze_splitting(rationals(), 5, 3, 2);
    CHECK(q5.kind == VerdictKind::SplitsCertified);
    CHECK_THROWS_AS(analyze_splitting(rationals(), 2, 1, 2), Error);
    auto qi = analyze_splitting(field("x^2+1"), 2, 1, 1);
    CHECK(qi.reports.size() == 1);
    CHECK(qi.reports[0].group.is_trivial());
}

TEST_CASE("tower certificates")
{
    auto c = certify_split_tower(rationals(), 5, 1, 1);
    REQUIRE(c.has_value());
    CHECK(c->step_degree == 5);
    CHECK(certify_split_tower(field("x^4+x^3+x^2+x+1"), 5, 1, 1).has_value());
    /* 3 splits in Q(sqrt(-11)) */
    CHECK(!certify_split_tower(field("x^2+x+3"), 3, 1, 1));
    CHECK(!certify_split_tower(field("x^2+x+2"), 2, 1, 1));
    /* two primes above 3 in Q(sqrt(-2)) */
    CHECK(!certify_split_tower(field("x^2+2"), 3, 2, 1));
}

TEST_CASE("jaulent check")
{
    auto j = jaulent_check(example(), 3);
    for (bool h : j.hypotheses) CHECK(h);
    CHECK(j.conclusion);
    auto c3 = jaulent_check(field("x^2+x+1"), 3);
    CHECK(c3.hypotheses[0]);
    CHECK(!c3.hypotheses[1]);
    CHECK(!c3.conclusion);
    auto q = jaulent_check(rationals(), 3);
    CHECK(!q.hypotheses[0]);
    CHECK(!q.conclusion);
    CHECK_THROWS_AS(jaulent_check(rationals(), 2), Error);
}

TEST_CASE("rational field agrees with the bernoulli route")
{
    for (std::uint64_t p : {3, 5, 7, 11, 13})
        for (unsigned long i = 1; i <= p - 1; ++i) {
            CAPTURE(p);
            CAPTURE(i);
            auto v = analyze_splitting(rationals(), p, i, 2);
            bool split = v.kind == VerdictKind::SplitsCertified;
            CHECK(v.kind != VerdictKind::DoesNotSplit);
            CHECK(split == splits_q(p, Integer(i)));
        }
}

TEST_CASE("obstruction triviality does not depend on i when mu_p is in the field")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<unsigned long> d(1, 40);
    int cases = 0;
    struct Case {
        char const * f;
        std::uint64_t p;
        unsigned max_n;
    };
    for (auto const & c : {Case{"x^2+x+1", 3, 2}, Case{"x^6-793*x^3+226981", 3, 1}, Case{"x^2+1", 2, 2},
                           Case{"x^4+x^3+x^2+x+1", 5, 1}, Case{"x^2+2", 2, 2}}) {
        auto k = field(c.f);
        for (unsigned n = 0; n <= c.max_n; ++n)
            for (int t = 0; t < 4; ++t) {
                unsigned long i = d(rng), j = d(rng);
                CAPTURE(c.f);
                CAPTURE(n);
                CHECK(obstruction(k, c.p, i, n).group.is_trivial() == obstruction(k, c.p, j, n).group.is_trivial());
                ++cases;
            }
    }
    CHECK(cases >= 40);
}

TEST_CASE("level zero is always trivial")
{
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<unsigned long> d(1, 1000);
    int cases = 0;
    for (auto const * f : {"x", "x^2+1", "x^2+5", "x^2-2", "x^3-2", "x^2+23", "x^2+x+1"})
        for (std::uint64_t p : {3, 5, 7, 11})
            for (int t = 0; t < 4; ++t) {
                auto k = field(f);
                auto r = obstruction(k, p, d(rng), 0);
                CHECK(r.group.is_trivial());
                ++cases;
            }
    CHECK(cases >= 100);
}
