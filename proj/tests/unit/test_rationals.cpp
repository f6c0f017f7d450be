#include <doctest.h>

#include "kloc/error.hpp"
#include "kloc/rationals/bernoulli.hpp"
#include "support/exact_bernoulli.hpp"

using namespace kloc;

TEST_CASE("bernoulli_mod_p examples")
{
    CHECK(bernoulli_mod_p(5).values.at(2) == 1);
    CHECK(bernoulli_mod_p(7).values.at(4) == 3);
    CHECK(bernoulli_mod_p(691).values.at(12) == 0);
    CHECK(bernoulli_mod_p(3).values.empty());
}

TEST_CASE("table matches exact Bernoulli numbers")
{
    auto exact = oracle::bernoulli_exact(200);
    for (std::uint64_t p : {5, 7, 11, 13, 37, 59, 67, 101, 103, 131, 149, 157, 191}) {
        auto t = bernoulli_mod_p(p);
        for (auto const & [k, v] : t.values) {
            CHECK(k % 2 == 0);
            CHECK(v < p);
            CHECK(v == oracle::reduce(exact[k], p));
        }
        CHECK(t.values.size() == (p - 3) / 2);
    }
}

TEST_CASE("irregular indices")
{
    CHECK(irregular_indices(37) == std::vector<unsigned>{32});
    CHECK(irregular_indices(13).empty());
    CHECK(irregular_indices(157) == std::vector<unsigned>{62, 110});
    CHECK(irregular_indices(691) == std::vector<unsigned>{12, 200});
    for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) CHECK(irregular_indices(p).empty());
}

TEST_CASE("eigenspace_nontrivial")
{
    CHECK(eigenspace_nontrivial(37, 5));
    for (long j = 1; j < 4; j += 2) CHECK_FALSE(eigenspace_nontrivial(5, j));
    CHECK(eigenspace_nontrivial(691, 679));
    CHECK_FALSE(eigenspace_nontrivial(37, 1));
    try {
        eigenspace_nontrivial(37, 4);
        FAIL("expected an error");
    } catch (Error const & e) {
        CHECK(e.kind() == ErrorKind::EvenIndex);
    }
}

TEST_CASE("splits_q")
{
    for (long i = 1; i <= 20; ++i) CHECK(splits_q(3, i));
    CHECK_FALSE(splits_q(37, 31));
    CHECK_FALSE(splits_q(37, 31 + 36 * 5));
    CHECK(splits_q(37, 1));
    CHECK(responsible_index(37, 31) == 32);
    for (long i = 1; i <= 200; ++i) CHECK(splits_q(37, i) == splits_q(37, i + 36));
    for (long i = 1; i <= 12; ++i) CHECK(splits_q(13, i));
    try {
        splits_q(2, 1);
        FAIL("expected an error");
    } catch (Error const & e) {
        CHECK(e.kind() == ErrorKind::OutOfTheoremScope);
    }
}
