#ifndef KLOC_INTEGER_HPP
#define KLOC_INTEGER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace kloc {

using Integer = mpz_class;
using Rational = mpq_class;

/* representative of a mod m in [0, |m|) */
Integer floor_mod(Integer const & a, Integer const & m);
Integer ipow(Integer const & base, unsigned long exp);
Integer gcd(Integer const & a, Integer const & b);
Integer lcm(Integer const & a, Integer const & b);

/* returns g = gcd(a, b) >= 0 and sets s, t with s*a + t*b = g */
Integer xgcd(Integer const & a, Integer const & b, Integer & s, Integer & t);

/* nearest integer to a/b, ties rounded towards -infinity */
Integer round_div(Integer const & a, Integer const & b);

bool is_prime(Integer const & n);
bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);

/* largest k with p^k | n; n must be nonzero */
unsigned valuation(Integer n, Integer const & p);

/* complete factorization of |n| (n != 0), ascending primes. Trial division
 * followed by Pollard-Brent rho; throws EffortExceeded if a composite
 * cofactor resists the configured iteration budget. */
std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n, unsigned long rho_budget = 2000000);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/* exact square root if n is a perfect square */
bool perfect_square(Integer const & n, Integer & root);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/* multiplicative order of a modulo m (gcd(a, m) = 1) */
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

std::uint64_t to_u64(Integer const & x);
long to_long(Integer const & x);

} // namespace kloc

#endif
