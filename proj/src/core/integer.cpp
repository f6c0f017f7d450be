#include "kloc/integer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "kloc/error.hpp"

namespace kloc {

char const * to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InfiniteCokernel: return "InfiniteCokernel";
    case ErrorKind::MissingCharacter: return "MissingCharacter";
    case ErrorKind::NotPGroup: return "NotPGroup";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::EffortExceeded: return "EffortExceeded";
    case ErrorKind::OutOfTheoremScope: return "OutOfTheoremScope";
    case ErrorKind::EvenIndex: return "EvenIndex";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownExample: return "UnknownExample";
    }
    return "Unknown";
}

Integer floor_mod(Integer const & a, Integer const & m)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer ipow(Integer const & base, unsigned long exp)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Integer gcd(Integer const & a, Integer const & b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm(Integer const & a, Integer const & b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer xgcd(Integer const & a, Integer const & b, Integer & s, Integer & t)
{
    Integer g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer round_div(Integer const & a, Integer const & b)
{
    /* floor((2a + b) / 2b) for b > 0 */
    Integer num = 2 * a;
    Integer den = 2 * b;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num += den / 2;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

bool is_prime(Integer const & n)
{
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    /* deterministic for 64-bit inputs */
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n)
{
    std::uint64_t c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

unsigned valuation(Integer n, Integer const & p)
{
    unsigned v = 0;
    if (n == 0) return 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

namespace {

bool pollard_brent(Integer const & n, unsigned long budget, std::mt19937_64 & rng, Integer & factor)
{
    if (mpz_even_p(n.get_mpz_t())) {
        factor = 2;
        return true;
    }
    unsigned long spent = 0;
    while (spent < budget) {
        Integer c = Integer(static_cast<unsigned long>(rng() % 1000000 + 1));
        Integer y = Integer(static_cast<unsigned long>(rng() % 1000000));
        Integer x, ys, q = 1, g = 1;
        unsigned long r = 1, m = 128;
        auto step = [&](Integer & v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) step(y);
            unsigned long k = 0;
            do {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    step(y);
                    Integer d = x - y;
                    q = q * abs(d);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                spent += lim;
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1 && spent < budget);
        if (g == n) {
            do {
                step(ys);
                g = gcd(abs(Integer(x - ys)), n);
            } while (g == 1);
        }
        if (g != n && g != 1) {
            factor = g;
            return true;
        }
    }
    return false;
}

void factor_rec(Integer const & n, unsigned long budget, std::mt19937_64 & rng, std::map<Integer, unsigned> & out)
{
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer root;
    if (perfect_square(n, root)) {
        factor_rec(root, budget, rng, out);
        factor_rec(root, budget, rng, out);
        return;
    }
    Integer d;
    if (!pollard_brent(n, budget, rng, d))
        throw Error(ErrorKind::EffortExceeded, "could not factor " + n.get_str());
    factor_rec(d, budget, rng, out);
    factor_rec(Integer(n / d), budget, rng, out);
}

} // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n, unsigned long rho_budget)
{
    if (n == 0) throw Error(ErrorKind::InvalidInput, "factor_integer(0)");
    n = abs(n);
    std::map<Integer, unsigned> acc;
    for (unsigned long p = 2; p < 20000; p += (p == 2 ? 1 : 2)) {
        if (n == 1) break;
        if (Integer(p) * p > n) break;
        unsigned v = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++v;
        }
        if (v) acc[Integer(p)] += v;
    }
    std::mt19937_64 rng(0x6b6c6f63ULL);
    factor_rec(n, rho_budget, rng, acc);
    return {acc.begin(), acc.end()};
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound)
{
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(bound + 1, true);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

bool perfect_square(Integer const & n, Integer & root)
{
    if (n < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m)
{
    Integer s, t;
    Integer g = xgcd(Integer(static_cast<unsigned long>(a % m)), Integer(static_cast<unsigned long>(m)), s, t);
    if (g != 1) throw Error(ErrorKind::InvalidInput, "invmod: not invertible");
    return to_u64(floor_mod(s, Integer(static_cast<unsigned long>(m))));
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m)
{
    if (m == 1) return 1;
    a %= m;
    if (std::gcd(a, m) != 1) throw Error(ErrorKind::InvalidInput, "multiplicative_order: gcd(a, m) != 1");
    /* order divides phi(m) */
    std::uint64_t phi = m;
    {
        std::uint64_t t = m;
        for (std::uint64_t p = 2; p * p <= t; ++p) {
            if (t % p == 0) {
                while (t % p == 0) t /= p;
                phi -= phi / p;
            }
        }
        if (t > 1) phi -= phi / t;
    }
    std::uint64_t ord = phi;
    std::uint64_t t = phi;
    for (std::uint64_t p = 2; p * p <= t; ++p) {
        if (t % p) continue;
        while (t % p == 0) t /= p;
        while (ord % p == 0 && powmod(a, ord / p, m) == 1) ord /= p;
    }
    if (t > 1)
        while (ord % t == 0 && powmod(a, ord / t, m) == 1) ord /= t;
    return ord;
}

std::uint64_t to_u64(Integer const & x)
{
    if (x < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 64)
        throw Error(ErrorKind::InvalidInput, "integer out of 64-bit range: " + x.get_str());
    std::uint64_t r = 0;
    mpz_export(&r, nullptr, -1, sizeof r, 0, 0, x.get_mpz_t());
    return r;
}

long to_long(Integer const & x)
{
    if (!x.fits_slong_p()) throw Error(ErrorKind::InvalidInput, "integer out of long range: " + x.get_str());
    return x.get_si();
}

} // namespace kloc
