#include "kloc/rationals/bernoulli.hpp"

#include "kloc/error.hpp"

namespace kloc {

namespace {

void require_odd_prime(std::uint64_t p)
{
    if (p == 2) throw Error(ErrorKind::OutOfTheoremScope, "p = 2 over Q: Q is exceptional");
    if (p < 3 || !is_prime(p)) throw Error(ErrorKind::InvalidInput, "p must be an odd prime");
}

/* largest p for which the plus part of Cl(Q(mu_p)) is known to vanish */
constexpr std::uint64_t plus_part_verified_below = 2147483648ULL;

} // namespace

BernoulliTable bernoulli_mod_p(std::uint64_t p)
{
    require_odd_prime(p);
    BernoulliTable t{p, {}};
    if (p < 5) return t;
    std::uint64_t const top = p - 3;
    /* factorials up to top + 1 < p are invertible */
    std::vector<std::uint64_t> fact(top + 2, 1), inv_fact(top + 2, 1);
    for (std::uint64_t k = 1; k <= top + 1; ++k) fact[k] = mulmod(fact[k - 1], k, p);
    inv_fact[top + 1] = invmod(fact[top + 1], p);
    for (std::uint64_t k = top + 1; k > 0; --k) inv_fact[k - 1] = mulmod(inv_fact[k], k, p);
    auto binom = [&](std::uint64_t n, std::uint64_t k) { return mulmod(fact[n], mulmod(inv_fact[k], inv_fact[n - k], p), p); };

    std::vector<std::uint64_t> b(top + 1, 0);
    b[0] = 1;
    b[1] = p - invmod(2, p);
    for (std::uint64_t m = 2; m <= top; m += 2) {
        /* sum_{j<m} C(m+1, j) B_j, odd j > 1 vanish */
        std::uint64_t s = (1 + mulmod(binom(m + 1, 1), b[1], p)) % p;
        for (std::uint64_t j = 2; j < m; j += 2) s = (s + mulmod(binom(m + 1, j), b[j], p)) % p;
        std::uint64_t v = mulmod(s, invmod((m + 1) % p, p), p);
        b[m] = v ? p - v : 0;
        t.values[static_cast<unsigned>(m)] = b[m];
    }
    return t;
}

std::vector<unsigned> irregular_indices(std::uint64_t p)
{
    std::vector<unsigned> out;
    for (auto const & [k, v] : bernoulli_mod_p(p).values)
        if (v == 0) out.push_back(k);
    return out;
}

bool eigenspace_nontrivial(std::uint64_t p, Integer const & j)
{
    require_odd_prime(p);
    Integer jr = floor_mod(j, Integer(static_cast<unsigned long>(p - 1)));
    if (jr % 2 == 0) throw Error(ErrorKind::EvenIndex, "eigenspace index must be odd");
    /* j = 1: the Teichmueller component is always trivial */
    if (jr == 1) return false;
    unsigned k = static_cast<unsigned>(p - jr.get_ui());
    for (unsigned irr : irregular_indices(p))
        if (irr == k) return true;
    return false;
}

unsigned responsible_index(std::uint64_t p, Integer const & i)
{
    require_odd_prime(p);
    if (i < 1) throw Error(ErrorKind::InvalidInput, "twist index must be >= 1");
    Integer j = floor_mod(Integer(-i), Integer(static_cast<unsigned long>(p - 1)));
    if (j % 2 == 0) {
        /* even components sit in the plus part */
        if (p >= plus_part_verified_below) throw Error(ErrorKind::OutOfTheoremScope, "plus part not known to vanish for this p");
        return 0;
    }
    return eigenspace_nontrivial(p, j) ? static_cast<unsigned>(p - j.get_ui()) : 0;
}

bool splits_q(std::uint64_t p, Integer const & i)
{
    return responsible_index(p, i) == 0;
}

} // namespace kloc
