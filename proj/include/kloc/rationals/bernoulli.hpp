#ifndef KLOC_RATIONALS_BERNOULLI_HPP
#define KLOC_RATIONALS_BERNOULLI_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "kloc/integer.hpp"

namespace kloc {

/* B_k mod p for even k in [2, p-3] */
struct BernoulliTable {
    std::uint64_t p = 0;
    std::map<unsigned, std::uint64_t> values;
};

BernoulliTable bernoulli_mod_p(std::uint64_t p);

/* even k <= p-3 with p | B_k, ascending */
std::vector<unsigned> irregular_indices(std::uint64_t p);

/* A^{(omega^j)} != 0 for the p-class group A of Q(mu_p), odd j, via p | B_{p-j} */
bool eigenspace_nontrivial(std::uint64_t p, Integer const & j);

/* Does the localization sequence for K_{2i}(Q)_p split? */
bool splits_q(std::uint64_t p, Integer const & i);

/* the irregular index responsible for non-splitting at i, 0 when it splits */
unsigned responsible_index(std::uint64_t p, Integer const & i);

} // namespace kloc

#endif
