#ifndef KLOC_INTLINALG_GALOIS_MODULE_HPP
#define KLOC_INTLINALG_GALOIS_MODULE_HPP

#include <map>
#include <string>
#include <vector>

#include "kloc/intlinalg/abelian_group.hpp"

namespace kloc {

/* Column j of `action` holds the image of the j-th invariant generator. */
struct GaloisActor {
    std::string label;
    IntMatrix action;
};

struct GaloisModule {
    FiniteAbelianGroup group;
    std::vector<GaloisActor> actors;
    /* label -> kappa(gamma), a unit mod p^n */
    std::map<std::string, Integer> character;

    /* image of x under actor k, reduced */
    std::vector<Integer> apply(std::size_t k, std::vector<Integer> const & x) const;
};

/* A/p^n A modulo < kappa(g) * g(a) - a > over actors g and generators a. */
FiniteAbelianGroup twisted_coinvariants(GaloisModule const & m, Integer const & p, unsigned n);

} // namespace kloc

#endif
