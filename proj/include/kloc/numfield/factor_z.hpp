#ifndef KLOC_NUMFIELD_FACTOR_Z_HPP
#define KLOC_NUMFIELD_FACTOR_Z_HPP

#include <utility>
#include <vector>

#include "kloc/numfield/polynomial.hpp"

namespace kloc {

/* Irreducible primitive factors over Z with multiplicity (content dropped),
 * by squarefree decomposition, Hensel lifting and Zassenhaus recombination. */
std::vector<std::pair<ZPoly, unsigned>> factor_over_z(ZPoly const & f);

/* f irreducible over Q (f nonconstant) */
bool is_irreducible(ZPoly const & f);

} // namespace kloc

#endif
