#ifndef KLOC_NUMFIELD_LATTICE_HPP
#define KLOC_NUMFIELD_LATTICE_HPP

#include <functional>
#include <vector>

#include "kloc/intlinalg/int_matrix.hpp"

namespace kloc {

using RealVectors = std::vector<std::vector<long double>>;

/* Floating LLL (delta 0.99) on the real vectors; returns the unimodular T
 * with reduced vectors = T * vectors, and overwrites `vectors` with them. */
IntMatrix lll_float(RealVectors & vectors);

RealVectors gram(RealVectors const & vectors);

/* Fincke-Pohst: calls visit(x) for every nonzero integer x (one of each
 * pair +-x) with x^T G x <= bound, until visit returns false. Returns false
 * if the enumeration was stopped early or exceeded max_nodes. */
bool enumerate_short_vectors(RealVectors const & gram_matrix, long double bound,
                             std::function<bool(std::vector<long> const &, long double)> const & visit,
                             unsigned long max_nodes = 50000000UL);

/* Exact integral LLL (delta 0.99) of linearly independent rows. */
IntMatrix lll_exact(IntMatrix const & basis);

} // namespace kloc

#endif
