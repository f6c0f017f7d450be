#ifndef KLOC_INTLINALG_NORMAL_FORM_HPP
#define KLOC_INTLINALG_NORMAL_FORM_HPP

#include <vector>

#include "kloc/intlinalg/int_matrix.hpp"

namespace kloc {

/* Row Hermite normal form: the nonzero rows of the unique echelon basis of
 * the row lattice of m. Pivots are positive and every entry above a pivot
 * lies in [0, pivot). Zero rows are dropped, so the result has rank(m) rows. */
IntMatrix hnf(IntMatrix const & m);

/* Same as hnf() for a full-rank lattice L (rank = cols) such that
 * d * Z^cols is contained in L; all intermediate entries stay below d. */
IntMatrix hnf_modulo(IntMatrix const & m, Integer const & d);

/* Lower triangular variants for full-rank lattices: row i has its last
 * nonzero entry (positive) in column i, entries left of it reduced modulo
 * the pivots below. */
IntMatrix hnf_lower(IntMatrix const & m);
IntMatrix hnf_lower_modulo(IntMatrix const & m, Integer const & d);

/* Unimodular u, v with u * m * v = d, d diagonal with d_0 | d_1 | ... (zeros last). */
struct SmithForm {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    IntMatrix v_inverse;
};

SmithForm snf(IntMatrix const & m);

/* Diagonal of the Smith form, min(rows, cols) entries. */
std::vector<Integer> elementary_divisors(IntMatrix const & m);

} // namespace kloc

#endif
