#ifndef KLOC_INTLINALG_ABELIAN_GROUP_HPP
#define KLOC_INTLINALG_ABELIAN_GROUP_HPP

#include <string>
#include <vector>

#include "kloc/intlinalg/int_matrix.hpp"

namespace kloc {

/* Finite abelian group Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k and
 * every d_j >= 2. The trivial group has no invariants. Elements are
 * k-vectors whose j-th entry is taken modulo d_j. */
class FiniteAbelianGroup {
    std::vector<Integer> invariants_;

  public:
    FiniteAbelianGroup() = default;
    /* throws InvalidInput unless the list is a valid divisibility chain */
    explicit FiniteAbelianGroup(std::vector<Integer> invariants);

    std::vector<Integer> const & invariants() const { return invariants_; }
    std::size_t rank() const { return invariants_.size(); }
    bool is_trivial() const { return invariants_.empty(); }
    Integer order() const;
    Integer exponent() const { return invariants_.empty() ? Integer(1) : invariants_.back(); }

    /* reduce coordinates into [0, d_j) */
    std::vector<Integer> reduce(std::vector<Integer> x) const;
    bool is_zero(std::vector<Integer> const & x) const;

    /* number of invariants divisible by ell */
    std::size_t p_rank(Integer const & ell) const;

    bool operator==(FiniteAbelianGroup const &) const = default;
    std::string to_string() const;
};

/* Cokernel of a relation matrix together with coordinate maps.
 * Generators x in Z^n map to group coordinates via x * to_group (n x k),
 * and the j-th invariant generator equals row j of from_group (k x n). */
struct Presentation {
    FiniteAbelianGroup group;
    IntMatrix to_group;
    IntMatrix from_group;

    std::vector<Integer> coordinates(std::vector<Integer> const & generator_vector) const;
};

/* Z^generator_count / (row space of relations). Throws InfiniteCokernel when
 * the relations do not have full column rank. */
FiniteAbelianGroup group_from_relations(std::size_t generator_count, IntMatrix const & relations);
Presentation present(std::size_t generator_count, IntMatrix const & relations);

/* p-Sylow subgroup; `projection` maps coordinates of g to coordinates of the
 * Sylow subgroup (x_j mod p^{v_p(d_j)}, trivial components dropped). */
struct PrimaryPart {
    FiniteAbelianGroup group;
    IntMatrix projection; /* rank(g) x rank(sylow) */
    IntMatrix inclusion;  /* rank(sylow) x rank(g): image of each Sylow generator */
};

PrimaryPart p_primary_part(FiniteAbelianGroup const & g, Integer const & p);

} // namespace kloc

#endif
