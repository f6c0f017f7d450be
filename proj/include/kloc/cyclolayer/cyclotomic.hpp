#ifndef KLOC_CYCLOLAYER_CYCLOTOMIC_HPP
#define KLOC_CYCLOLAYER_CYCLOTOMIC_HPP

#include <cstdint>
#include <vector>

#include "kloc/numfield/polynomial.hpp"

namespace kloc {

/* Exact arithmetic in Z[zeta_m] for m = p^n. Elements are length-m vectors of
 * coefficients of zeta^j; `reduce` gives the canonical coordinates in the power
 * basis 1, zeta, ..., zeta^(phi(m)-1). */
class CycloRing {
  public:
    using Elt = std::vector<Integer>;

    CycloRing(std::uint64_t p, unsigned n);

    std::uint64_t p() const { return p_; }
    std::uint64_t modulus() const { return m_; }
    std::uint64_t phi() const { return phi_; }

    Elt zero() const { return Elt(m_); }
    Elt constant(Integer const & c) const;
    Elt zeta_power(std::uint64_t j) const;
    Elt add(Elt const & a, Elt const & b) const;
    Elt sub(Elt const & a, Elt const & b) const;
    Elt mul(Elt const & a, Elt const & b) const;
    /* zeta -> zeta^a */
    Elt sigma(Elt const & x, std::uint64_t a) const;

    std::vector<Integer> reduce(Elt const & x) const;
    bool equal(Elt const & a, Elt const & b) const { return reduce(sub(a, b)) == std::vector<Integer>(phi_); }
    /* the rational value of x, if x is rational */
    bool is_rational(Elt const & x, Integer & value) const;

  private:
    std::uint64_t p_, m_, phi_;
};

/* sum of zeta^(j h) over h in the subgroup */
CycloRing::Elt orbit_sum(CycloRing const & z, std::vector<std::uint64_t> const & subgroup, std::uint64_t j);

/* Generator of Q(zeta)^sub, together with its conjugates over the coset
 * representatives of sub in super (first representative 1). */
struct SubfieldGenerator {
    CycloRing::Elt element;
    std::vector<std::uint64_t> cosets;
    std::vector<CycloRing::Elt> conjugates;
};

SubfieldGenerator subfield_generator(CycloRing const & z, std::vector<std::uint64_t> const & sub,
                                     std::vector<std::uint64_t> const & super);

/* prod (X - c) over the conjugates; coefficients low to high */
std::vector<CycloRing::Elt> conjugate_polynomial(CycloRing const & z, std::vector<CycloRing::Elt> const & conjugates);

/* units mod m and subgroup helpers */
std::vector<std::uint64_t> unit_group(std::uint64_t m);
std::vector<std::uint64_t> generated_subgroup(std::vector<std::uint64_t> const & gens, std::uint64_t m);

} // namespace kloc

#endif
