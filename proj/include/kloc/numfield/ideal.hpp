#ifndef KLOC_NUMFIELD_IDEAL_HPP
#define KLOC_NUMFIELD_IDEAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "kloc/numfield/number_field.hpp"

namespace kloc {

/* Ideal of O_K as a Z-module: rows of a lower triangular HNF in integral-basis
 * coordinates, divided by `denominator`. Row 0 is (min integer, 0, ..., 0). */
class Ideal {
  public:
    Ideal() = default;
    Ideal(FieldPtr field, IntMatrix hnf, Integer denominator = 1);

    static Ideal unit(FieldPtr const & field);
    static Ideal principal(FieldPtr const & field, Elem const & a);
    static Ideal from_integer(FieldPtr const & field, Integer const & a);
    /* O_K-ideal generated by the elements; `multiple` is a nonzero integer in it, or 0 */
    static Ideal generated(FieldPtr const & field, std::vector<Elem> const & gens, Integer const & multiple = 0);

    FieldPtr const & field() const { return field_; }
    IntMatrix const & matrix() const { return hnf_; }
    Integer const & denominator() const { return den_; }
    bool is_integral() const { return den_ == 1; }
    Rational norm() const;
    /* smallest positive integer in an integral ideal */
    Integer const & min_integer() const { return hnf_(0, 0); }
    bool contains(Elem const & a) const;
    bool is_unit() const;
    std::vector<Elem> basis() const;
    bool operator==(Ideal const & o) const;

  private:
    FieldPtr field_;
    IntMatrix hnf_;
    Integer den_ = 1;
};

Ideal ideal_mul(Ideal const & a, Ideal const & b);
Ideal ideal_add(Ideal const & a, Ideal const & b);
Ideal ideal_pow(Ideal const & a, unsigned long e);
Rational ideal_norm(Ideal const & a);
Ideal apply(FieldAutomorphism const & s, Ideal const & a);

struct PrimeIdealFactor {
    Ideal ideal;
    Integer p;
    unsigned e = 0;
    unsigned f = 0;
    /* beta with beta P in pO and beta not in pO, used for valuations */
    Elem anti_uniformizer;
};

std::vector<PrimeIdealFactor> factor_rational_prime(FieldPtr const & field, Integer const & q);

/* v_P(a) for a nonzero integral element */
long valuation(PrimeIdealFactor const & p, Elem a);
long valuation(PrimeIdealFactor const & p, Ideal const & a);

/* prime factorization of a nonzero integral ideal */
std::vector<std::pair<PrimeIdealFactor, long>> factor_ideal(Ideal const & a);

struct PrincipalTest {
    std::optional<Elem> generator;
    /* a missing generator is a proof of non-principality */
    bool certified = false;
};

/* Looks for a in I with |N(a)| = N(I) among lattice vectors of T2 at most
 * safety * n * N(I)^(2/n). Without units of infinite order this radius covers
 * every generator, so a negative answer is certified then. */
PrincipalTest is_principal(Ideal const & ideal, double safety = 1.2);

} // namespace kloc

#endif
