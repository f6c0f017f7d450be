#ifndef KLOC_NUMFIELD_NUMBER_FIELD_HPP
#define KLOC_NUMFIELD_NUMBER_FIELD_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "kloc/intlinalg/int_matrix.hpp"
#include "kloc/numfield/lattice.hpp"
#include "kloc/numfield/polynomial.hpp"
#include "kloc/numfield/real.hpp"

namespace kloc {

/* integral element: coordinates in the integral basis */
using Elem = std::vector<Integer>;

struct Signature {
    unsigned r1 = 0;
    unsigned r2 = 0;
    bool operator==(Signature const &) const = default;
};

class NumberField;
using FieldPtr = std::shared_ptr<NumberField const>;

struct FieldAutomorphism {
    Elem image;      /* sigma(theta) */
    IntMatrix matrix; /* row i: sigma(omega_i) */

    Elem apply(Elem const & x) const;
    bool is_identity() const;
};

/* Q[x]/(f) with its maximal order. Immutable once built. */
class NumberField {
  public:
    /* An order given by rows of numerators over a common denominator, in the power basis. */
    struct Order {
        IntMatrix numerators;
        Integer denominator = 1;
    };

    /* validated field with maximal order; throws NotMonic, Reducible, DegreeZero */
    static FieldPtr create(ZPoly const & f);

    /* Field for an irreducible f whose order is built from `seed`. The order is made
     * maximal at `primes`; when `complete` is set the remaining part of the discriminant
     * is factored as well (EffortExceeded if that fails). Otherwise the field only claims
     * maximality at `primes`. */
    static FieldPtr create_with_order(ZPoly const & f, Order const & seed, std::vector<Integer> const & primes, bool complete);

    ZPoly const & poly() const { return f_; }
    std::size_t degree() const { return n_; }

    /* omega_i = (sum_j numerators(i, j) theta^j) / denominator, lower triangular, omega_0 = 1 */
    IntMatrix const & basis_numerators() const { return basis_; }
    Integer const & basis_denominator() const { return den_; }
    /* row j: coordinates of theta^j */
    IntMatrix const & power_to_basis() const { return power_to_basis_; }
    std::vector<std::vector<Rational>> integral_basis() const;

    /* maximal everywhere, or only at the primes listed in maximal_at() */
    bool is_maximal() const { return complete_; }
    std::vector<Integer> const & maximal_at() const { return maximal_at_; }
    Integer const & discriminant() const { return disc_; }
    Integer const & index() const { return index_; }
    /* primes dividing the discriminant (complete fields) */
    std::vector<Integer> const & ramified_primes() const { return ramified_; }

    Signature signature() const;
    unsigned unit_rank() const;
    /* roots with the r1 real ones first, then one of each complex pair (imaginary part > 0) */
    std::vector<Complex> roots(mpfr_prec_t prec = 128) const;

    Elem one() const;
    Elem from_integer(Integer const & a) const;
    Elem theta() const;
    bool is_zero(Elem const & a) const;
    Elem add(Elem const & a, Elem const & b) const;
    Elem sub(Elem const & a, Elem const & b) const;
    Elem scale(Elem const & a, Integer const & k) const;
    Elem mul(Elem const & a, Elem const & b) const;
    Elem pow(Elem const & a, Integer const & e) const;
    /* multiplication by a: row i = a * omega_i */
    IntMatrix mult_matrix(Elem const & a) const;
    Integer norm(Elem const & a) const;
    Integer trace(Elem const & a) const;
    /* exact a / b if it is integral */
    std::optional<Elem> divide(Elem const & a, Elem const & b) const;

    QPoly to_poly(Elem const & a) const;
    /* coordinates of a polynomial in theta; rational in general */
    std::vector<Rational> coordinates(QPoly const & p) const;
    /* integral coordinates or nothing */
    std::optional<Elem> to_elem(QPoly const & p) const;
    Elem evaluate(ZPoly const & g, Elem const & a) const;

    /* Complex value of a under the embedding theta -> roots()[j] */
    Complex embed(Elem const & a, std::size_t j, mpfr_prec_t prec = 128) const;
    /* real T2 coordinates of each basis element: T2(x) = |x * M|^2 */
    RealVectors const & t2_embedding() const;
    long double t2(Elem const & a) const;

    Rational minkowski_bound() const;

    /* integral roots of a monic integer polynomial in K, verified exactly */
    std::vector<Elem> roots_of(ZPoly const & g) const;
    std::vector<FieldAutomorphism> automorphisms() const;
    FieldAutomorphism automorphism_from_image(Elem const & image) const;

    /* coordinate k of omega_i * omega_j */
    Integer const & mult_table_entry(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * n_ + j) * n_ + k]; }

  private:
    NumberField() = default;
    void set_order(IntMatrix const & numerators, Integer const & den);
    void maximize_at(Integer const & q);
    bool round2_step(std::uint64_t q);
    bool dedekind_maximal(std::uint64_t q) const;
    bool is_equation_order() const;
    std::vector<Elem> roots_impl(ZPoly const & g, unsigned boost) const;

    ZPoly f_;
    std::size_t n_ = 0;
    IntMatrix basis_;
    Integer den_ = 1;
    IntMatrix power_to_basis_;
    std::vector<Integer> table_;
    Integer disc_;
    Integer index_ = 1;
    bool complete_ = false;
    std::vector<Integer> maximal_at_;
    std::vector<Integer> ramified_;

    mutable std::once_flag sig_once_;
    mutable Signature sig_;
    mutable std::once_flag roots_once_;
    mutable std::vector<Complex> roots_;
    mutable std::once_flag t2_once_;
    mutable RealVectors t2_;
    mutable std::once_flag auto_once_;
    mutable std::vector<FieldAutomorphism> autos_;
};

/* O / qO for a word-size prime q, elements as coordinate vectors mod q */
class ResidueRing {
  public:
    using Vec = std::vector<std::uint64_t>;
    ResidueRing(NumberField const & k, std::uint64_t q);
    std::uint64_t modulus() const { return q_; }
    std::size_t degree() const { return n_; }
    Vec reduce(Elem const & a) const;
    Vec one() const;
    Vec mul(Vec const & a, Vec const & b) const;
    Vec pow(Vec const & a, Integer const & e) const;

  private:
    std::uint64_t q_;
    std::size_t n_;
    std::vector<std::uint64_t> table_;
};

/* lower HNF of the radical of qO in integral-basis coordinates */
IntMatrix radical_of_prime(NumberField const & k, std::uint64_t q);

/* order basis rows (lower triangular HNF in the power basis) from arbitrary generators */
NumberField::Order normalize_order(IntMatrix const & numerators, Integer const & den);

} // namespace kloc

#endif
