#ifndef KLOC_CLASSGRP_CLASS_GROUP_HPP
#define KLOC_CLASSGRP_CLASS_GROUP_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kloc/intlinalg/abelian_group.hpp"
#include "kloc/numfield/ideal.hpp"

namespace kloc {

struct ClassGroupConfig {
    std::size_t max_degree = 12;
    /* 0 means no limit */
    Integer max_abs_disc = Integer("1000000000000");
    /* candidate elements tested before giving up */
    unsigned long max_candidates = 3000000;
    std::uint64_t seed = 1;
    /* if nonzero, only the part of the group of this prime order is certified */
    Integer focus = 0;
    /* factor base bound is about fb_scale * log(|disc|)^2 */
    double fb_scale = 0.15;
    /* elements tried as relations before the search, e.g. from a cache; never trusted */
    std::vector<Elem> hints;
};

/* One element of O_K supported on the factor base, with its valuations. */
struct Relation {
    Elem element;
    std::vector<Integer> valuations;
};

class ClassGroup {
  public:
    FieldPtr const & field() const { return field_; }
    /* factor base; its classes generate the group */
    std::vector<PrimeIdealFactor> const & generators() const { return fb_; }
    IntMatrix const & relations() const { return relations_; }
    std::vector<Relation> const & relation_elements() const { return elements_; }
    Presentation const & presentation() const { return pres_; }
    FiniteAbelianGroup const & structure() const { return pres_.group; }
    /* false when only the focus part was certified */
    bool exact() const { return focus_ == 0; }
    Integer const & focus() const { return focus_; }
    /* number of roots of unity and a generator of them */
    unsigned long torsion_order() const { return w_; }
    Elem const & torsion_generator() const { return zeta_; }

    /* vector e over the generators with [P] = sum e_j [P_j] */
    std::vector<Integer> prime_exponents(PrimeIdealFactor const & p) const;
    /* class of a prime / integral ideal in structure coordinates */
    std::vector<Integer> log_prime(PrimeIdealFactor const & p) const;
    std::vector<Integer> discrete_log(Ideal const & a) const;

    friend std::shared_ptr<ClassGroup const> class_group(FieldPtr const & field, ClassGroupConfig const & config);

    /* elements found for primes outside the factor base so far */
    std::vector<Elem> certificate_elements() const;

    /* candidate search used for relations and logs */
    std::optional<Relation> smooth_element(Ideal const & ideal, Integer const & extra_norm, unsigned tries) const;

  private:
    ClassGroup() = default;
    std::optional<std::vector<Integer>> fb_valuations(Elem const & a, Integer const & extra_norm) const;
    std::optional<std::size_t> fb_index(PrimeIdealFactor const & p) const;

    FieldPtr field_;
    ClassGroupConfig config_;
    std::vector<PrimeIdealFactor> fb_;
    std::vector<Integer> fb_rational_;
    IntMatrix relations_;
    std::vector<Relation> elements_;
    Presentation pres_;
    Integer focus_ = 0;
    unsigned long w_ = 2;
    Elem zeta_;

    mutable std::mutex mutex_;
    mutable std::mt19937_64 rng_;
    mutable unsigned long spent_ = 0;
    mutable std::map<std::string, std::vector<Integer>> log_cache_;
    mutable std::vector<Elem> cert_elements_;
    /* hints by the part of their norm outside the factor base */
    std::map<Integer, std::vector<Elem>> cert_hints_;
};

using ClassGroupPtr = std::shared_ptr<ClassGroup const>;

ClassGroupPtr class_group(FieldPtr const & field, ClassGroupConfig const & config = {});

/* Cl modulo the classes of the primes above p */
struct SClassGroup {
    ClassGroupPtr base;
    Integer p;
    std::vector<PrimeIdealFactor> s_primes;
    /* base structure coordinates -> quotient coordinates via to_group */
    Presentation quotient;
    FiniteAbelianGroup const & structure() const { return quotient.group; }
    std::vector<Integer> map(std::vector<Integer> const & base_coords) const { return quotient.coordinates(base_coords); }
};

SClassGroup s_quotient(ClassGroupPtr const & cl, Integer const & p);

/* column j: class of sigma applied to the j-th invariant generator */
IntMatrix galois_action_on_classes(ClassGroup const & cl, FieldAutomorphism const & sigma);

/* primes of O_K with norm at most `bound` */
std::vector<PrimeIdealFactor> primes_up_to_norm(FieldPtr const & field, Integer const & bound);

/* image of a prime under an automorphism, as a prime */
PrimeIdealFactor apply(FieldAutomorphism const & sigma, PrimeIdealFactor const & p);

} // namespace kloc

#endif
