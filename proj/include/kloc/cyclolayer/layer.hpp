#ifndef KLOC_CYCLOLAYER_LAYER_HPP
#define KLOC_CYCLOLAYER_LAYER_HPP

#include <cstdint>
#include <vector>

#include "kloc/numfield/ideal.hpp"

namespace kloc {

/* chi(G_F) mod p^n as a sorted list of residues */
struct CharacterImage {
    std::uint64_t p = 0;
    unsigned n = 0;
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> elements;

    bool contains(std::uint64_t x) const;
    std::size_t size() const { return elements.size(); }
};

CharacterImage char_image(FieldPtr const & field, std::uint64_t p, unsigned n);

struct LayerAutomorphism {
    FieldAutomorphism sigma;
    /* representative h in chi(G_F) and kappa = h^i mod p^n */
    std::uint64_t h = 1;
    std::uint64_t kappa = 1;
};

struct LayerOptions {
    /* false: the order only needs to be maximal at p */
    bool maximal = true;
};

struct Layer {
    FieldPtr base;
    std::uint64_t p = 0;
    unsigned n = 0;
    unsigned long i = 0;
    FieldPtr field;
    /* identity first */
    std::vector<LayerAutomorphism> gamma;
    CharacterImage image;
    std::vector<std::uint64_t> kernel;
    /* image of the generator of the base field, in the layer's integral basis */
    Elem theta_image;
    /* row a: image of the a-th integral basis element of the base */
    IntMatrix base_embedding;

    std::size_t degree() const { return gamma.size(); }
    /* base field element -> layer element */
    Elem embed(Elem const & x) const;
    /* a O_layer for an integral ideal a of the base */
    Ideal extend(Ideal const & a) const;
};

/* F_{i,n}: the fixed field of the kernel of chi^i inside F(mu_{p^n}) */
Layer build_layer(FieldPtr const & field, std::uint64_t p, unsigned n, unsigned long i, LayerOptions const & opts = {});

struct BasePrimeSplitting {
    PrimeIdealFactor below;
    std::vector<PrimeIdealFactor> above;
    /* relative ramification and residue degree */
    unsigned e = 1;
    unsigned f = 1;
    bool totally_split(std::size_t layer_degree) const { return above.size() == layer_degree; }
};

struct LayerSPrimes {
    std::vector<PrimeIdealFactor> primes;
    std::vector<BasePrimeSplitting> over_base;
};

LayerSPrimes layer_s_primes(Layer const & layer);

/* order of q^i mod p^n */
std::uint64_t residue_extension_degree(Integer const & q, std::uint64_t p, unsigned n, unsigned long i);

/* -1 is not in the image of the 2-adic cyclotomic character */
bool is_nonexceptional(FieldPtr const & field);

/* q^i - 1 */
Integer local_k_order(Integer const & q, unsigned long i);

} // namespace kloc

#endif
