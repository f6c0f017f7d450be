#ifndef KLOC_NUMFIELD_POLY_FP_HPP
#define KLOC_NUMFIELD_POLY_FP_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "kloc/numfield/polynomial.hpp"

namespace kloc {

/* Polynomial over F_p, p a word-size prime; coefficients low to high. */
class FpPoly {
    std::uint64_t p_ = 2;
    std::vector<std::uint64_t> c_;

    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

  public:
    FpPoly() = default;
    explicit FpPoly(std::uint64_t p) : p_(p) {}
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> c);
    FpPoly(std::uint64_t p, ZPoly const & f);
    static FpPoly x(std::uint64_t p) { return FpPoly(p, std::vector<std::uint64_t>{0, 1}); }
    static FpPoly constant(std::uint64_t p, std::uint64_t a) { return FpPoly(p, std::vector<std::uint64_t>{a % p}); }

    std::uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
    std::uint64_t operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
    std::vector<std::uint64_t> const & coeffs() const { return c_; }
    bool operator==(FpPoly const & o) const { return p_ == o.p_ && c_ == o.c_; }

    FpPoly operator+(FpPoly const & o) const;
    FpPoly operator-(FpPoly const & o) const;
    FpPoly operator*(FpPoly const & o) const;
    FpPoly scaled(std::uint64_t s) const;
    FpPoly monic() const;
    FpPoly derivative() const;
    std::uint64_t eval(std::uint64_t x) const;

    /* coefficients in [0, p) */
    ZPoly lift() const;
};

void divmod(FpPoly const & a, FpPoly const & b, FpPoly & q, FpPoly & r);
FpPoly operator%(FpPoly const & a, FpPoly const & b);
FpPoly operator/(FpPoly const & a, FpPoly const & b);
FpPoly gcd(FpPoly a, FpPoly b);
/* returns monic g = gcd(a, b) and s, t with s a + t b = g */
FpPoly xgcd(FpPoly const & a, FpPoly const & b, FpPoly & s, FpPoly & t);
FpPoly powmod(FpPoly const & base, Integer const & e, FpPoly const & m);

/* Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
 * The leading coefficient is dropped. */
std::vector<std::pair<FpPoly, unsigned>> factor(FpPoly const & f, std::uint64_t seed = 1);

/* degrees of the irreducible factors of a squarefree f, ascending */
std::vector<int> factor_degrees(FpPoly const & f);

bool is_squarefree(FpPoly const & f);

} // namespace kloc

#endif
