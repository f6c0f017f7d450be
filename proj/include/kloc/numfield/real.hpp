#ifndef KLOC_NUMFIELD_REAL_HPP
#define KLOC_NUMFIELD_REAL_HPP

#include <mpfr.h>

#include <string>
#include <vector>

#include "kloc/integer.hpp"
#include "kloc/numfield/polynomial.hpp"

namespace kloc {

/* RAII MPFR value with per-object precision. */
class Real {
    mpfr_t v_;

  public:
    explicit Real(mpfr_prec_t prec = 128);
    Real(long x, mpfr_prec_t prec);
    Real(Integer const & x, mpfr_prec_t prec);
    Real(Rational const & x, mpfr_prec_t prec);
    Real(Real const & o);
    Real(Real && o) noexcept;
    Real & operator=(Real const & o);
    Real & operator=(Real && o) noexcept;
    ~Real();

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    Real & operator+=(Real const & o);
    Real & operator-=(Real const & o);
    Real & operator*=(Real const & o);
    Real & operator/=(Real const & o);
    Real operator-() const;

    long double to_ld() const { return mpfr_get_ld(v_, MPFR_RNDN); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    Integer round() const;
    /* binary exponent, so |x| < 2^exponent (0 for zero) */
    long exponent() const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    std::string to_string(int digits = 20) const;
};

Real operator+(Real a, Real const & b);
Real operator-(Real a, Real const & b);
Real operator*(Real a, Real const & b);
Real operator/(Real a, Real const & b);
bool operator<(Real const & a, Real const & b);
bool operator>(Real const & a, Real const & b);
Real abs(Real const & a);
Real sqrt(Real const & a);
Real pi(mpfr_prec_t prec);
Real ldexp(Real const & a, long e);

struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    /* embedding of an integer or rational constant */
    Complex(Integer const & x) : re(x, 128), im(128) {}
    Complex(Rational const & x) : re(x, 128), im(128) {}

    mpfr_prec_t prec() const { return re.prec(); }
    Complex conj() const { return {re, -im}; }
    Real norm() const; /* |z|^2 */
    Real abs() const;

    Complex & operator+=(Complex const & o);
    Complex & operator-=(Complex const & o);
    Complex & operator*=(Complex const & o);
    Complex & operator/=(Complex const & o);
};

Complex operator+(Complex a, Complex const & b);
Complex operator-(Complex a, Complex const & b);
Complex operator*(Complex a, Complex const & b);
Complex operator/(Complex a, Complex const & b);

/* All complex roots of a squarefree integer polynomial by Aberth iteration,
 * each refined to roughly `prec` bits. Throws PrecisionExhausted when the
 * iteration does not settle. */
std::vector<Complex> complex_roots(ZPoly const & f, mpfr_prec_t prec);

/* evaluate a rational polynomial at z */
Complex evaluate(QPoly const & f, Complex const & z);

} // namespace kloc

#endif
