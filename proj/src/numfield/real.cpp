#include "kloc/numfield/real.hpp"

#include <algorithm>
#include <memory>

#include "kloc/error.hpp"

namespace kloc {

Real::Real(mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(long x, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
}

Real::Real(Integer const & x, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
}

Real::Real(Rational const & x, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
}

Real::Real(Real const & o)
{
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real && o) noexcept
{
    mpfr_init2(v_, o.prec());
    mpfr_swap(v_, o.v_);
}

Real & Real::operator=(Real const & o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real & Real::operator=(Real && o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

namespace {

void widen(Real & a, Real const & b)
{
    if (b.prec() > a.prec()) mpfr_prec_round(a.get(), b.prec(), MPFR_RNDN);
}

} // namespace

Real & Real::operator+=(Real const & o)
{
    widen(*this, o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real & Real::operator-=(Real const & o)
{
    widen(*this, o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real & Real::operator*=(Real const & o)
{
    widen(*this, o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real & Real::operator/=(Real const & o)
{
    widen(*this, o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const
{
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Integer Real::round() const
{
    Integer z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

long Real::exponent() const
{
    if (mpfr_zero_p(v_)) return 0;
    return mpfr_get_exp(v_);
}

std::string Real::to_string(int digits) const
{
    std::unique_ptr<char[]> buf(new char[digits + 64]);
    mpfr_snprintf(buf.get(), digits + 64, "%.*Rg", digits, v_);
    return buf.get();
}

Real operator+(Real a, Real const & b) { return a += b; }
Real operator-(Real a, Real const & b) { return a -= b; }
Real operator*(Real a, Real const & b) { return a *= b; }
Real operator/(Real a, Real const & b) { return a /= b; }
bool operator<(Real const & a, Real const & b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(Real const & a, Real const & b) { return mpfr_greater_p(a.get(), b.get()) != 0; }

Real abs(Real const & a)
{
    Real r(a);
    mpfr_abs(r.get(), r.get(), MPFR_RNDN);
    return r;
}

Real sqrt(Real const & a)
{
    Real r(a);
    mpfr_sqrt(r.get(), r.get(), MPFR_RNDN);
    return r;
}

Real pi(mpfr_prec_t prec)
{
    Real r(prec);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

Real ldexp(Real const & a, long e)
{
    Real r(a);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

Real Complex::norm() const { return re * re + im * im; }
Real Complex::abs() const { return sqrt(norm()); }

Complex & Complex::operator+=(Complex const & o)
{
    re += o.re;
    im += o.im;
    return *this;
}

Complex & Complex::operator-=(Complex const & o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex & Complex::operator*=(Complex const & o)
{
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Complex & Complex::operator/=(Complex const & o)
{
    Real d = o.norm();
    Real r = (re * o.re + im * o.im) / d;
    Real i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Complex operator+(Complex a, Complex const & b) { return a += b; }
Complex operator-(Complex a, Complex const & b) { return a -= b; }
Complex operator*(Complex a, Complex const & b) { return a *= b; }
Complex operator/(Complex a, Complex const & b) { return a /= b; }

Complex evaluate(QPoly const & f, Complex const & z)
{
    mpfr_prec_t prec = z.prec();
    Complex acc(prec);
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        acc *= z;
        acc.re += Real(f[k], prec);
    }
    return acc;
}

std::vector<Complex> complex_roots(ZPoly const & f, mpfr_prec_t prec)
{
    int n = f.degree();
    if (n < 1) throw Error(ErrorKind::DegreeZero, "roots of a constant");
    mpfr_prec_t wp = prec + 64;
    std::vector<Real> a;
    for (auto const & c : f.coeffs()) a.emplace_back(c, wp);
    ZPoly df = f.derivative();
    std::vector<Real> da;
    for (auto const & c : df.coeffs()) da.emplace_back(c, wp);

    auto horner = [&](std::vector<Real> const & coef, Complex const & z) {
        Complex acc(wp);
        for (std::size_t k = coef.size(); k-- > 0;) {
            acc *= z;
            acc.re += coef[k];
        }
        return acc;
    };

    /* Cauchy radius */
    Real radius(1, wp);
    Real lead = abs(a.back());
    for (int k = 0; k < n; ++k) {
        Real t = abs(a[k]) / lead;
        if (t > radius) radius = t;
    }
    radius += Real(1, wp);
    radius = radius / Real(2, wp);

    std::vector<Complex> z;
    Real twopi = pi(wp) * Real(2, wp);
    for (int k = 0; k < n; ++k) {
        Real ang = twopi * Real(k, wp) / Real(n, wp) + Real(Rational(2, 5), wp);
        Real c(wp), s(wp);
        mpfr_sin_cos(s.get(), c.get(), ang.get(), MPFR_RNDN);
        z.emplace_back(radius * c, radius * s);
    }

    Real tol = ldexp(Real(1, wp), -static_cast<long>(prec) - 8);
    bool done = false;
    for (int iter = 0; iter < 4000 && !done; ++iter) {
        done = true;
        for (int k = 0; k < n; ++k) {
            Complex pz = horner(a, z[k]);
            if (pz.re.is_zero() && pz.im.is_zero()) continue;
            Complex ratio = pz / horner(da, z[k]);
            Complex sum(wp);
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                Complex one(Real(1, wp), Real(wp));
                sum += one / (z[k] - z[j]);
            }
            Complex one(Real(1, wp), Real(wp));
            Complex w = ratio / (one - ratio * sum);
            z[k] -= w;
            Real scale = z[k].abs();
            if (scale < Real(1, wp)) scale = Real(1, wp);
            if (w.abs() > tol * scale) done = false;
        }
    }
    if (!done) throw Error(ErrorKind::PrecisionExhausted, "root iteration did not converge");

    /* round to the requested precision */
    std::vector<Complex> out;
    for (auto & r : z) {
        Real re(prec), im(prec);
        mpfr_set(re.get(), r.re.get(), MPFR_RNDN);
        mpfr_set(im.get(), r.im.get(), MPFR_RNDN);
        out.emplace_back(std::move(re), std::move(im));
    }
    return out;
}

} // namespace kloc
