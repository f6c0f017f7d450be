#ifndef KLOC_NUMFIELD_POLYNOMIAL_HPP
#define KLOC_NUMFIELD_POLYNOMIAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "kloc/integer.hpp"

namespace kloc {

/* Dense univariate polynomial, coefficients low to high, no trailing zeros. */
template <typename R>
class Poly {
    std::vector<R> c_;

    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

  public:
    Poly() = default;
    Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }
    Poly(std::initializer_list<long> l)
    {
        for (long v : l) c_.push_back(R(v));
        trim();
    }
    static Poly constant(R const & a) { return Poly(std::vector<R>{a}); }
    static Poly monomial(R const & a, std::size_t k)
    {
        std::vector<R> c(k + 1);
        c[k] = a;
        return Poly(std::move(c));
    }
    static Poly x() { return monomial(R(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    R lead() const { return c_.empty() ? R(0) : c_.back(); }
    R operator[](std::size_t k) const { return k < c_.size() ? c_[k] : R(0); }
    std::vector<R> const & coeffs() const { return c_; }
    void set(std::size_t k, R const & v)
    {
        if (k >= c_.size()) c_.resize(k + 1);
        c_[k] = v;
        trim();
    }

    bool operator==(Poly const & o) const { return c_ == o.c_; }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto & v : r.c_) v = -v;
        return r;
    }
    Poly & operator+=(Poly const & o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly & operator-=(Poly const & o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, Poly const & b) { return a += b; }
    friend Poly operator-(Poly a, Poly const & b) { return a -= b; }
    friend Poly operator*(Poly const & a, Poly const & b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(R const & s, Poly a)
    {
        for (auto & v : a.c_) v *= s;
        a.trim();
        return a;
    }

    template <typename T>
    T eval(T const & x) const
    {
        T acc = T(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + T(c_[k]);
        return acc;
    }

    Poly derivative() const
    {
        std::vector<R> r;
        for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(R(static_cast<long>(k)) * c_[k]);
        return Poly(std::move(r));
    }

    std::string to_string() const;
};

using ZPoly = Poly<Integer>;
using QPoly = Poly<Rational>;

QPoly to_q(ZPoly const & f);
/* integral primitive multiple with positive leading coefficient */
ZPoly primitive_part(QPoly const & f);
ZPoly primitive_part(ZPoly const & f);
Integer content(ZPoly const & f);

/* Euclidean division over Q */
void divmod(QPoly const & a, QPoly const & b, QPoly & q, QPoly & r);
QPoly operator%(QPoly const & a, QPoly const & b);
QPoly operator/(QPoly const & a, QPoly const & b);
/* monic gcd */
QPoly gcd(QPoly a, QPoly b);
QPoly monic(QPoly const & a);

/* exact division test over Z; on success q = a / b */
bool divides(ZPoly const & b, ZPoly const & a, ZPoly & q);

Rational resultant(QPoly const & a, QPoly const & b);
Integer discriminant(ZPoly const & f);

/* number of distinct real roots of a nonzero polynomial */
unsigned count_real_roots(ZPoly const & f);

/* g(h(x)) */
QPoly compose(QPoly const & g, QPoly const & h);

/* Parse `poly := term (('+'|'-') term)*`, `term := [coeff]['*']['x'['^' exp]]`.
 * Whitespace is ignored; a leading sign is accepted. Throws ParseError. */
ZPoly parse_polynomial(std::string_view text);

} // namespace kloc

#endif
