#include "kloc/numfield/polynomial.hpp"

#include <cctype>
#include <sstream>

#include "kloc/error.hpp"

namespace kloc {

template <typename R>
std::string Poly<R>::to_string() const
{
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        R const & a = c_[k];
        if (a == 0) continue;
        bool neg = a < 0;
        R mag = neg ? R(-a) : a;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? "-" : "+");
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "x";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

template class Poly<Integer>;
template class Poly<Rational>;

QPoly to_q(ZPoly const & f)
{
    std::vector<Rational> c;
    for (auto const & a : f.coeffs()) c.emplace_back(a);
    return QPoly(std::move(c));
}

Integer content(ZPoly const & f)
{
    Integer g = 0;
    for (auto const & a : f.coeffs()) g = gcd(g, a);
    return g;
}

ZPoly primitive_part(ZPoly const & f)
{
    if (f.is_zero()) return f;
    Integer g = content(f);
    if (f.lead() < 0) g = -g;
    std::vector<Integer> c;
    for (auto const & a : f.coeffs()) c.push_back(a / g);
    return ZPoly(std::move(c));
}

ZPoly primitive_part(QPoly const & f)
{
    Integer den = 1;
    for (auto const & a : f.coeffs()) den = lcm(den, a.get_den());
    std::vector<Integer> c;
    for (auto const & a : f.coeffs()) c.push_back(Integer(a.get_num() * (den / a.get_den())));
    return primitive_part(ZPoly(std::move(c)));
}

void divmod(QPoly const & a, QPoly const & b, QPoly & q, QPoly & r)
{
    if (b.is_zero()) throw Error(ErrorKind::InvalidInput, "polynomial division by zero");
    std::vector<Rational> rc = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    std::vector<Rational> qc(da >= db ? da - db + 1 : 0);
    Rational inv = 1 / b.lead();
    for (int k = da; k >= db; --k) {
        Rational t = rc[k] * inv;
        if (t == 0) continue;
        qc[k - db] = t;
        for (int j = 0; j <= db; ++j) rc[k - db + j] -= t * b[j];
    }
    q = QPoly(std::move(qc));
    rc.resize(db > 0 ? db : 0);
    r = QPoly(std::move(rc));
}

QPoly operator%(QPoly const & a, QPoly const & b)
{
    QPoly q, r;
    divmod(a, b, q, r);
    return r;
}

QPoly operator/(QPoly const & a, QPoly const & b)
{
    QPoly q, r;
    divmod(a, b, q, r);
    return q;
}

QPoly monic(QPoly const & a)
{
    if (a.is_zero()) return a;
    return Rational(1 / a.lead()) * a;
}

QPoly gcd(QPoly a, QPoly b)
{
    while (!b.is_zero()) {
        QPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

bool divides(ZPoly const & b, ZPoly const & a, ZPoly & q)
{
    if (b.is_zero()) return false;
    if (a.is_zero()) {
        q = ZPoly();
        return true;
    }
    if (a.degree() < b.degree()) return false;
    /* exact division with integer quotients only */
    std::vector<Integer> rc = a.coeffs();
    int db = b.degree();
    std::vector<Integer> qc(a.degree() - db + 1);
    for (int k = a.degree(); k >= db; --k) {
        if (rc[k] == 0) continue;
        if (!mpz_divisible_p(rc[k].get_mpz_t(), b.lead().get_mpz_t())) return false;
        Integer t = rc[k] / b.lead();
        qc[k - db] = t;
        for (int j = 0; j <= db; ++j) rc[k - db + j] -= t * b[j];
    }
    for (int k = 0; k < db; ++k)
        if (rc[k] != 0) return false;
    q = ZPoly(std::move(qc));
    return true;
}

Rational resultant(QPoly const & a0, QPoly const & b0)
{
    if (a0.is_zero() || b0.is_zero()) return 0;
    QPoly a = a0, b = b0;
    Rational acc = 1;
    for (;;) {
        int da = a.degree(), db = b.degree();
        if (db == 0) {
            Rational p = 1;
            for (int k = 0; k < da; ++k) p *= b.lead();
            return acc * p;
        }
        if (da == 0) {
            Rational p = 1;
            for (int k = 0; k < db; ++k) p *= a.lead();
            return acc * p;
        }
        QPoly r = a % b;
        if (r.is_zero()) return 0;
        /* res(a, b) = (-1)^{da db} lc(b)^{da - dr} res(b, r) */
        if ((da % 2) && (db % 2)) acc = -acc;
        for (int k = 0; k < da - r.degree(); ++k) acc *= b.lead();
        a = std::move(b);
        b = std::move(r);
    }
}

Integer discriminant(ZPoly const & f)
{
    int n = f.degree();
    if (n < 1) throw Error(ErrorKind::DegreeZero, "discriminant of a constant");
    Rational r = resultant(to_q(f), to_q(f.derivative())) / Rational(f.lead());
    if ((n * (n - 1) / 2) % 2) r = -r;
    if (r.get_den() != 1) throw Error(ErrorKind::InvalidInput, "non-integral discriminant");
    return r.get_num();
}

namespace {

int sign_at_infinity(QPoly const & p, bool positive)
{
    int s = sgn(p.lead());
    if (!positive && p.degree() % 2) s = -s;
    return s;
}

} // namespace

unsigned count_real_roots(ZPoly const & f0)
{
    if (f0.is_zero()) throw Error(ErrorKind::InvalidInput, "zero polynomial");
    QPoly f = to_q(f0);
    QPoly g = gcd(f, f.derivative());
    if (g.degree() > 0) f = f / g;
    if (f.degree() <= 0) return 0;
    std::vector<QPoly> seq{f, f.derivative()};
    while (seq.back().degree() > 0) {
        QPoly r = -(seq[seq.size() - 2] % seq.back());
        if (r.is_zero()) break;
        /* positive rescaling keeps signs and tames coefficient growth */
        QPoly pr = to_q(primitive_part(r));
        seq.push_back(r.lead() < 0 ? -pr : pr);
    }
    auto changes = [&](bool positive) {
        int last = 0;
        unsigned c = 0;
        for (auto const & p : seq) {
            int s = sign_at_infinity(p, positive);
            if (s == 0) continue;
            if (last != 0 && s != last) ++c;
            last = s;
        }
        return c;
    };
    return changes(false) - changes(true);
}

QPoly compose(QPoly const & g, QPoly const & h)
{
    QPoly acc;
    for (std::size_t k = g.coeffs().size(); k-- > 0;) acc = acc * h + QPoly::constant(g[k]);
    return acc;
}

ZPoly parse_polynomial(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty polynomial");
    std::size_t pos = 0;
    auto fail = [&](std::string const & why) { throw Error(ErrorKind::ParseError, why + " at position " + std::to_string(pos)); };
    auto digits = [&]() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    };
    std::vector<Integer> coeffs;
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        std::string num = digits();
        bool has_coeff = !num.empty();
        bool star = false;
        if (pos < s.size() && s[pos] == '*') {
            if (!has_coeff) fail("'*' without coefficient");
            star = true;
            ++pos;
        }
        unsigned long exp = 0;
        bool has_x = false;
        if (pos < s.size() && s[pos] == 'x') {
            has_x = true;
            ++pos;
            exp = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::string e = digits();
                if (e.empty()) fail("missing exponent");
                if (e.size() > 4) fail("exponent too large");
                exp = std::stoul(e);
            }
        }
        if (star && !has_x) fail("expected 'x' after '*'");
        if (!has_coeff && !has_x) fail("empty term");
        Integer c = has_coeff ? Integer(num) : Integer(1);
        if (coeffs.size() <= exp) coeffs.resize(exp + 1);
        coeffs[exp] += sign * c;
    }
    return ZPoly(std::move(coeffs));
}

} // namespace kloc
