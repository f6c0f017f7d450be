#include "kloc/numfield/poly_fp.hpp"

#include <algorithm>

#include "kloc/error.hpp"

namespace kloc {

namespace {

inline std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    std::uint64_t s = a + b;
    return (s >= p || s < a) ? s - p : s;
}

inline std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + (p - b); }

} // namespace

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> c) : p_(p), c_(std::move(c))
{
    for (auto & v : c_) v %= p_;
    trim();
}

FpPoly::FpPoly(std::uint64_t p, ZPoly const & f) : p_(p)
{
    Integer m(static_cast<unsigned long>(p));
    for (auto const & a : f.coeffs()) c_.push_back(floor_mod(a, m).get_ui());
    trim();
}

FpPoly FpPoly::operator+(FpPoly const & o) const
{
    std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = addm((*this)[k], o[k], p_);
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(FpPoly const & o) const
{
    std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = subm((*this)[k], o[k], p_);
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(FpPoly const & o) const
{
    if (is_zero() || o.is_zero()) return FpPoly(p_);
    std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = addm(r[i + j], mulmod(c_[i], o.c_[j], p_), p_);
    }
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::scaled(std::uint64_t s) const
{
    std::vector<std::uint64_t> r = c_;
    for (auto & v : r) v = mulmod(v, s % p_, p_);
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::monic() const
{
    if (is_zero()) return *this;
    return scaled(invmod(lead(), p_));
}

FpPoly FpPoly::derivative() const
{
    std::vector<std::uint64_t> r;
    for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(mulmod(c_[k], k % p_, p_));
    return FpPoly(p_, std::move(r));
}

std::uint64_t FpPoly::eval(std::uint64_t x) const
{
    std::uint64_t acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = addm(mulmod(acc, x, p_), c_[k], p_);
    return acc;
}

ZPoly FpPoly::lift() const
{
    std::vector<Integer> r;
    for (auto v : c_) r.emplace_back(static_cast<unsigned long>(v));
    return ZPoly(std::move(r));
}

void divmod(FpPoly const & a, FpPoly const & b, FpPoly & q, FpPoly & r)
{
    if (b.is_zero()) throw Error(ErrorKind::InvalidInput, "division by zero polynomial");
    std::uint64_t p = a.modulus();
    std::vector<std::uint64_t> rc = a.coeffs();
    int db = b.degree(), da = a.degree();
    std::vector<std::uint64_t> qc(da >= db ? da - db + 1 : 0, 0);
    std::uint64_t inv = invmod(b.lead(), p);
    for (int k = da; k >= db; --k) {
        if (!rc[k]) continue;
        std::uint64_t t = mulmod(rc[k], inv, p);
        qc[k - db] = t;
        for (int j = 0; j <= db; ++j) rc[k - db + j] = subm(rc[k - db + j], mulmod(t, b[j], p), p);
    }
    rc.resize(db > 0 ? db : 0);
    q = FpPoly(p, std::move(qc));
    r = FpPoly(p, std::move(rc));
}

FpPoly operator%(FpPoly const & a, FpPoly const & b)
{
    FpPoly q, r;
    divmod(a, b, q, r);
    return r;
}

FpPoly operator/(FpPoly const & a, FpPoly const & b)
{
    FpPoly q, r;
    divmod(a, b, q, r);
    return q;
}

FpPoly gcd(FpPoly a, FpPoly b)
{
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly xgcd(FpPoly const & a, FpPoly const & b, FpPoly & s, FpPoly & t)
{
    std::uint64_t p = a.modulus();
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = FpPoly::constant(p, 1), s1(p);
    FpPoly t0(p), t1 = FpPoly::constant(p, 1);
    while (!r1.is_zero()) {
        FpPoly q, r;
        divmod(r0, r1, q, r);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    std::uint64_t inv = r0.is_zero() ? 1 : invmod(r0.lead(), p);
    s = s0.scaled(inv);
    t = t0.scaled(inv);
    return r0.scaled(inv);
}

FpPoly powmod(FpPoly const & base, Integer const & e, FpPoly const & m)
{
    std::uint64_t p = m.modulus();
    FpPoly result = FpPoly::constant(p, 1) % m;
    FpPoly b = base % m;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t k = bits; k-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), k)) result = (result * b) % m;
    }
    return result;
}

bool is_squarefree(FpPoly const & f)
{
    if (f.degree() <= 0) return true;
    FpPoly d = f.derivative();
    if (d.is_zero()) return false;
    return gcd(f, d).degree() == 0;
}

namespace {

/* p-th root of a polynomial whose derivative vanishes */
FpPoly pth_root(FpPoly const & f)
{
    std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> r;
    for (std::size_t k = 0; k < f.coeffs().size(); k += p) r.push_back(f.coeffs()[k]); /* a^p = a on F_p */
    return FpPoly(p, std::move(r));
}

void squarefree_parts(FpPoly f, unsigned mult, std::vector<std::pair<FpPoly, unsigned>> & out)
{
    if (f.degree() <= 0) return;
    FpPoly d = f.derivative();
    if (d.is_zero()) {
        squarefree_parts(pth_root(f), mult * static_cast<unsigned>(f.modulus()), out);
        return;
    }
    FpPoly g = gcd(f, d);
    FpPoly w = f / g;
    unsigned i = 1;
    while (w.degree() > 0) {
        FpPoly y = gcd(w, g);
        FpPoly z = w / y;
        if (z.degree() > 0) out.push_back({z.monic(), i * mult});
        ++i;
        w = y;
        g = g / y;
    }
    if (g.degree() > 0) squarefree_parts(pth_root(g), mult * static_cast<unsigned>(f.modulus()), out);
}

/* (product of all irreducible factors of degree d, d) for monic squarefree f */
std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f)
{
    std::uint64_t p = f.modulus();
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly x = FpPoly::x(p);
    FpPoly h = x % f;
    Integer pz(static_cast<unsigned long>(p));
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, pz, f);
        FpPoly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.push_back({g, d});
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.push_back({f.monic(), f.degree()});
    return out;
}

void equal_degree(FpPoly const & g, int d, std::mt19937_64 & rng, std::vector<FpPoly> & out)
{
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    std::uint64_t p = g.modulus();
    Integer e = ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    for (;;) {
        std::vector<std::uint64_t> a(g.degree());
        for (auto & v : a) v = rng() % p;
        FpPoly r(p, std::move(a));
        if (r.degree() <= 0) continue;
        FpPoly b;
        if (p == 2) {
            /* trace to F_2 */
            FpPoly t = r % g, acc = t;
            for (int k = 1; k < d; ++k) {
                t = (t * t) % g;
                acc = acc + t;
            }
            b = acc;
        } else {
            b = powmod(r, e, g) - FpPoly::constant(p, 1);
        }
        FpPoly h = gcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

bool poly_less(FpPoly const & a, FpPoly const & b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    auto const & x = a.coeffs();
    auto const & y = b.coeffs();
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
}

} // namespace

std::vector<std::pair<FpPoly, unsigned>> factor(FpPoly const & f, std::uint64_t seed)
{
    if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "factoring the zero polynomial");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<FpPoly, unsigned>> sqf;
    squarefree_parts(f.monic(), 1, sqf);
    std::vector<std::pair<FpPoly, unsigned>> out;
    for (auto const & [part, mult] : sqf) {
        for (auto const & [g, d] : distinct_degree(part)) {
            std::vector<FpPoly> irr;
            equal_degree(g, d, rng, irr);
            for (auto & h : irr) out.push_back({h, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](auto const & a, auto const & b) {
        if (poly_less(a.first, b.first)) return true;
        if (poly_less(b.first, a.first)) return false;
        return a.second < b.second;
    });
    return out;
}

std::vector<int> factor_degrees(FpPoly const & f)
{
    std::vector<int> deg;
    for (auto const & [g, d] : distinct_degree(f.monic()))
        for (int k = 0; k < g.degree() / d; ++k) deg.push_back(d);
    std::sort(deg.begin(), deg.end());
    return deg;
}

} // namespace kloc
