#include "kloc/numfield/number_field.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "kloc/error.hpp"
#include "kloc/intlinalg/modular.hpp"
#include "kloc/intlinalg/normal_form.hpp"
#include "kloc/numfield/factor_z.hpp"
#include "kloc/numfield/poly_fp.hpp"

namespace kloc {

namespace {

using Vec = std::vector<Integer>;

/* theta^k reduced mod f, k < 2n - 1 */
std::vector<Vec> reduction_table(ZPoly const & f)
{
    std::size_t n = f.degree();
    std::vector<Vec> r;
    for (std::size_t k = 0; k < n; ++k) {
        Vec e(n);
        e[k] = 1;
        r.push_back(std::move(e));
    }
    for (std::size_t k = n; k + 1 < 2 * n; ++k) {
        Vec const & prev = r.back();
        Vec next(n);
        Integer top = prev[n - 1];
        for (std::size_t j = n; j-- > 1;) next[j] = prev[j - 1];
        for (std::size_t j = 0; j < n; ++j) next[j] -= top * f[j];
        r.push_back(std::move(next));
    }
    return r;
}

Vec mul_power(Vec const & a, Vec const & b, std::vector<Vec> const & red)
{
    std::size_t n = a.size();
    Vec conv(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) conv[i + j] += a[i] * b[j];
    }
    Vec out(a.begin(), a.end());
    for (std::size_t j = 0; j < n; ++j) out[j] = conv[j];
    for (std::size_t k = n; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) out[j] += conv[k] * red[k][j];
    }
    return out;
}

/* c with c * B = v / scale, B lower triangular; nothing if not integral */
std::optional<Vec> solve_lower(IntMatrix const & b, Vec const & v, Integer const & scale)
{
    std::size_t n = b.rows();
    Vec c(n);
    for (std::size_t j = n; j-- > 0;) {
        Integer acc = 0;
        for (std::size_t i = j + 1; i < n; ++i) acc += c[i] * b(i, j);
        Integer num = v[j] - scale * acc;
        Integer d = scale * b(j, j);
        if (!mpz_divisible_p(num.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
        c[j] = num / d;
    }
    return c;
}

IntMatrix lower_echelon(IntMatrix const & rows, Integer const * modulus)
{
    return modulus ? hnf_lower_modulo(rows, *modulus) : hnf_lower(rows);
}

NumberField::Order reduce_fraction(IntMatrix b, Integer den)
{
    Integer g = den;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) g = gcd(g, b(i, j));
    if (g > 1) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) /= g;
        den /= g;
    }
    return {std::move(b), std::move(den)};
}

std::optional<std::vector<Rational>> solve_rational(IntMatrix const & a, std::vector<Rational> rhs)
{
    std::size_t n = a.rows();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
        m[i][n] = rhs[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational t = m[r][c] / m[c][c];
            for (std::size_t k = c; k <= n; ++k) m[r][k] -= t * m[c][k];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

bool fits_word(Integer const & q) { return q > 0 && mpz_sizeinbase(q.get_mpz_t(), 2) <= 62; }

Integer strip(Integer x, Integer const & q)
{
    while (x != 0 && mpz_divisible_p(x.get_mpz_t(), q.get_mpz_t())) x /= q;
    return x;
}

} // namespace

NumberField::Order normalize_order(IntMatrix const & numerators, Integer const & den)
{
    return reduce_fraction(lower_echelon(numerators, nullptr), den);
}

Elem FieldAutomorphism::apply(Elem const & x) const { return std::span<Integer const>(x) * matrix; }

bool FieldAutomorphism::is_identity() const { return matrix == IntMatrix::identity(matrix.rows()); }

void NumberField::set_order(IntMatrix const & b, Integer const & d)
{
    n_ = f_.degree();
    basis_ = b;
    den_ = d;
    auto red = reduction_table(f_);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n_; ++i) rows.push_back(b.row_vector(i));
    table_.assign(n_ * n_ * n_, Integer(0));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j) {
            auto c = solve_lower(b, mul_power(rows[i], rows[j], red), d);
            if (!c) throw Error(ErrorKind::InvalidInput, "basis does not span a ring");
            for (std::size_t k = 0; k < n_; ++k) {
                table_[(i * n_ + j) * n_ + k] = (*c)[k];
                table_[(j * n_ + i) * n_ + k] = (*c)[k];
            }
        }
    power_to_basis_ = IntMatrix(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        Vec e(n_);
        e[j] = d;
        auto c = solve_lower(b, e, 1);
        if (!c) throw Error(ErrorKind::InvalidInput, "order does not contain the generator");
        for (std::size_t k = 0; k < n_; ++k) power_to_basis_(j, k) = (*c)[k];
    }
    Vec tr(n_);
    for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t i = 0; i < n_; ++i) tr[k] += mult_table_entry(k, i, i);
    IntMatrix g(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            Integer s = 0;
            for (std::size_t k = 0; k < n_; ++k) s += mult_table_entry(i, j, k) * tr[k];
            g(i, j) = s;
        }
    disc_ = g.determinant();
    index_ = 1;
    for (std::size_t i = 0; i < n_; ++i) index_ *= d / b(i, i);
}

bool NumberField::is_equation_order() const { return den_ == 1 && basis_ == IntMatrix::identity(n_); }

bool NumberField::dedekind_maximal(std::uint64_t q) const
{
    FpPoly fb(q, f_);
    FpPoly g = FpPoly::constant(q, 1), h = FpPoly::constant(q, 1);
    for (auto const & [gi, e] : factor(fb)) {
        g = g * gi;
        for (unsigned k = 1; k < e; ++k) h = h * gi;
    }
    ZPoly diff = g.lift() * h.lift() - f_;
    std::vector<Integer> c;
    Integer qz(static_cast<unsigned long>(q));
    for (auto const & a : diff.coeffs()) c.push_back(a / qz);
    FpPoly big_f(q, ZPoly(std::move(c)));
    return gcd(gcd(big_f, g), h).degree() == 0;
}

ResidueRing::ResidueRing(NumberField const & k, std::uint64_t q) : q_(q), n_(k.degree())
{
    Integer qz(static_cast<unsigned long>(q));
    table_.resize(n_ * n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t l = 0; l < n_; ++l) table_[(i * n_ + j) * n_ + l] = floor_mod(k.mult_table_entry(i, j, l), qz).get_ui();
}

ResidueRing::Vec ResidueRing::reduce(Elem const & a) const
{
    Integer qz(static_cast<unsigned long>(q_));
    Vec r(n_);
    for (std::size_t k = 0; k < n_; ++k) r[k] = floor_mod(a[k], qz).get_ui();
    return r;
}

ResidueRing::Vec ResidueRing::one() const
{
    Vec r(n_, 0);
    r[0] = 1 % q_;
    return r;
}

ResidueRing::Vec ResidueRing::mul(Vec const & a, Vec const & b) const
{
    Vec r(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (!b[j]) continue;
            std::uint64_t s = mulmod(a[i], b[j], q_);
            std::uint64_t const * t = &table_[(i * n_ + j) * n_];
            for (std::size_t k = 0; k < n_; ++k)
                if (t[k]) {
                    r[k] += mulmod(s, t[k], q_);
                    if (r[k] >= q_) r[k] -= q_;
                }
        }
    }
    return r;
}

ResidueRing::Vec ResidueRing::pow(Vec const & a, Integer const & e) const
{
    Vec r = one();
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t k = bits; k-- > 0;) {
        r = mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), k)) r = mul(r, a);
    }
    return r;
}

IntMatrix radical_of_prime(NumberField const & k, std::uint64_t q)
{
    std::size_t n = k.degree();
    ResidueRing rr(k, q);
    Integer qz(static_cast<unsigned long>(q));
    /* kernel of x -> x^(q^j) with q^j >= n */
    Integer e = qz;
    while (e < Integer(static_cast<unsigned long>(n))) e *= qz;
    FpMatrix phi(q, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        ResidueRing::Vec x(n, 0);
        x[i] = 1;
        x = rr.pow(x, e);
        for (std::size_t c = 0; c < n; ++c) phi(i, c) = x[c];
    }
    IntMatrix gens(0, n);
    for (auto const & v : phi.left_kernel()) {
        Vec row;
        for (auto x : v) row.emplace_back(static_cast<unsigned long>(x));
        gens.append_row(row);
    }
    for (std::size_t i = 0; i < n; ++i) {
        Vec row(n);
        row[i] = qz;
        gens.append_row(row);
    }
    return hnf_lower_modulo(gens, qz);
}

bool NumberField::round2_step(std::uint64_t q)
{
    std::size_t n = n_;
    Integer qz(static_cast<unsigned long>(q));
    IntMatrix rad = radical_of_prime(*this, q);

    /* multipliers of the radical */
    FpMatrix m(q, n, n * n);
    for (std::size_t k = 0; k < n; ++k) {
        IntMatrix mk = mult_matrix(rad.row_vector(k));
        for (std::size_t i = 0; i < n; ++i) {
            auto y = solve_lower(rad, mk.row_vector(i), 1);
            if (!y) throw Error(ErrorKind::InvalidInput, "radical is not an ideal");
            for (std::size_t l = 0; l < n; ++l) m(i, k * n + l) = floor_mod((*y)[l], qz).get_ui();
        }
    }
    auto ker = m.left_kernel();
    if (ker.empty()) return false;
    IntMatrix ugens(0, n);
    for (auto const & v : ker) {
        Vec row;
        for (auto x : v) row.emplace_back(static_cast<unsigned long>(x));
        ugens.append_row(row);
    }
    for (std::size_t i = 0; i < n; ++i) {
        Vec row(n);
        row[i] = qz;
        ugens.append_row(row);
    }
    IntMatrix u = hnf_modulo(ugens, qz);
    Order o = normalize_order(u * basis_, qz * den_);
    set_order(o.numerators, o.denominator);
    return true;
}

void NumberField::maximize_at(Integer const & q)
{
    if (valuation(disc_, q) < 2) return;
    if (!fits_word(q)) throw Error(ErrorKind::EffortExceeded, "prime " + q.get_str() + " too large for order enlargement");
    std::uint64_t qq = q.get_ui();
    if (is_equation_order() && dedekind_maximal(qq)) return;
    while (valuation(disc_, q) >= 2 && round2_step(qq)) {
    }
}

FieldPtr NumberField::create(ZPoly const & f)
{
    if (f.degree() < 1) throw Error(ErrorKind::DegreeZero, "polynomial has degree " + std::to_string(std::max(f.degree(), 0)));
    if (f.lead() != 1) throw Error(ErrorKind::NotMonic, "leading coefficient " + f.lead().get_str());
    if (!is_irreducible(f)) throw Error(ErrorKind::Reducible, f.to_string() + " is reducible over Q");
    std::shared_ptr<NumberField> k(new NumberField());
    k->f_ = f;
    k->set_order(IntMatrix::identity(f.degree()), 1);
    std::vector<Integer> primes;
    for (auto const & [q, e] : factor_integer(k->disc_)) {
        primes.push_back(q);
        if (e >= 2) k->maximize_at(q);
    }
    k->complete_ = true;
    k->maximal_at_ = primes;
    for (auto const & q : primes)
        if (mpz_divisible_p(k->disc_.get_mpz_t(), q.get_mpz_t())) k->ramified_.push_back(q);
    return k;
}

FieldPtr NumberField::create_with_order(ZPoly const & f, Order const & seed, std::vector<Integer> const & primes, bool complete)
{
    if (f.degree() < 1) throw Error(ErrorKind::DegreeZero, "polynomial of degree 0");
    if (f.lead() != 1) throw Error(ErrorKind::NotMonic, "leading coefficient " + f.lead().get_str());
    std::size_t n = f.degree();
    if (seed.numerators.cols() != n) throw Error(ErrorKind::InvalidInput, "seed order has the wrong width");
    std::shared_ptr<NumberField> k(new NumberField());
    k->f_ = f;

    /* ring generated by the seed and theta */
    IntMatrix gens = seed.numerators;
    for (std::size_t j = 0; j < n; ++j) {
        Vec e(n);
        e[j] = seed.denominator;
        gens.append_row(e);
    }
    Order o = normalize_order(gens, seed.denominator);
    auto red = reduction_table(f);
    for (int iter = 0;; ++iter) {
        if (iter == 30) throw Error(ErrorKind::InvalidInput, "seed does not generate an order");
        Integer d2 = o.denominator * o.denominator;
        IntMatrix rows(0, n);
        for (std::size_t i = 0; i < n; ++i) {
            Vec r = o.numerators.row_vector(i);
            for (auto & x : r) x *= o.denominator;
            rows.append_row(r);
        }
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) rows.append_row(mul_power(o.numerators.row_vector(i), o.numerators.row_vector(j), red));
        for (std::size_t i = 0; i < rows.rows(); ++i)
            for (std::size_t j = 0; j < n; ++j) rows(i, j) = floor_mod(rows(i, j), d2);
        Order next = reduce_fraction(lower_echelon(rows, &d2), d2);
        if (next.numerators == o.numerators && next.denominator == o.denominator) break;
        o = std::move(next);
    }
    k->set_order(o.numerators, o.denominator);

    std::vector<Integer> known = primes;
    for (auto const & q : primes) k->maximize_at(q);
    Integer rest = abs(k->disc_);
    for (auto const & q : primes) rest = strip(rest, q);
    bool done = rest == 1;
    if (!done) {
        try {
            auto fac = complete ? factor_integer(rest) : factor_integer(rest, 100000);
            for (auto const & [q, e] : fac) {
                known.push_back(q);
                if (e >= 2) k->maximize_at(q);
            }
            done = true;
        } catch (Error const & e) {
            if (complete || e.kind() != ErrorKind::EffortExceeded) throw;
        }
    }
    k->complete_ = done;
    std::sort(known.begin(), known.end());
    known.erase(std::unique(known.begin(), known.end()), known.end());
    k->maximal_at_ = known;
    if (done)
        for (auto const & q : known)
            if (mpz_divisible_p(k->disc_.get_mpz_t(), q.get_mpz_t())) k->ramified_.push_back(q);
    return k;
}

std::vector<std::vector<Rational>> NumberField::integral_basis() const
{
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < n_; ++i) {
        std::vector<Rational> r;
        for (std::size_t j = 0; j < n_; ++j) {
            Rational x(basis_(i, j), den_);
            x.canonicalize();
            r.push_back(x);
        }
        out.push_back(std::move(r));
    }
    return out;
}

Signature NumberField::signature() const
{
    std::call_once(sig_once_, [&] {
        sig_.r1 = count_real_roots(f_);
        sig_.r2 = static_cast<unsigned>((n_ - sig_.r1) / 2);
    });
    return sig_;
}

unsigned NumberField::unit_rank() const
{
    Signature s = signature();
    return s.r1 + s.r2 - 1;
}

std::vector<Complex> NumberField::roots(mpfr_prec_t prec) const
{
    auto compute = [&](mpfr_prec_t pr) {
        unsigned r1 = signature().r1;
        auto z = complex_roots(f_, pr);
        std::sort(z.begin(), z.end(), [](Complex const & a, Complex const & b) { return abs(a.im) < abs(b.im); });
        Real tol = ldexp(Real(1, pr), -static_cast<long>(pr) / 2);
        auto before = [&](Complex const & a, Complex const & b) {
            Real d = a.re - b.re;
            if (abs(d) > tol) return a.re < b.re;
            return a.im < b.im;
        };
        std::vector<Complex> real, cplx;
        for (std::size_t k = 0; k < z.size(); ++k) {
            if (k < r1) {
                real.emplace_back(z[k].re, Real(pr));
            } else if (z[k].im.sign() > 0) {
                cplx.push_back(z[k]);
            }
        }
        std::sort(real.begin(), real.end(), before);
        std::sort(cplx.begin(), cplx.end(), before);
        for (auto & c : cplx) real.push_back(std::move(c));
        return real;
    };
    if (prec <= 128) {
        std::call_once(roots_once_, [&] { roots_ = compute(128); });
        return roots_;
    }
    return compute(prec);
}

Elem NumberField::one() const
{
    Elem e(n_);
    e[0] = 1;
    return e;
}

Elem NumberField::from_integer(Integer const & a) const
{
    Elem e(n_);
    e[0] = a;
    return e;
}

Elem NumberField::theta() const { return n_ > 1 ? power_to_basis_.row_vector(1) : Elem{-f_[0]}; }

bool NumberField::is_zero(Elem const & a) const
{
    return std::all_of(a.begin(), a.end(), [](Integer const & x) { return x == 0; });
}

Elem NumberField::add(Elem const & a, Elem const & b) const
{
    Elem r(n_);
    for (std::size_t k = 0; k < n_; ++k) r[k] = a[k] + b[k];
    return r;
}

Elem NumberField::sub(Elem const & a, Elem const & b) const
{
    Elem r(n_);
    for (std::size_t k = 0; k < n_; ++k) r[k] = a[k] - b[k];
    return r;
}

Elem NumberField::scale(Elem const & a, Integer const & s) const
{
    Elem r(n_);
    for (std::size_t k = 0; k < n_; ++k) r[k] = a[k] * s;
    return r;
}

Elem NumberField::mul(Elem const & a, Elem const & b) const
{
    Elem r(n_);
    Integer s;
    for (std::size_t i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (b[j] == 0) continue;
            s = a[i] * b[j];
            Integer const * t = &table_[(i * n_ + j) * n_];
            for (std::size_t k = 0; k < n_; ++k)
                if (t[k] != 0) r[k] += s * t[k];
        }
    }
    return r;
}

Elem NumberField::pow(Elem const & a, Integer const & e) const
{
    if (e < 0) throw Error(ErrorKind::InvalidInput, "negative exponent");
    Elem r = one();
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t k = bits; k-- > 0;) {
        r = mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), k)) r = mul(r, a);
    }
    return r;
}

IntMatrix NumberField::mult_matrix(Elem const & a) const
{
    IntMatrix m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        if (a[j] == 0) continue;
        for (std::size_t i = 0; i < n_; ++i) {
            Integer const * t = &table_[(j * n_ + i) * n_];
            for (std::size_t k = 0; k < n_; ++k)
                if (t[k] != 0) m(i, k) += a[j] * t[k];
        }
    }
    return m;
}

Integer NumberField::norm(Elem const & a) const { return mult_matrix(a).determinant(); }

Integer NumberField::trace(Elem const & a) const
{
    Integer s = 0;
    for (std::size_t j = 0; j < n_; ++j) {
        if (a[j] == 0) continue;
        Integer t = 0;
        for (std::size_t i = 0; i < n_; ++i) t += mult_table_entry(j, i, i);
        s += a[j] * t;
    }
    return s;
}

std::optional<Elem> NumberField::divide(Elem const & a, Elem const & b) const
{
    if (is_zero(b)) throw Error(ErrorKind::InvalidInput, "division by zero");
    std::vector<Rational> rhs(a.begin(), a.end());
    auto x = solve_rational(mult_matrix(b).transpose(), rhs);
    if (!x) return std::nullopt;
    Elem r(n_);
    for (std::size_t k = 0; k < n_; ++k) {
        if ((*x)[k].get_den() != 1) return std::nullopt;
        r[k] = (*x)[k].get_num();
    }
    return r;
}

QPoly NumberField::to_poly(Elem const & a) const
{
    std::vector<Rational> c(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j <= i; ++j) c[j] += Rational(a[i] * basis_(i, j));
    }
    for (auto & x : c) {
        x /= den_;
        x.canonicalize();
    }
    return QPoly(std::move(c));
}

std::vector<Rational> NumberField::coordinates(QPoly const & p0) const
{
    QPoly p = p0 % to_q(f_);
    std::vector<Rational> c(n_);
    for (std::size_t j = n_; j-- > 0;) {
        Rational acc = p[j] * den_;
        for (std::size_t i = j + 1; i < n_; ++i) acc -= c[i] * basis_(i, j);
        c[j] = acc / basis_(j, j);
        c[j].canonicalize();
    }
    return c;
}

std::optional<Elem> NumberField::to_elem(QPoly const & p) const
{
    Elem r(n_);
    auto c = coordinates(p);
    for (std::size_t k = 0; k < n_; ++k) {
        if (c[k].get_den() != 1) return std::nullopt;
        r[k] = c[k].get_num();
    }
    return r;
}

Elem NumberField::evaluate(ZPoly const & g, Elem const & a) const
{
    Elem acc(n_);
    for (std::size_t k = g.coeffs().size(); k-- > 0;) {
        acc = mul(acc, a);
        acc[0] += g[k];
    }
    return acc;
}

Complex NumberField::embed(Elem const & a, std::size_t j, mpfr_prec_t prec) const
{
    auto r = roots(prec);
    return kloc::evaluate(to_poly(a), r.at(j));
}

RealVectors const & NumberField::t2_embedding() const
{
    std::call_once(t2_once_, [&] {
        auto r = roots(128);
        unsigned r1 = signature().r1;
        long double s2 = std::sqrt(2.0L);
        t2_.assign(n_, std::vector<long double>(n_, 0));
        for (std::size_t i = 0; i < n_; ++i) {
            Elem e(n_);
            e[i] = 1;
            QPoly p = to_poly(e);
            for (std::size_t k = 0; k < r.size(); ++k) {
                Complex v = kloc::evaluate(p, r[k]);
                if (k < r1) {
                    t2_[i][k] = v.re.to_ld();
                } else {
                    std::size_t c = r1 + 2 * (k - r1);
                    t2_[i][c] = s2 * v.re.to_ld();
                    t2_[i][c + 1] = s2 * v.im.to_ld();
                }
            }
        }
    });
    return t2_;
}

long double NumberField::t2(Elem const & a) const
{
    auto const & m = t2_embedding();
    long double s = 0;
    for (std::size_t c = 0; c < n_; ++c) {
        long double v = 0;
        for (std::size_t i = 0; i < n_; ++i)
            if (a[i] != 0) v += static_cast<long double>(a[i].get_d()) * m[i][c];
        s += v * v;
    }
    return s;
}

Rational NumberField::minkowski_bound() const
{
    mpfr_prec_t pr = 160;
    Integer fact = 1;
    for (std::size_t k = 2; k <= n_; ++k) fact *= static_cast<unsigned long>(k);
    Rational lead(fact, ipow(Integer(static_cast<unsigned long>(n_)), n_));
    lead.canonicalize();
    Real v(lead, pr);
    Real four_over_pi = Real(4, pr) / pi(pr);
    for (unsigned k = 0; k < signature().r2; ++k) v *= four_over_pi;
    v *= sqrt(Real(Integer(abs(disc_)), pr));
    v *= Real(1000000, pr);
    mpfr_ceil(v.get(), v.get());
    Rational b(v.round(), Integer(1000000));
    b.canonicalize();
    return b;
}

std::vector<Elem> NumberField::roots_of(ZPoly const & g) const { return roots_impl(g, 0); }

std::vector<Elem> NumberField::roots_impl(ZPoly const & g0, unsigned boost) const
{
    if (g0.degree() < 1) return {};
    if (g0.lead() != 1) throw Error(ErrorKind::NotMonic, "root search needs a monic polynomial");
    QPoly gq = to_q(g0);
    QPoly sq = gq / gcd(gq, gq.derivative());
    ZPoly g = primitive_part(sq);

    /* bound on the coordinates of a root through the inverse T2 matrix */
    auto const & m = t2_embedding();
    std::size_t n = n_;
    std::vector<std::vector<long double>> a(n, std::vector<long double>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
        std::swap(a[piv], a[c]);
        long double d = a[c][c];
        if (d == 0) throw Error(ErrorKind::PrecisionExhausted, "singular embedding matrix");
        for (auto & x : a[c]) x /= d;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            long double t = a[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= t * a[c][k];
        }
    }
    /* (M^-1)(k, i) = a[k][n + i]; bound column norms of M^-1 */
    long double colmax = 0;
    for (std::size_t i = 0; i < n; ++i) {
        long double s = 0;
        for (std::size_t k = 0; k < n; ++k) s += a[k][n + i] * a[k][n + i];
        colmax = std::max(colmax, std::sqrt(s));
    }
    auto groots = complex_roots(g, 128);
    long double radius = 1;
    for (auto const & r : groots) radius = std::max(radius, r.abs().to_ld());
    long double bound = 2 * std::sqrt(static_cast<long double>(n)) * radius * colmax + 2;
    long log_bound = static_cast<long>(std::ceil(std::log2(bound)));

    unsigned r1 = signature().r1;
    bool real_place = signature().r2 == 0;
    std::size_t j0 = real_place ? 0 : r1;
    std::size_t kc = real_place ? 1 : 2;
    long bits_c = static_cast<long>(std::ceil((n + 1.0) / kc * (n / 2.0 + log_bound + std::log2(n + 1.0) + 10))) + boost;
    long max_exp = 0;
    auto base_roots = roots(128);
    for (std::size_t i = 0; i < n; ++i) {
        Elem e(n);
        e[i] = 1;
        max_exp = std::max(max_exp, kloc::evaluate(to_poly(e), base_roots[j0]).abs().exponent());
    }
    mpfr_prec_t prec = bits_c + max_exp + static_cast<long>(log_bound) + 64;

    auto kr = roots(prec);
    auto gr = complex_roots(g, prec);
    std::vector<Complex> emb;
    for (std::size_t i = 0; i < n; ++i) {
        Elem e(n);
        e[i] = 1;
        emb.push_back(kloc::evaluate(to_poly(e), kr[j0]));
    }
    Integer weight(static_cast<double>(std::ceil(bound)));
    auto scaled = [&](Real const & x) { return ldexp(x, bits_c).round(); };

    std::vector<Elem> found;
    Real small = ldexp(Real(1, prec), -static_cast<long>(prec) / 2);
    for (auto const & s : gr) {
        if (real_place && abs(s.im) > small) continue;
        IntMatrix lat(n + 1, n + kc + 1);
        for (std::size_t i = 0; i < n; ++i) {
            lat(i, i) = 1;
            lat(i, n) = scaled(emb[i].re);
            if (kc == 2) lat(i, n + 1) = scaled(emb[i].im);
        }
        lat(n, n) = -scaled(s.re);
        if (kc == 2) lat(n, n + 1) = -scaled(s.im);
        lat(n, n + kc) = weight;
        IntMatrix red = lll_exact(lat);
        for (std::size_t r = 0; r < red.rows(); ++r) {
            Integer last = red(r, n + kc);
            if (abs(last) != weight) continue;
            Elem c(n);
            for (std::size_t i = 0; i < n; ++i) c[i] = last > 0 ? red(r, i) : Integer(-red(r, i));
            if (!is_zero(evaluate(g, c))) continue;
            if (std::find(found.begin(), found.end(), c) == found.end()) found.push_back(c);
            break;
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

FieldAutomorphism NumberField::automorphism_from_image(Elem const & image) const
{
    std::vector<Elem> powers{one()};
    for (std::size_t k = 1; k < n_; ++k) powers.push_back(mul(powers.back(), image));
    FieldAutomorphism s;
    s.image = image;
    s.matrix = IntMatrix(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Elem acc(n_);
        for (std::size_t j = 0; j <= i; ++j)
            if (basis_(i, j) != 0) acc = add(acc, scale(powers[j], basis_(i, j)));
        for (std::size_t k = 0; k < n_; ++k) {
            if (!mpz_divisible_p(acc[k].get_mpz_t(), den_.get_mpz_t()))
                throw Error(ErrorKind::InvalidInput, "image is not a conjugate of the generator");
            s.matrix(i, k) = acc[k] / den_;
        }
    }
    return s;
}

std::vector<FieldAutomorphism> NumberField::automorphisms() const
{
    std::call_once(auto_once_, [&] {
        std::vector<Elem> imgs;
        for (unsigned boost = 0; boost <= 256; boost += 128) {
            imgs = roots_impl(f_, boost);
            if (n_ % imgs.size() == 0) break;
        }
        if (n_ % imgs.size() != 0) throw Error(ErrorKind::PrecisionExhausted, "automorphism search inconsistent");
        Elem th = theta();
        std::stable_partition(imgs.begin(), imgs.end(), [&](Elem const & e) { return e == th; });
        for (auto const & e : imgs) autos_.push_back(automorphism_from_image(e));
    });
    return autos_;
}

} // namespace kloc
