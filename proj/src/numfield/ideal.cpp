#include "kloc/numfield/ideal.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "kloc/error.hpp"
#include "kloc/intlinalg/modular.hpp"
#include "kloc/intlinalg/normal_form.hpp"
#include "kloc/numfield/lattice.hpp"
#include "kloc/numfield/poly_fp.hpp"

namespace kloc {

namespace {

void same_field(Ideal const & a, Ideal const & b)
{
    if (a.field() == b.field()) return;
    if (a.field() && b.field() && a.field()->poly() == b.field()->poly() &&
        a.field()->basis_numerators() == b.field()->basis_numerators() &&
        a.field()->basis_denominator() == b.field()->basis_denominator())
        return;
    throw Error(ErrorKind::FieldMismatch, "ideals belong to different fields");
}

std::uint64_t word_prime(Integer const & q)
{
    if (q < 2 || mpz_sizeinbase(q.get_mpz_t(), 2) > 62) throw Error(ErrorKind::EffortExceeded, "prime " + q.get_str() + " out of range");
    return q.get_ui();
}

Elem lift(std::vector<std::uint64_t> const & v)
{
    Elem e;
    for (auto x : v) e.emplace_back(static_cast<unsigned long>(x));
    return e;
}

/* rows of `rows` times multiplication by a */
void append_products(IntMatrix & out, IntMatrix const & rows, NumberField const & k, Elem const & a)
{
    IntMatrix m = k.mult_matrix(a);
    IntMatrix p = rows * m;
    for (std::size_t i = 0; i < p.rows(); ++i) out.append_row(p.row(i));
}

bool divisible_by(Elem const & x, Integer const & q)
{
    return std::all_of(x.begin(), x.end(), [&](Integer const & c) { return mpz_divisible_p(c.get_mpz_t(), q.get_mpz_t()) != 0; });
}

Elem anti_uniformizer(NumberField const & k, IntMatrix const & prime_rows, std::uint64_t q)
{
    std::size_t n = k.degree();
    Integer qz(static_cast<unsigned long>(q));
    FpMatrix m(q, n, n * prime_rows.rows());
    for (std::size_t r = 0; r < prime_rows.rows(); ++r) {
        IntMatrix mr = k.mult_matrix(prime_rows.row_vector(r));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t c = 0; c < n; ++c) m(i, r * n + c) = floor_mod(mr(i, c), qz).get_ui();
    }
    auto ker = m.left_kernel();
    if (ker.empty()) throw Error(ErrorKind::InvalidInput, "ideal is not prime over " + qz.get_str());
    return lift(ker.front());
}

long valuation_steps(NumberField const & k, Elem const & beta, Integer const & p, Elem x)
{
    long v = 0;
    for (;;) {
        Elem y = k.mul(x, beta);
        if (!divisible_by(y, p)) return v;
        for (auto & c : y) c /= p;
        x = std::move(y);
        ++v;
    }
}

PrimeIdealFactor make_prime(FieldPtr const & field, IntMatrix const & rows, std::uint64_t q)
{
    Integer qz(static_cast<unsigned long>(q));
    PrimeIdealFactor pf;
    pf.ideal = Ideal(field, rows);
    pf.p = qz;
    Integer nm = 1;
    for (std::size_t i = 0; i < rows.rows(); ++i) nm *= rows(i, i);
    pf.f = valuation(nm, qz);
    pf.anti_uniformizer = anti_uniformizer(*field, rows, q);
    pf.e = static_cast<unsigned>(valuation_steps(*field, pf.anti_uniformizer, qz, field->from_integer(qz)));
    return pf;
}

/* minimal polynomial of a in O / J over F_q, J given by rows containing qO */
FpPoly min_poly_mod(ResidueRing const & rr, IntMatrix const & j_rows, Elem const & a, std::size_t & dim)
{
    std::uint64_t q = rr.modulus();
    std::size_t n = rr.degree();
    FpMatrix w(q, j_rows);
    w.row_reduce();
    std::size_t rank = w.rank();
    dim = n - rank;
    std::vector<ResidueRing::Vec> powers{rr.one()};
    ResidueRing::Vec av = rr.reduce(a);
    for (std::size_t k = 1; k <= dim; ++k) {
        powers.push_back(rr.mul(powers.back(), av));
        FpMatrix m(q, rank + powers.size(), n);
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t c = 0; c < n; ++c) m(i, c) = w(i, c);
        for (std::size_t i = 0; i < powers.size(); ++i)
            for (std::size_t c = 0; c < n; ++c) m(rank + i, c) = powers[i][c];
        for (auto const & v : m.left_kernel()) {
            std::uint64_t lead = v[rank + k];
            if (!lead) continue;
            std::uint64_t inv = invmod(lead, q);
            std::vector<std::uint64_t> c(k + 1);
            for (std::size_t j = 0; j <= k; ++j) c[j] = mulmod(v[rank + j], inv, q);
            return FpPoly(q, std::move(c));
        }
    }
    throw Error(ErrorKind::InvalidInput, "minimal polynomial search failed");
}

void split_radical(FieldPtr const & field, ResidueRing const & rr, IntMatrix const & j_rows, std::mt19937_64 & rng,
                   std::vector<IntMatrix> & out)
{
    std::uint64_t q = rr.modulus();
    std::size_t n = field->degree();
    Integer qz(static_cast<unsigned long>(q));
    for (int attempt = 0; attempt < 400; ++attempt) {
        Elem a(n);
        for (auto & c : a) c = static_cast<unsigned long>(rng() % q);
        std::size_t dim = 0;
        FpPoly m = min_poly_mod(rr, j_rows, a, dim);
        if (dim <= 1) {
            out.push_back(j_rows);
            return;
        }
        auto fac = factor(m, rng());
        if (fac.size() == 1) {
            if (m.degree() == static_cast<int>(dim)) {
                out.push_back(j_rows);
                return;
            }
            continue;
        }
        for (auto const & [g, mult] : fac) {
            Elem ga = field->evaluate(g.lift(), a);
            IntMatrix rows = j_rows;
            append_products(rows, IntMatrix::identity(n), *field, ga);
            split_radical(field, rr, hnf_lower_modulo(rows, qz), rng, out);
        }
        return;
    }
    throw Error(ErrorKind::EffortExceeded, "residue algebra splitting did not converge");
}

} // namespace

Ideal::Ideal(FieldPtr field, IntMatrix hnf, Integer denominator) : field_(std::move(field)), hnf_(std::move(hnf)), den_(std::move(denominator))
{
    if (!field_) throw Error(ErrorKind::InvalidInput, "ideal without field");
    if (hnf_.rows() != field_->degree() || hnf_.cols() != field_->degree()) throw Error(ErrorKind::InvalidInput, "ideal matrix has the wrong shape");
    if (den_ <= 0) throw Error(ErrorKind::InvalidInput, "ideal denominator must be positive");
}

Ideal Ideal::unit(FieldPtr const & field) { return Ideal(field, IntMatrix::identity(field->degree())); }

Ideal Ideal::from_integer(FieldPtr const & field, Integer const & a)
{
    if (a == 0) throw Error(ErrorKind::InvalidInput, "zero ideal");
    IntMatrix m(field->degree(), field->degree());
    for (std::size_t i = 0; i < field->degree(); ++i) m(i, i) = abs(a);
    return Ideal(field, m);
}

Ideal Ideal::generated(FieldPtr const & field, std::vector<Elem> const & gens, Integer const & multiple)
{
    std::size_t n = field->degree();
    Integer mod = abs(multiple);
    IntMatrix rows(0, n);
    IntMatrix id = IntMatrix::identity(n);
    for (auto const & g : gens) {
        if (field->is_zero(g)) continue;
        if (mod == 0) mod = abs(field->norm(g));
        append_products(rows, id, *field, g);
    }
    if (mod == 0) throw Error(ErrorKind::InvalidInput, "zero ideal");
    for (std::size_t i = 0; i < n; ++i) {
        Elem e(n);
        e[i] = mod;
        rows.append_row(e);
    }
    return Ideal(field, hnf_lower_modulo(rows, mod));
}

Ideal Ideal::principal(FieldPtr const & field, Elem const & a) { return generated(field, {a}); }

Rational Ideal::norm() const
{
    Integer d = 1;
    for (std::size_t i = 0; i < hnf_.rows(); ++i) d *= hnf_(i, i);
    Rational r(d, ipow(den_, hnf_.rows()));
    r.canonicalize();
    return r;
}

bool Ideal::contains(Elem const & a) const
{
    std::size_t n = hnf_.rows();
    Elem v(a);
    for (auto & c : v) c *= den_;
    for (std::size_t j = n; j-- > 0;) {
        if (!mpz_divisible_p(v[j].get_mpz_t(), hnf_(j, j).get_mpz_t())) return false;
        Integer y = v[j] / hnf_(j, j);
        for (std::size_t c = 0; c <= j; ++c) v[c] -= y * hnf_(j, c);
    }
    return true;
}

bool Ideal::is_unit() const { return den_ == 1 && hnf_ == IntMatrix::identity(hnf_.rows()); }

std::vector<Elem> Ideal::basis() const
{
    std::vector<Elem> out;
    for (std::size_t i = 0; i < hnf_.rows(); ++i) out.push_back(hnf_.row_vector(i));
    return out;
}

bool Ideal::operator==(Ideal const & o) const
{
    same_field(*this, o);
    return den_ == o.den_ && hnf_ == o.hnf_;
}

Ideal ideal_mul(Ideal const & a, Ideal const & b)
{
    same_field(a, b);
    auto const & k = *a.field();
    std::size_t n = k.degree();
    IntMatrix rows(0, n);
    for (std::size_t i = 0; i < n; ++i) append_products(rows, b.matrix(), k, a.matrix().row_vector(i));
    Integer mod = a.min_integer() * b.min_integer();
    for (std::size_t i = 0; i < n; ++i) {
        Elem e(n);
        e[i] = mod;
        rows.append_row(e);
    }
    return Ideal(a.field(), hnf_lower_modulo(rows, mod), a.denominator() * b.denominator());
}

Ideal ideal_add(Ideal const & a, Ideal const & b)
{
    same_field(a, b);
    if (!a.is_integral() || !b.is_integral()) throw Error(ErrorKind::InvalidInput, "sum of fractional ideals");
    std::size_t n = a.field()->degree();
    IntMatrix rows = a.matrix();
    for (std::size_t i = 0; i < n; ++i) rows.append_row(b.matrix().row(i));
    return Ideal(a.field(), hnf_lower_modulo(rows, gcd(a.min_integer(), b.min_integer())));
}

Ideal ideal_pow(Ideal const & a, unsigned long e)
{
    Ideal r = Ideal::unit(a.field());
    Ideal base = a;
    while (e) {
        if (e & 1) r = ideal_mul(r, base);
        e >>= 1;
        if (e) base = ideal_mul(base, base);
    }
    return r;
}

Rational ideal_norm(Ideal const & a) { return a.norm(); }

Ideal apply(FieldAutomorphism const & s, Ideal const & a)
{
    IntMatrix rows = a.matrix() * s.matrix;
    std::size_t n = rows.cols();
    for (std::size_t i = 0; i < n; ++i) {
        Elem e(n);
        e[i] = a.min_integer();
        rows.append_row(e);
    }
    return Ideal(a.field(), hnf_lower_modulo(rows, a.min_integer()), a.denominator());
}

std::vector<PrimeIdealFactor> factor_rational_prime(FieldPtr const & field, Integer const & q)
{
    if (!is_prime(q)) throw Error(ErrorKind::InvalidInput, q.get_str() + " is not prime");
    std::uint64_t qq = word_prime(q);
    auto const & k = *field;
    std::size_t n = k.degree();
    std::vector<IntMatrix> primes;
    if (!mpz_divisible_p(k.index().get_mpz_t(), q.get_mpz_t())) {
        for (auto const & [g, e] : factor(FpPoly(qq, k.poly()))) {
            Elem gt(n);
            ZPoly gl = g.lift();
            if (gl.degree() == static_cast<int>(n)) gl = gl - k.poly();
            for (std::size_t d = 0; d < gl.coeffs().size(); ++d)
                for (std::size_t c = 0; c < n; ++c) gt[c] += gl[d] * k.power_to_basis()(d, c);
            IntMatrix rows(0, n);
            append_products(rows, IntMatrix::identity(n), k, gt);
            for (std::size_t i = 0; i < n; ++i) {
                Elem x(n);
                x[i] = q;
                rows.append_row(x);
            }
            primes.push_back(hnf_lower_modulo(rows, q));
        }
    } else {
        ResidueRing rr(k, qq);
        std::mt19937_64 rng(qq * 0x9e3779b97f4a7c15ULL + n);
        split_radical(field, rr, radical_of_prime(k, qq), rng, primes);
    }
    std::vector<PrimeIdealFactor> out;
    unsigned total = 0;
    for (auto const & rows : primes) {
        out.push_back(make_prime(field, rows, qq));
        total += out.back().e * out.back().f;
    }
    if (total != n) throw Error(ErrorKind::InvalidInput, "prime decomposition of " + q.get_str() + " is inconsistent");
    std::sort(out.begin(), out.end(), [](PrimeIdealFactor const & a, PrimeIdealFactor const & b) {
        if (a.f != b.f) return a.f < b.f;
        if (a.e != b.e) return a.e < b.e;
        auto const & x = a.ideal.matrix();
        auto const & y = b.ideal.matrix();
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j)
                if (x(i, j) != y(i, j)) return x(i, j) < y(i, j);
        return false;
    });
    return out;
}

long valuation(PrimeIdealFactor const & p, Elem a)
{
    auto const & k = *p.ideal.field();
    if (k.is_zero(a)) throw Error(ErrorKind::InvalidInput, "valuation of zero");
    Integer c = 0;
    for (auto const & x : a) c = gcd(c, x);
    long v = static_cast<long>(valuation(c, p.p));
    if (v) {
        Integer pv = ipow(p.p, v);
        for (auto & x : a) x /= pv;
    }
    return v * p.e + valuation_steps(k, p.anti_uniformizer, p.p, std::move(a));
}

long valuation(PrimeIdealFactor const & p, Ideal const & a)
{
    long v = std::numeric_limits<long>::max();
    for (auto const & row : a.basis()) v = std::min(v, valuation(p, row));
    return v - static_cast<long>(p.e) * static_cast<long>(valuation(a.denominator(), p.p));
}

std::vector<std::pair<PrimeIdealFactor, long>> factor_ideal(Ideal const & a)
{
    if (!a.is_integral()) throw Error(ErrorKind::InvalidInput, "factor_ideal needs an integral ideal");
    std::vector<std::pair<PrimeIdealFactor, long>> out;
    Rational nm = a.norm();
    if (nm == 1) return out;
    for (auto const & [q, e] : factor_integer(nm.get_num())) {
        for (auto & p : factor_rational_prime(a.field(), q)) {
            long v = valuation(p, a);
            if (v > 0) out.emplace_back(std::move(p), v);
        }
    }
    return out;
}

PrincipalTest is_principal(Ideal const & ideal, double safety)
{
    if (!ideal.is_integral()) throw Error(ErrorKind::InvalidInput, "is_principal needs an integral ideal");
    auto const & k = *ideal.field();
    std::size_t n = k.degree();
    Integer nm = ideal.norm().get_num();
    if (nm == 1) return {k.one(), true};
    auto const & emb = k.t2_embedding();
    RealVectors vecs(n, std::vector<long double>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c) {
            long double s = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (ideal.matrix()(i, j) != 0) s += static_cast<long double>(ideal.matrix()(i, j).get_d()) * emb[j][c];
            vecs[i][c] = s;
        }
    IntMatrix t = lll_float(vecs);
    IntMatrix reduced = t * ideal.matrix();
    RealVectors g = gram(vecs);
    long double bound = safety * n * std::pow(static_cast<long double>(nm.get_d()), 2.0L / n);
    std::optional<Elem> found;
    bool complete = enumerate_short_vectors(g, bound, [&](std::vector<long> const & x, long double) {
        Elem a(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!x[i]) continue;
            for (std::size_t c = 0; c < n; ++c) a[c] += x[i] * reduced(i, c);
        }
        if (abs(k.norm(a)) == nm) {
            found = std::move(a);
            return false;
        }
        return true;
    });
    if (found) return {found, true};
    return {std::nullopt, complete && k.unit_rank() == 0};
}

} // namespace kloc
