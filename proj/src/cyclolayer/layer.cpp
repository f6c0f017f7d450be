#include "kloc/cyclolayer/layer.hpp"

#include <algorithm>
#include <set>

#include "kloc/cyclolayer/cyclotomic.hpp"
#include "kloc/error.hpp"
#include "kloc/intlinalg/modular.hpp"

namespace kloc {

namespace {

using QVec = std::vector<Rational>;

/* x with sum_j x_j basis_j = target, for every target; throws if some target is outside the span */
std::vector<QVec> solve_combinations(std::vector<QVec> const & basis, std::vector<QVec> const & targets)
{
    std::size_t k = basis.size(), t = targets.size();
    std::size_t len = basis.empty() ? 0 : basis[0].size();
    /* columns: basis vectors, then targets */
    std::vector<QVec> a(len, QVec(k + t));
    for (std::size_t r = 0; r < len; ++r) {
        for (std::size_t j = 0; j < k; ++j) a[r][j] = basis[j][r];
        for (std::size_t j = 0; j < t; ++j) a[r][k + j] = targets[j][r];
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < k && row < len; ++c) {
        std::size_t piv = row;
        while (piv < len && a[piv][c] == 0) ++piv;
        if (piv == len) throw Error(ErrorKind::InvalidInput, "dependent basis");
        std::swap(a[piv], a[row]);
        Rational inv = 1 / a[row][c];
        for (std::size_t j = c; j < k + t; ++j) a[row][j] *= inv;
        for (std::size_t r = 0; r < len; ++r) {
            if (r == row || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (std::size_t j = c; j < k + t; ++j)
                if (a[row][j] != 0) a[r][j] -= f * a[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    if (pivots.size() < k) throw Error(ErrorKind::InvalidInput, "dependent basis");
    for (std::size_t r = k; r < len; ++r)
        for (std::size_t j = 0; j < t; ++j)
            if (a[r][k + j] != 0) throw Error(ErrorKind::InvalidInput, "target outside the span");
    std::vector<QVec> out(t, QVec(k));
    for (std::size_t j = 0; j < t; ++j)
        for (std::size_t r = 0; r < k; ++r) out[j][r] = a[r][k + j];
    return out;
}

QVec to_qvec(std::vector<Integer> const & v) { return QVec(v.begin(), v.end()); }

/* F-element with rational coordinates */
QVec fmul(NumberField const & f, QVec const & a, QVec const & b)
{
    std::size_t n = f.degree();
    QVec r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            Rational ab = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k) {
                Integer const & t = f.mult_table_entry(i, j, k);
                if (t != 0) r[k] += ab * t;
            }
        }
    }
    return r;
}

/* F[X]/(g) with g monic of degree D over O_F; coordinates index j * nF + a for omega_a X^j */
struct RelativeAlgebra {
    NumberField const * f;
    std::size_t nf, d;
    std::vector<QVec> g; /* g_0 .. g_{D-1} */

    QVec block(QVec const & u, std::size_t j) const { return QVec(u.begin() + j * nf, u.begin() + (j + 1) * nf); }

    QVec mul(QVec const & u, QVec const & v) const
    {
        std::vector<QVec> prod(2 * d - 1, QVec(nf));
        for (std::size_t i = 0; i < d; ++i) {
            QVec ui = block(u, i);
            if (std::all_of(ui.begin(), ui.end(), [](Rational const & x) { return x == 0; })) continue;
            for (std::size_t j = 0; j < d; ++j) {
                QVec vj = block(v, j);
                if (std::all_of(vj.begin(), vj.end(), [](Rational const & x) { return x == 0; })) continue;
                QVec w = fmul(*f, ui, vj);
                for (std::size_t a = 0; a < nf; ++a) prod[i + j][a] += w[a];
            }
        }
        for (std::size_t e = 2 * d - 1; e-- > d;) {
            QVec c = prod[e];
            for (std::size_t t = 0; t < d; ++t) {
                QVec w = fmul(*f, c, g[t]);
                for (std::size_t a = 0; a < nf; ++a) prod[e - d + t][a] -= w[a];
            }
        }
        QVec out(nf * d);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t a = 0; a < nf; ++a) out[j * nf + a] = prod[j][a];
        return out;
    }
};

std::vector<Integer> primes_of(Integer n)
{
    std::vector<Integer> out;
    if (n == 0) return out;
    for (auto const & [q, e] : factor_integer(abs(n))) out.push_back(q);
    return out;
}

std::uint64_t pow_mod(std::uint64_t a, unsigned long e, std::uint64_t m) { return powmod(a % m, e, m); }

/* Q(zeta)^sub is contained in F */
bool subfield_in(NumberField const & f, CycloRing const & z, std::vector<std::uint64_t> const & sub,
                 std::vector<std::uint64_t> const & g)
{
    if (sub.size() == g.size()) return true;
    auto gen = subfield_generator(z, sub, g);
    auto coeffs = conjugate_polynomial(z, gen.conjugates);
    std::vector<Integer> c;
    for (auto const & x : coeffs) {
        Integer v;
        if (!z.is_rational(x, v)) throw Error(ErrorKind::InvalidInput, "conjugate polynomial is not rational");
        c.push_back(v);
    }
    return !f.roots_of(ZPoly(c)).empty();
}

} // namespace

bool CharacterImage::contains(std::uint64_t x) const { return std::binary_search(elements.begin(), elements.end(), x % modulus); }

CharacterImage char_image(FieldPtr const & field, std::uint64_t p, unsigned n)
{
    if (n == 0) throw Error(ErrorKind::InvalidInput, "level must be positive");
    if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, "p must be prime");
    CycloRing z(p, n);
    std::uint64_t m = z.modulus();
    auto g = unit_group(m);
    CharacterImage out{p, n, m, {}};
    auto const & k = *field;
    if (k.degree() == 1) {
        out.elements = g;
        return out;
    }
    Integer bad = k.discriminant() * Integer(static_cast<unsigned long>(p));
    std::vector<std::uint64_t> gens;
    std::vector<std::uint64_t> h{1 % m};
    unsigned since_test = 0;
    for (std::uint64_t q = 2, used = 0;; q = next_prime(q)) {
        if (!is_prime(q) || mpz_divisible_ui_p(bad.get_mpz_t(), q)) continue;
        if (++used > 3000) throw Error(ErrorKind::EffortExceeded, "character image did not stabilize");
        for (auto const & pr : factor_rational_prime(field, q)) gens.push_back(pow_mod(q, pr.f, m));
        h = generated_subgroup(gens, m);
        if (h.size() == g.size()) break;
        std::size_t index = g.size() / h.size();
        if (k.degree() % index != 0) continue;
        if (++since_test < 8) continue;
        since_test = 0;
        if (subfield_in(k, z, h, g)) break;
    }
    out.elements = h;
    return out;
}

Elem Layer::embed(Elem const & x) const
{
    if (x.size() != base_embedding.rows()) throw Error(ErrorKind::FieldMismatch, "element of another field");
    return std::span<Integer const>(x) * base_embedding;
}

Ideal Layer::extend(Ideal const & a) const
{
    if (!a.is_integral()) throw Error(ErrorKind::InvalidInput, "extend needs an integral ideal");
    std::vector<Elem> gens;
    for (auto const & b : a.basis()) gens.push_back(embed(b));
    return Ideal::generated(field, gens, a.min_integer());
}

Layer build_layer(FieldPtr const & field, std::uint64_t p, unsigned n, unsigned long i, LayerOptions const & opts)
{
    if (i == 0) throw Error(ErrorKind::InvalidInput, "twist must be positive");
    auto const & f = *field;
    std::size_t nf = f.degree();
    Layer layer;
    layer.base = field;
    layer.p = p;
    layer.n = n;
    layer.i = i;
    auto trivial = [&] {
        layer.field = field;
        layer.gamma = {LayerAutomorphism{field->automorphism_from_image(f.theta()), 1, 1}};
        layer.theta_image = f.theta();
        layer.base_embedding = IntMatrix::identity(nf);
        return layer;
    };
    if (p == 2 && !is_nonexceptional(field)) throw Error(ErrorKind::OutOfTheoremScope, "exceptional field at p = 2");
    if (n == 0) {
        layer.image = CharacterImage{p, 0, 1, {0}};
        layer.kernel = {0};
        return trivial();
    }
    layer.image = char_image(field, p, n);
    std::uint64_t m = layer.image.modulus;
    auto const & h = layer.image.elements;
    for (auto x : h)
        if (pow_mod(x, i, m) == 1 % m) layer.kernel.push_back(x);
    if (layer.kernel.size() == h.size()) return trivial();

    CycloRing z(p, n);
    auto g = unit_group(m);
    /* E = Q(zeta)^H sits in F through a root of the minimal polynomial of its generator */
    auto gen_e = subfield_generator(z, h, g);
    std::size_t de = gen_e.cosets.size();
    std::vector<QVec> r_pow{to_qvec(f.one())};
    if (de > 1) {
        std::vector<Integer> c;
        for (auto const & x : conjugate_polynomial(z, gen_e.conjugates)) {
            Integer v;
            if (!z.is_rational(x, v)) throw Error(ErrorKind::InvalidInput, "conjugate polynomial is not rational");
            c.push_back(v);
        }
        auto roots = f.roots_of(ZPoly(c));
        if (roots.empty()) throw Error(ErrorKind::InvalidInput, "cyclotomic subfield not found in the base");
        Elem pw = f.one();
        for (std::size_t d = 1; d < de; ++d) {
            pw = f.mul(pw, roots[0]);
            r_pow.push_back(to_qvec(pw));
        }
    }
    /* M = Q(zeta)^K = E(beta) */
    auto gen_m = subfield_generator(z, layer.kernel, h);
    std::size_t dd = gen_m.cosets.size();
    std::vector<CycloRing::Elt> e_pow{z.constant(1)}, b_pow{z.constant(1)};
    for (std::size_t d = 1; d < de; ++d) e_pow.push_back(z.mul(e_pow.back(), gen_e.element));
    for (std::size_t j = 1; j < dd; ++j) b_pow.push_back(z.mul(b_pow.back(), gen_m.element));
    std::vector<QVec> mbasis;
    for (std::size_t j = 0; j < dd; ++j)
        for (std::size_t d = 0; d < de; ++d) mbasis.push_back(to_qvec(z.reduce(z.mul(e_pow[d], b_pow[j]))));

    std::vector<QVec> targets;
    auto gcoef = conjugate_polynomial(z, gen_m.conjugates);
    for (std::size_t t = 0; t < dd; ++t) targets.push_back(to_qvec(z.reduce(gcoef[t])));
    for (std::size_t c = 0; c < dd; ++c) targets.push_back(to_qvec(z.reduce(gen_m.conjugates[c])));
    std::set<std::uint64_t> seen;
    for (std::uint64_t j = 0; j < m; ++j) {
        if (seen.count(j)) continue;
        for (auto k : layer.kernel) seen.insert(j * k % m);
        targets.push_back(to_qvec(z.reduce(orbit_sum(z, layer.kernel, j))));
    }
    auto sol = solve_combinations(mbasis, targets);

    std::size_t big = nf * dd;
    auto to_algebra = [&](QVec const & q) {
        QVec u(big);
        for (std::size_t j = 0; j < dd; ++j)
            for (std::size_t d = 0; d < de; ++d) {
                Rational c = q[j * de + d];
                if (c == 0) continue;
                for (std::size_t a = 0; a < nf; ++a) u[j * nf + a] += c * r_pow[d][a];
            }
        return u;
    };
    RelativeAlgebra alg{&f, nf, dd, {}};
    for (std::size_t t = 0; t < dd; ++t) {
        QVec u = to_algebra(sol[t]);
        QVec gt(u.begin(), u.begin() + nf);
        for (auto const & x : gt)
            if (x.get_den() != 1) throw Error(ErrorKind::InvalidInput, "relative polynomial is not integral");
        alg.g.push_back(gt);
    }
    std::vector<QVec> conj_alg, orbit_alg;
    for (std::size_t c = 0; c < dd; ++c) conj_alg.push_back(to_algebra(sol[dd + c]));
    for (std::size_t s = 2 * dd; s < sol.size(); ++s) orbit_alg.push_back(to_algebra(sol[s]));

    /* gamma = X + t theta generates L over Q */
    QVec theta_alg(big);
    Elem th = f.theta();
    for (std::size_t a = 0; a < nf; ++a) theta_alg[a] = th[a];
    for (long t = 0;; t = t > 0 ? -t : 1 - t) {
        if (std::abs(t) > 50) throw Error(ErrorKind::InvalidInput, "no primitive element found");
        if (t == 0 && nf > 1) continue;
        QVec gamma(big);
        gamma[nf] = 1;
        for (std::size_t a = 0; a < nf; ++a) gamma[a] += t * theta_alg[a];
        IntMatrix mg(big, big);
        for (std::size_t s = 0; s < big; ++s) {
            QVec e(big);
            e[s] = 1;
            QVec w = alg.mul(e, gamma);
            for (std::size_t c = 0; c < big; ++c) {
                if (w[c].get_den() != 1) throw Error(ErrorKind::InvalidInput, "non-integral multiplication");
                mg(s, c) = w[c].get_num();
            }
        }
        std::vector<std::vector<Integer>> powers{std::vector<Integer>(big)};
        powers[0][0] = 1;
        for (std::size_t d = 1; d <= big; ++d) powers.push_back(std::span<Integer const>(powers.back()) * mg);
        IntMatrix v = IntMatrix::from_rows({powers.begin(), powers.begin() + big}, big);
        if (FpMatrix(2305843009213693951ULL, v).rank() < big) continue;
        std::vector<QVec> vrows;
        for (std::size_t d = 0; d < big; ++d) vrows.push_back(to_qvec(powers[d]));
        /* coordinates over the powers of gamma */
        std::vector<QVec> want;
        for (std::size_t s = 0; s < big; ++s) {
            QVec e(big);
            e[s] = 1;
            want.push_back(e);
        }
        want.push_back(to_qvec(powers[big]));
        for (auto const & u : orbit_alg) want.push_back(u);
        for (auto const & u : conj_alg) want.push_back(u);
        auto coords = solve_combinations(vrows, want);
        std::vector<Integer> pc(big + 1);
        for (std::size_t d = 0; d < big; ++d) {
            if (coords[big][d].get_den() != 1) throw Error(ErrorKind::InvalidInput, "non-integral minimal polynomial");
            pc[d] = -coords[big][d].get_num();
        }
        pc[big] = 1;
        ZPoly poly(pc);

        Integer den = 1;
        std::size_t nseed = big + orbit_alg.size();
        for (std::size_t s = 0; s < nseed; ++s)
            for (auto const & x : coords[s < big ? s : s + 1]) den = lcm(den, x.get_den());
        IntMatrix seed(0, big);
        for (std::size_t s = 0; s < nseed; ++s) {
            std::vector<Integer> row(big);
            auto const & c = coords[s < big ? s : s + 1];
            for (std::size_t d = 0; d < big; ++d) {
                Rational x = c[d] * den;
                row[d] = x.get_num();
            }
            seed.append_row(row);
        }
        std::vector<Integer> tprimes{Integer(static_cast<unsigned long>(p))};
        if (opts.maximal) {
            for (auto const & q : f.ramified_primes()) tprimes.push_back(q);
            for (auto const & q : primes_of(Integer(static_cast<unsigned long>(layer.kernel.size())))) tprimes.push_back(q);
        }
        std::sort(tprimes.begin(), tprimes.end());
        tprimes.erase(std::unique(tprimes.begin(), tprimes.end()), tprimes.end());
        FieldPtr lf = NumberField::create_with_order(poly, {seed, den}, tprimes, false);

        auto to_layer = [&](QVec const & gamma_coords) {
            QPoly qp{std::vector<Rational>(gamma_coords.begin(), gamma_coords.end())};
            auto e = lf->to_elem(qp);
            if (!e) throw Error(ErrorKind::InvalidInput, "element is not integral in the layer");
            return *e;
        };
        /* omega_a X^0 for the base basis */
        layer.base_embedding = IntMatrix(nf, big);
        for (std::size_t a = 0; a < nf; ++a) {
            Elem e = to_layer(coords[a]);
            for (std::size_t c = 0; c < big; ++c) layer.base_embedding(a, c) = e[c];
        }
        layer.field = lf;
        layer.theta_image = layer.embed(th);
        if (!lf->is_zero(lf->evaluate(f.poly(), layer.theta_image)))
            throw Error(ErrorKind::InvalidInput, "base generator does not embed");
        Elem tpart = lf->scale(layer.theta_image, t);
        std::size_t off = big + 1 + orbit_alg.size();
        for (std::size_t c = 0; c < dd; ++c) {
            Elem img = lf->add(to_layer(coords[off + c]), tpart);
            if (!lf->is_zero(lf->evaluate(poly, img))) throw Error(ErrorKind::InvalidInput, "conjugate is not a root");
            std::uint64_t hc = gen_m.cosets[c];
            layer.gamma.push_back({lf->automorphism_from_image(img), hc, pow_mod(hc, i, m)});
        }
        return layer;
    }
}

LayerSPrimes layer_s_primes(Layer const & layer)
{
    LayerSPrimes out;
    out.primes = factor_rational_prime(layer.field, layer.p);
    for (auto const & below : factor_rational_prime(layer.base, layer.p)) {
        BasePrimeSplitting s;
        s.below = below;
        std::vector<Elem> gens;
        for (auto const & b : below.ideal.basis()) gens.push_back(layer.embed(b));
        for (auto const & q : out.primes) {
            bool inside = true;
            for (auto const & x : gens)
                if (!q.ideal.contains(x)) inside = false;
            if (inside) s.above.push_back(q);
        }
        if (s.above.empty()) throw Error(ErrorKind::InvalidInput, "no layer prime above a base prime");
        s.e = s.above[0].e / below.e;
        s.f = s.above[0].f / below.f;
        out.over_base.push_back(std::move(s));
    }
    return out;
}

std::uint64_t residue_extension_degree(Integer const & q, std::uint64_t p, unsigned n, unsigned long i)
{
    if (mpz_divisible_ui_p(q.get_mpz_t(), p)) throw Error(ErrorKind::InvalidInput, "q must be prime to p");
    std::uint64_t m = 1;
    for (unsigned k = 0; k < n; ++k) m *= p;
    if (m == 1) return 1;
    std::uint64_t qi = pow_mod(to_u64(floor_mod(q, Integer(static_cast<unsigned long>(m)))), i, m);
    return multiplicative_order(qi, m);
}

bool is_nonexceptional(FieldPtr const & field)
{
    /* the index of chi(G_F) mod 2^n is constant from the first n >= 3 where it repeats */
    std::size_t prev = 0;
    for (unsigned n = 3;; ++n) {
        auto img = char_image(field, 2, n);
        std::size_t index = (img.modulus / 2) / img.size();
        if (index == prev) return !img.contains(img.modulus - 1);
        prev = index;
        if (n > 40) throw Error(ErrorKind::EffortExceeded, "2-adic character image did not stabilize");
    }
}

Integer local_k_order(Integer const & q, unsigned long i) { return ipow(q, i) - 1; }

} // namespace kloc
