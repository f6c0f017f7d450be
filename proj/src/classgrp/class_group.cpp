#include "kloc/classgrp/class_group.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "kloc/error.hpp"
#include "kloc/intlinalg/modular.hpp"
#include "kloc/numfield/lattice.hpp"
#include "kloc/numfield/poly_fp.hpp"

namespace kloc {

namespace {

std::string prime_key(PrimeIdealFactor const & p) { return p.p.get_str() + ":" + p.ideal.matrix().to_string(); }

/* T2-reduced Z-basis of an integral ideal, shortest first */
std::vector<Elem> reduced_basis(Ideal const & ideal)
{
    auto const & k = *ideal.field();
    std::size_t n = k.degree();
    auto const & emb = k.t2_embedding();
    /* scale by the norm^(1/n) so long doubles stay in range */
    long double scale = std::pow(static_cast<long double>(ideal.min_integer().get_d()), -1.0L);
    RealVectors vecs(n, std::vector<long double>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c) {
            long double s = 0;
            for (std::size_t j = 0; j <= i; ++j)
                if (ideal.matrix()(i, j) != 0) s += static_cast<long double>(ideal.matrix()(i, j).get_d()) * emb[j][c];
            vecs[i][c] = s * scale;
        }
    IntMatrix t = lll_float(vecs);
    IntMatrix red = t * ideal.matrix();
    std::vector<Elem> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(red.row_vector(i));
    return out;
}

struct Torsion {
    unsigned long w;
    Elem zeta;
};

Torsion torsion_units(NumberField const & k)
{
    std::size_t n = k.degree();
    if (k.signature().r1 > 0) return {2, k.from_integer(-1)};
    RealVectors vecs = k.t2_embedding();
    IntMatrix t = lll_float(vecs);
    IntMatrix red = t * IntMatrix::identity(n);
    RealVectors g = gram(vecs);
    unsigned long limit = 2 * n * n + 2;
    std::vector<std::pair<unsigned long, Elem>> found;
    enumerate_short_vectors(g, n + 0.5L, [&](std::vector<long> const & x, long double) {
        Elem a(n);
        for (std::size_t i = 0; i < n; ++i)
            if (x[i])
                for (std::size_t c = 0; c < n; ++c) a[c] += x[i] * red(i, c);
        if (abs(k.norm(a)) != 1) return true;
        Elem pw = a;
        for (unsigned long m = 1; m <= limit; ++m) {
            if (pw == k.one()) {
                found.emplace_back(m, a);
                break;
            }
            pw = k.mul(pw, a);
        }
        return true;
    });
    unsigned long w = 2 * found.size();
    for (auto const & [m, a] : found) {
        if (m == w) return {w, a};
        /* -a has order w when a has odd order w / 2 */
        if (2 * m == w && m % 2 == 1) return {w, k.scale(a, -1)};
    }
    return {2, k.from_integer(-1)};
}

} // namespace

std::vector<PrimeIdealFactor> primes_up_to_norm(FieldPtr const & field, Integer const & bound)
{
    std::vector<PrimeIdealFactor> out;
    if (bound < 2) return out;
    for (std::uint64_t q : primes_up_to(to_u64(bound)))
        for (auto & p : factor_rational_prime(field, q))
            if (ipow(Integer(q), p.f) <= bound) out.push_back(std::move(p));
    return out;
}

PrimeIdealFactor apply(FieldAutomorphism const & sigma, PrimeIdealFactor const & p)
{
    return {apply(sigma, p.ideal), p.p, p.e, p.f, sigma.apply(p.anti_uniformizer)};
}

std::optional<std::size_t> ClassGroup::fb_index(PrimeIdealFactor const & p) const
{
    for (std::size_t j = 0; j < fb_.size(); ++j)
        if (fb_[j].p == p.p && fb_[j].ideal == p.ideal) return j;
    return std::nullopt;
}

std::optional<std::vector<Integer>> ClassGroup::fb_valuations(Elem const & a, Integer const & extra_norm) const
{
    auto const & k = *field_;
    Integer nm = abs(k.norm(a));
    if (nm == 0 || !mpz_divisible_p(nm.get_mpz_t(), extra_norm.get_mpz_t())) return std::nullopt;
    nm /= extra_norm;
    std::vector<unsigned> eq(fb_rational_.size(), 0);
    for (std::size_t t = 0; t < fb_rational_.size() && nm != 1; ++t) {
        Integer const & q = fb_rational_[t];
        while (mpz_divisible_p(nm.get_mpz_t(), q.get_mpz_t())) {
            nm /= q;
            ++eq[t];
        }
    }
    if (nm != 1) return std::nullopt;
    std::vector<Integer> v(fb_.size(), 0);
    for (std::size_t t = 0; t < fb_rational_.size(); ++t) {
        if (!eq[t]) continue;
        unsigned long sum = 0;
        for (std::size_t j = 0; j < fb_.size(); ++j) {
            if (fb_[j].p != fb_rational_[t]) continue;
            long e = valuation(fb_[j], a);
            v[j] = e;
            sum += e * fb_[j].f;
        }
        if (sum != eq[t]) return std::nullopt;
    }
    return v;
}

std::optional<Relation> ClassGroup::smooth_element(Ideal const & ideal, Integer const & extra_norm, unsigned tries) const
{
    auto const & k = *field_;
    std::size_t n = k.degree();
    auto basis = reduced_basis(ideal);
    std::size_t m = std::min<std::size_t>(n, 6);
    std::uniform_int_distribution<int> coef(-2, 2);
    /* basis vectors first when hunting for a specific prime */
    unsigned first = extra_norm == 1 ? 0 : n;
    for (unsigned t = 0; t < tries; ++t) {
        ++spent_;
        Elem a;
        if (t < first) {
            a = basis[t];
        } else {
            a.assign(n, 0);
            for (std::size_t i = 0; i < m; ++i) {
                int c = coef(rng_);
                if (c)
                    for (std::size_t j = 0; j < n; ++j) a[j] += c * basis[i][j];
            }
            if (k.is_zero(a)) continue;
        }
        if (auto v = fb_valuations(a, extra_norm)) return Relation{a, std::move(*v)};
    }
    return std::nullopt;
}

std::vector<Integer> ClassGroup::prime_exponents(PrimeIdealFactor const & p) const
{
    if (auto j = fb_index(p)) {
        std::vector<Integer> e(fb_.size(), 0);
        e[*j] = 1;
        return e;
    }
    std::lock_guard<std::mutex> lock(mutex_);
    std::string key = prime_key(p);
    if (auto it = log_cache_.find(key); it != log_cache_.end()) return it->second;
    Integer np = ipow(p.p, p.f);
    auto found = [&](Relation const & rel) {
        std::vector<Integer> e(fb_.size());
        for (std::size_t j = 0; j < fb_.size(); ++j) e[j] = -rel.valuations[j];
        log_cache_[key] = e;
        cert_elements_.push_back(rel.element);
        return e;
    };
    if (auto it = cert_hints_.find(np); it != cert_hints_.end())
        for (auto const & h : it->second)
            if (p.ideal.contains(h))
                if (auto v = fb_valuations(h, np)) return found(Relation{h, std::move(*v)});
    std::uniform_int_distribution<std::size_t> pick(0, fb_.empty() ? 0 : fb_.size() - 1);
    for (unsigned long round = 0; spent_ < config_.max_candidates; ++round) {
        Ideal target = p.ideal;
        /* randomize with factor base primes after the first attempt */
        for (unsigned r = 0; r < std::min<unsigned long>(round, 3) && !fb_.empty(); ++r)
            target = ideal_mul(target, fb_[pick(rng_)].ideal);
        if (auto rel = smooth_element(target, np, 4 * field_->degree() + 20)) return found(*rel);
    }
    throw Error(ErrorKind::EffortExceeded, "no smooth element found for a prime above " + p.p.get_str());
}

std::vector<Elem> ClassGroup::certificate_elements() const
{
    std::lock_guard<std::mutex> lock(mutex_);
    return cert_elements_;
}

std::vector<Integer> ClassGroup::log_prime(PrimeIdealFactor const & p) const
{
    if (fb_.empty()) return {};
    return pres_.coordinates(prime_exponents(p));
}

std::vector<Integer> ClassGroup::discrete_log(Ideal const & a) const
{
    if (a.field() != field_ && !(a.field()->poly() == field_->poly()))
        throw Error(ErrorKind::FieldMismatch, "ideal from another field");
    if (!a.is_integral()) throw Error(ErrorKind::InvalidInput, "discrete_log needs an integral ideal");
    std::vector<Integer> acc(structure().rank(), 0);
    if (fb_.empty()) return acc;
    for (auto const & [p, v] : factor_ideal(a)) {
        auto l = log_prime(p);
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += v * l[j];
    }
    return structure().reduce(acc);
}

namespace {

/* Degree-one primes (q, theta - r) with q = 1 mod ell; each gives the character
 * x -> x^((q-1)/ell) with values read off in Z/ell. */
struct Character {
    std::uint64_t q;
    std::vector<std::uint64_t> basis_values; /* omega_i mod Q */
    std::unordered_map<std::uint64_t, std::uint64_t> dlog;

    std::uint64_t eval(Elem const & a, std::uint64_t ell) const
    {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            Integer r = floor_mod(a[i], Integer(static_cast<unsigned long>(q)));
            s = (s + mulmod(to_u64(r), basis_values[i], q)) % q;
        }
        if (s == 0) throw Error(ErrorKind::InvalidInput, "character prime divides an S-unit");
        auto it = dlog.find(powmod(s, (q - 1) / ell, q));
        return it->second;
    }
};

std::vector<Character> characters_at(NumberField const & k, std::uint64_t q, std::uint64_t ell)
{
    std::vector<Character> out;
    std::size_t n = k.degree();
    FpPoly fq(q, k.poly());
    std::vector<std::uint64_t> roots;
    for (auto const & [g, e] : factor(fq))
        if (g.degree() == 1) roots.push_back((q - g[0]) % q);
    if (roots.empty()) return out;
    /* element of order ell */
    std::uint64_t z = 0;
    for (std::uint64_t g = 2; g < q; ++g) {
        z = powmod(g, (q - 1) / ell, q);
        if (z != 1) break;
    }
    std::unordered_map<std::uint64_t, std::uint64_t> table;
    std::uint64_t acc = 1;
    for (std::uint64_t j = 0; j < ell; ++j) {
        table[acc] = j;
        acc = mulmod(acc, z, q);
    }
    Integer qq(static_cast<unsigned long>(q));
    std::uint64_t dinv = invmod(to_u64(floor_mod(k.basis_denominator(), qq)), q);
    for (auto r : roots) {
        Character c{q, std::vector<std::uint64_t>(n), table};
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t s = 0, pw = 1;
            for (std::size_t j = 0; j <= i; ++j) {
                std::uint64_t cij = to_u64(floor_mod(k.basis_numerators()(i, j), qq));
                s = (s + mulmod(cij, pw, q)) % q;
                pw = mulmod(pw, r, q);
            }
            c.basis_values[i] = mulmod(s, dinv, q);
        }
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace

namespace {

/* the image of the elements in U_S / U_S^ell has full dimension `need` */
bool saturated(NumberField const & k, std::vector<Elem> const & elems, std::size_t need, std::uint64_t ell,
               std::uint64_t lower)
{
    if (elems.size() < need) return false;
    std::vector<Character> chars;
    Integer bad = k.basis_denominator();
    std::uint64_t step = ell == 2 ? 2 : 2 * ell;
    std::uint64_t q = (lower / step + 1) * step + 1;
    std::size_t target = need + 8;
    for (unsigned long scanned = 0; chars.size() < 3 * need + 30; q += step) {
        if (!is_prime(q) || mpz_divisible_ui_p(bad.get_mpz_t(), q)) continue;
        if (++scanned > 20000) break;
        for (auto & c : characters_at(k, q, ell)) chars.push_back(std::move(c));
        if (chars.size() < target) continue;
        FpMatrix m(ell, elems.size(), chars.size());
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = 0; j < chars.size(); ++j) m(i, j) = chars[j].eval(elems[i], ell);
        std::size_t rk = m.rank();
        if (rk >= need) return true;
        /* a rank stuck below need after many characters means the elements are deficient */
        if (chars.size() >= 2 * need + 20) return false;
        target = chars.size() + 8;
    }
    return false;
}

} // namespace

ClassGroupPtr class_group(FieldPtr const & field, ClassGroupConfig const & config)
{
    auto const & k = *field;
    if (!k.is_maximal()) throw Error(ErrorKind::EffortExceeded, "maximal order not certified everywhere");
    if (k.degree() > config.max_degree) throw Error(ErrorKind::EffortExceeded, "degree above the configured cap");
    if (config.max_abs_disc != 0 && abs(k.discriminant()) > config.max_abs_disc)
        throw Error(ErrorKind::EffortExceeded, "discriminant above the configured cap");
    std::shared_ptr<ClassGroup> cl(new ClassGroup());
    cl->field_ = field;
    cl->config_ = config;
    cl->focus_ = config.focus;
    cl->rng_.seed(config.seed);
    std::size_t n = k.degree();
    auto tor = torsion_units(k);
    cl->w_ = tor.w;
    cl->zeta_ = tor.zeta;

    Rational mb = k.minkowski_bound();
    Integer mb_floor = mb.get_num() / mb.get_den();
    double logd = std::log(std::abs(k.discriminant().get_d()) + 1.0);
    Integer fb_bound = static_cast<long>(std::max(30.0, config.fb_scale * logd * logd));
    if (fb_bound > mb_floor) fb_bound = mb_floor;
    cl->fb_ = primes_up_to_norm(field, fb_bound);
    for (auto const & p : cl->fb_)
        if (cl->fb_rational_.empty() || cl->fb_rational_.back() != p.p) cl->fb_rational_.push_back(p.p);
    std::size_t kk = cl->fb_.size();
    if (kk == 0) {
        cl->relations_ = IntMatrix(0, 0);
        cl->pres_ = Presentation{FiniteAbelianGroup(), IntMatrix(0, 0), IntMatrix(0, 0)};
        return cl;
    }

    std::size_t r = k.unit_rank();
    std::vector<std::vector<Integer>> rows;
    std::uniform_int_distribution<std::size_t> pick(0, kk - 1);
    std::uniform_int_distribution<int> expo(1, 2);
    std::set<Elem> seen;
    auto add_relation = [&](Relation rel) {
        if (!seen.insert(rel.element).second || seen.count(k.scale(rel.element, -1))) return;
        rows.push_back(rel.valuations);
        cl->elements_.push_back(std::move(rel));
    };
    for (auto const & h : config.hints) {
        if (h.size() != n || k.is_zero(h)) continue;
        if (auto v = cl->fb_valuations(h, 1)) {
            add_relation({h, std::move(*v)});
            continue;
        }
        Integer rest = abs(k.norm(h));
        for (auto const & q : cl->fb_rational_)
            while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) rest /= q;
        cl->cert_hints_[rest].push_back(h);
    }
    /* short elements of O itself supply units */
    if (auto rel = cl->smooth_element(Ideal::unit(field), 1, 4 * n + 20)) add_relation(std::move(*rel));
    for (std::size_t j = 0; j < kk; ++j)
        for (int rep = 0; rep < 2; ++rep)
            if (auto rel = cl->smooth_element(cl->fb_[j].ideal, 1, 3 * n + 10)) add_relation(std::move(*rel));

    Integer last_h = 0;
    std::size_t batch = std::max<std::size_t>(10, kk / 4);
    for (;;) {
        if (cl->spent_ > config.max_candidates) throw Error(ErrorKind::EffortExceeded, "class group relation search");
        for (std::size_t att = 0; att < batch || rows.size() < kk; ++att) {
            if (cl->spent_ > config.max_candidates) throw Error(ErrorKind::EffortExceeded, "class group relation search");
            Ideal target = cl->fb_[pick(cl->rng_)].ideal;
            std::size_t extra = 1 + cl->rng_() % 3;
            for (std::size_t t = 0; t < extra; ++t)
                target = ideal_mul(target, ideal_pow(cl->fb_[pick(cl->rng_)].ideal, expo(cl->rng_)));
            if (auto rel = cl->smooth_element(target, 1, 2 * n + 8)) add_relation(std::move(*rel));
        }
        IntMatrix rel = IntMatrix::from_rows(rows, kk);
        Presentation pres;
        try {
            pres = present(kk, rel);
        } catch (Error const & e) {
            if (e.kind() != ErrorKind::InfiniteCokernel) throw;
            continue;
        }
        Integer h = pres.group.order();
        bool stable = h == last_h;
        last_h = h;
        if (!stable && h != 1) continue;
        std::vector<Integer> ells;
        bool ok = true;
        if (config.focus != 0) {
            if (mpz_divisible_p(h.get_mpz_t(), config.focus.get_mpz_t())) ells.push_back(config.focus);
        } else {
            try {
                for (auto const & [q, e] : factor_integer(h, 200000)) ells.push_back(q);
            } catch (Error const &) {
                ok = false;
            }
        }
        for (auto const & ell : ells)
            if (ell > 1000000) ok = false;
        if (ok) {
            std::vector<Elem> elems;
            for (auto const & e : cl->elements_) elems.push_back(e.element);
            for (auto const & ell : ells) {
                std::uint64_t l = to_u64(ell);
                std::vector<Elem> with = elems;
                std::size_t need = kk + r;
                if (cl->w_ % l == 0) {
                    with.push_back(cl->zeta_);
                    ++need;
                }
                if (!saturated(k, with, need, l, to_u64(fb_bound) + 1)) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        cl->relations_ = rel;
        cl->pres_ = std::move(pres);
        break;
    }

    /* every prime below the Minkowski bound is a combination of the factor base */
    if (fb_bound < mb_floor)
        for (auto const & p : primes_up_to_norm(field, mb_floor))
            if (!cl->fb_index(p)) cl->prime_exponents(p);
    return cl;
}

SClassGroup s_quotient(ClassGroupPtr const & cl, Integer const & p)
{
    SClassGroup s;
    s.base = cl;
    s.p = p;
    s.s_primes = factor_rational_prime(cl->field(), p);
    auto const & g = cl->structure();
    std::size_t rk = g.rank();
    std::vector<std::vector<Integer>> rows;
    for (std::size_t j = 0; j < rk; ++j) {
        std::vector<Integer> row(rk, 0);
        row[j] = g.invariants()[j];
        rows.push_back(row);
    }
    for (auto const & q : s.s_primes) rows.push_back(cl->log_prime(q));
    if (rk == 0) {
        s.quotient = Presentation{FiniteAbelianGroup(), IntMatrix(0, 0), IntMatrix(0, 0)};
        return s;
    }
    s.quotient = present(rk, IntMatrix::from_rows(rows, rk));
    return s;
}

IntMatrix galois_action_on_classes(ClassGroup const & cl, FieldAutomorphism const & sigma)
{
    auto const & g = cl.structure();
    std::size_t rk = g.rank();
    auto const & gens = cl.generators();
    std::vector<std::vector<Integer>> images;
    for (auto const & p : gens) images.push_back(cl.log_prime(apply(sigma, p)));
    IntMatrix act(rk, rk);
    auto const & from = cl.presentation().from_group;
    for (std::size_t j = 0; j < rk; ++j) {
        std::vector<Integer> col(rk, 0);
        for (std::size_t t = 0; t < gens.size(); ++t) {
            if (from(j, t) == 0) continue;
            for (std::size_t i = 0; i < rk; ++i) col[i] += from(j, t) * images[t][i];
        }
        col = g.reduce(col);
        for (std::size_t i = 0; i < rk; ++i) act(i, j) = col[i];
    }
    return act;
}

} // namespace kloc
