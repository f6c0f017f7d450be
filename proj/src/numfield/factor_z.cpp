#include "kloc/numfield/factor_z.hpp"

#include <algorithm>
#include <set>

#include "kloc/error.hpp"
#include "kloc/numfield/poly_fp.hpp"

namespace kloc {

namespace {

ZPoly reduce_mod(ZPoly const & f, Integer const & m)
{
    std::vector<Integer> c;
    for (auto const & a : f.coeffs()) c.push_back(floor_mod(a, m));
    return ZPoly(std::move(c));
}

ZPoly symmetric_mod(ZPoly const & f, Integer const & m)
{
    Integer half = m / 2;
    std::vector<Integer> c;
    for (auto const & a : f.coeffs()) {
        Integer r = floor_mod(a, m);
        if (r > half) r -= m;
        c.push_back(r);
    }
    return ZPoly(std::move(c));
}

/* T = G H mod p^k from t = g h mod p, g monic and coprime to h */
void lift_pair(ZPoly const & t, FpPoly const & g, FpPoly const & h, std::uint64_t p, unsigned k, ZPoly & G, ZPoly & H)
{
    FpPoly s, u;
    xgcd(g, h, s, u); /* s g + u h = 1 */
    Integer pz(static_cast<unsigned long>(p));
    G = g.lift();
    H = h.lift();
    Integer pj = pz;
    for (unsigned j = 1; j < k; ++j) {
        Integer pj1 = pj * pz;
        ZPoly diff = reduce_mod(t - G * H, pj1);
        std::vector<Integer> ec;
        for (auto const & a : diff.coeffs()) ec.push_back(a / pj);
        FpPoly e(p, ZPoly(std::move(ec)));
        FpPoly q, r;
        divmod(u * e, g, q, r);
        FpPoly dh = s * e + q * h;
        G = reduce_mod(G + pj * r.lift(), pj1);
        H = reduce_mod(H + pj * dh.lift(), pj1);
        pj = pj1;
    }
}

std::vector<ZPoly> zassenhaus(ZPoly const & f)
{
    int n = f.degree();
    if (n <= 1) return {f};
    Integer lc = f.lead();
    Integer fd = discriminant(f);

    /* pick the prime with fewest modular factors among a few good ones */
    std::uint64_t best_p = 0;
    std::vector<std::pair<FpPoly, unsigned>> best;
    std::set<int> possible;
    for (int d = 0; d <= n; ++d) possible.insert(d);
    int good = 0;
    for (std::uint64_t p = 3; good < 8 && p < 100000; p = next_prime(p + 1)) {
        Integer pz(static_cast<unsigned long>(p));
        if (mpz_divisible_p(lc.get_mpz_t(), pz.get_mpz_t()) || mpz_divisible_p(fd.get_mpz_t(), pz.get_mpz_t())) continue;
        FpPoly fp(p, f);
        auto fac = factor(fp, p);
        ++good;
        std::set<int> sums{0};
        for (auto const & [g, m] : fac) {
            std::set<int> next = sums;
            for (int s : sums) next.insert(s + g.degree());
            sums.swap(next);
        }
        std::set<int> both;
        std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(), std::inserter(both, both.begin()));
        possible.swap(both);
        if (best_p == 0 || fac.size() < best.size()) {
            best_p = p;
            best = std::move(fac);
        }
        if (possible.size() <= 2) return {f};
    }
    if (best.size() == 1) return {f};

    /* Mignotte-type bound on factor coefficients */
    Integer norm2 = 0;
    for (auto const & a : f.coeffs()) norm2 += a * a;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    Integer bound = (root + 1) * ipow(2, static_cast<unsigned long>(n)) * abs(lc) * 2;
    Integer pz(static_cast<unsigned long>(best_p));
    unsigned k = 1;
    Integer pk = pz;
    while (pk <= bound) {
        pk *= pz;
        ++k;
    }

    /* monic target f / lc mod p^k */
    Integer lcinv;
    mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
    ZPoly target = reduce_mod(lcinv * f, pk);
    std::vector<ZPoly> lifted;
    for (std::size_t i = 0; i + 1 < best.size(); ++i) {
        FpPoly g = best[i].first;
        FpPoly h = FpPoly::constant(best_p, 1);
        for (std::size_t j = i + 1; j < best.size(); ++j) h = h * best[j].first;
        ZPoly G, H;
        lift_pair(target, g, h, best_p, k, G, H);
        lifted.push_back(G);
        target = H;
    }
    lifted.push_back(target);

    std::vector<ZPoly> out;
    ZPoly rest = f;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            ZPoly g = ZPoly::constant(rest.lead());
            for (std::size_t i : idx) g = reduce_mod(g * lifted[i], pk);
            g = primitive_part(symmetric_mod(g, pk));
            ZPoly q;
            if (divides(g, rest, q)) {
                out.push_back(g);
                rest = q;
                for (std::size_t i = s; i-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[i]));
                found = true;
                break;
            }
            /* next combination */
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == lifted.size() - s + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (rest.degree() > 0) out.push_back(primitive_part(rest));
    return out;
}

} // namespace

std::vector<std::pair<ZPoly, unsigned>> factor_over_z(ZPoly const & f0)
{
    if (f0.degree() < 1) throw Error(ErrorKind::DegreeZero, "factoring a constant");
    ZPoly f = primitive_part(f0);
    /* Yun squarefree decomposition over Q */
    std::vector<std::pair<ZPoly, unsigned>> parts;
    QPoly a = to_q(f);
    QPoly b = gcd(a, a.derivative());
    QPoly c = a / b;
    QPoly d = a.derivative() / b - c.derivative();
    unsigned i = 1;
    while (c.degree() > 0) {
        QPoly g = gcd(c, d);
        if (g.degree() > 0) parts.push_back({primitive_part(g), i});
        c = c / g;
        d = d / g - c.derivative();
        ++i;
    }
    std::vector<std::pair<ZPoly, unsigned>> out;
    for (auto const & [part, m] : parts)
        for (auto & g : zassenhaus(part)) out.push_back({g, m});
    return out;
}

bool is_irreducible(ZPoly const & f)
{
    if (f.degree() < 1) return false;
    auto fac = factor_over_z(f);
    return fac.size() == 1 && fac[0].second == 1;
}

} // namespace kloc
