#pragma once
/* Enumeration oracles for small finite abelian groups. Elements are vectors
 * of longs, encoded in mixed radix for set membership. */

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace brute {

using Vec = std::vector<long>;
using Mat = std::vector<std::vector<long>>; /* column j = image of e_j */

inline long md(long a, long m) { return ((a % m) + m) % m; }

struct Group {
    std::vector<long> d;
    long size() const
    {
        long s = 1;
        for (long x : d) s *= x;
        return s;
    }
    long encode(Vec const & v) const
    {
        long c = 0;
        for (std::size_t j = 0; j < d.size(); ++j) c = c * d[j] + md(v[j], d[j]);
        return c;
    }
    Vec decode(long c) const
    {
        Vec v(d.size());
        for (std::size_t j = d.size(); j-- > 0;) {
            v[j] = c % d[j];
            c /= d[j];
        }
        return v;
    }
    Vec add(Vec const & a, Vec const & b) const
    {
        Vec r(d.size());
        for (std::size_t j = 0; j < d.size(); ++j) r[j] = md(a[j] + b[j], d[j]);
        return r;
    }
    Vec scale(Vec const & a, long k) const
    {
        Vec r(d.size());
        for (std::size_t j = 0; j < d.size(); ++j) r[j] = md(a[j] * k, d[j]);
        return r;
    }
    Vec apply(Mat const & m, Vec const & x) const
    {
        Vec r(d.size(), 0);
        for (std::size_t i = 0; i < d.size(); ++i) {
            long s = 0;
            for (std::size_t j = 0; j < d.size(); ++j) s = md(s + m[i][j] * x[j], d[i]);
            r[i] = s;
        }
        return r;
    }
};

/* subgroup generated by gens: membership table over encoded elements */
inline std::vector<char> span(Group const & g, std::vector<Vec> const & gens)
{
    std::vector<char> in(g.size(), 0);
    std::vector<long> frontier{0};
    in[0] = 1;
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long c : frontier) {
            Vec v = g.decode(c);
            for (auto const & s : gens) {
                long e = g.encode(g.add(v, s));
                if (!in[e]) {
                    in[e] = 1;
                    next.push_back(e);
                }
            }
        }
        frontier.swap(next);
    }
    return in;
}

inline long count(std::vector<char> const & s)
{
    long c = 0;
    for (char x : s) c += x;
    return c;
}

/* Invariant factors of the p-group g / <gens>, from the sizes |p^k Q|. */
inline std::vector<long> quotient_invariants(Group const & g, std::vector<Vec> const & gens, long p)
{
    long r_size = count(span(g, gens));
    std::vector<long> sizes; /* |p^k Q| */
    long pk = 1;
    for (;;) {
        std::vector<Vec> sub = gens;
        for (std::size_t j = 0; j < g.d.size(); ++j) {
            Vec e(g.d.size(), 0);
            e[j] = 1;
            sub.push_back(g.scale(e, pk));
        }
        long s = count(span(g, sub)) / r_size;
        sizes.push_back(s);
        if (s == 1) break;
        pk *= p;
    }
    /* at_least[k] = number of cyclic factors of order >= p^{k+1} */
    std::vector<long> out;
    std::vector<long> at_least(sizes.size(), 0);
    for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
        long ratio = sizes[k] / sizes[k + 1];
        long c = 0;
        while (ratio > 1) {
            ratio /= p;
            ++c;
        }
        at_least[k] = c;
    }
    for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
        long exactly = at_least[k] - (k + 2 < sizes.size() ? at_least[k + 1] : 0);
        long ord = 1;
        for (std::size_t t = 0; t <= k; ++t) ord *= p;
        for (long t = 0; t < exactly; ++t) out.push_back(ord);
    }
    return out;
}

/* (A / p^n A) / < kappa_a * g_a(x) - x > by enumeration */
inline std::vector<long> coinvariants(std::vector<long> const & d, std::vector<Mat> const & acts, std::vector<long> const & kappa, long p, int n)
{
    long pn = 1;
    for (int t = 0; t < n; ++t) pn *= p;
    Group a{d};
    std::vector<long> dq;
    for (long x : d) dq.push_back(x < pn ? x : pn);
    Group q{dq};
    std::vector<Vec> rel;
    for (std::size_t k = 0; k < acts.size(); ++k) {
        for (long c = 0; c < a.size(); ++c) {
            Vec x = a.decode(c);
            Vec y = a.scale(a.apply(acts[k], x), kappa[k]);
            Vec r(d.size());
            for (std::size_t j = 0; j < d.size(); ++j) r[j] = md(y[j] - x[j], dq[j]);
            rel.push_back(r);
        }
    }
    return quotient_invariants(q, rel, p);
}

/* random automorphism of Z/d_1 + ... (a valid homomorphism that is bijective) */
inline Mat random_automorphism(std::vector<long> const & d, std::mt19937_64 & rng)
{
    Group g{d};
    std::size_t k = d.size();
    for (;;) {
        Mat m(k, std::vector<long>(k, 0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                /* image of e_j in coordinate i must be killed by d_j */
                long step = d[i] / std::gcd(d[i], d[j]);
                long choices = d[i] / step;
                m[i][j] = step * static_cast<long>(rng() % choices);
            }
        std::vector<char> seen(g.size(), 0);
        bool ok = true;
        for (long c = 0; c < g.size() && ok; ++c) {
            long e = g.encode(g.apply(m, g.decode(c)));
            if (seen[e]) ok = false;
            seen[e] = 1;
        }
        if (ok) return m;
    }
}

inline Mat compose(Group const & g, Mat const & a, Mat const & b)
{
    std::size_t k = g.d.size();
    Mat r(k, std::vector<long>(k, 0));
    for (std::size_t j = 0; j < k; ++j) {
        Vec e(k, 0);
        e[j] = 1;
        Vec img = g.apply(a, g.apply(b, e));
        for (std::size_t i = 0; i < k; ++i) r[i][j] = img[i];
    }
    return r;
}

} // namespace brute
