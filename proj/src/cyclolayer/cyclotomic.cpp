#include "kloc/cyclolayer/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kloc/error.hpp"

namespace kloc {

CycloRing::CycloRing(std::uint64_t p, unsigned n) : p_(p)
{
    if (n == 0) throw Error(ErrorKind::InvalidInput, "cyclotomic level must be positive");
    m_ = 1;
    for (unsigned k = 0; k < n; ++k) m_ *= p;
    phi_ = m_ / p * (p - 1);
}

CycloRing::Elt CycloRing::constant(Integer const & c) const
{
    Elt r(m_);
    r[0] = c;
    return r;
}

CycloRing::Elt CycloRing::zeta_power(std::uint64_t j) const
{
    Elt r(m_);
    r[j % m_] = 1;
    return r;
}

CycloRing::Elt CycloRing::add(Elt const & a, Elt const & b) const
{
    Elt r = a;
    for (std::size_t j = 0; j < m_; ++j) r[j] += b[j];
    return r;
}

CycloRing::Elt CycloRing::sub(Elt const & a, Elt const & b) const
{
    Elt r = a;
    for (std::size_t j = 0; j < m_; ++j) r[j] -= b[j];
    return r;
}

CycloRing::Elt CycloRing::mul(Elt const & a, Elt const & b) const
{
    Elt r(m_);
    for (std::size_t i = 0; i < m_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < m_; ++j)
            if (b[j] != 0) r[(i + j) % m_] += a[i] * b[j];
    }
    /* keep entries small */
    auto red = reduce(r);
    Elt out(m_);
    std::copy(red.begin(), red.end(), out.begin());
    return out;
}

CycloRing::Elt CycloRing::sigma(Elt const & x, std::uint64_t a) const
{
    Elt r(m_);
    for (std::size_t j = 0; j < m_; ++j)
        if (x[j] != 0) r[(j * a) % m_] += x[j];
    return r;
}

std::vector<Integer> CycloRing::reduce(Elt const & x) const
{
    /* zeta^(phi + e) = -sum_{k < p-1} zeta^(e + k q), q = m / p */
    std::uint64_t q = m_ / p_;
    Elt c = x;
    for (std::uint64_t e = m_; e-- > phi_;) {
        if (c[e] == 0) continue;
        for (std::uint64_t k = 0; k + 1 < p_; ++k) c[e - phi_ + k * q] -= c[e];
        c[e] = 0;
    }
    return std::vector<Integer>(c.begin(), c.begin() + phi_);
}

bool CycloRing::is_rational(Elt const & x, Integer & value) const
{
    auto r = reduce(x);
    for (std::size_t j = 1; j < r.size(); ++j)
        if (r[j] != 0) return false;
    value = r[0];
    return true;
}

CycloRing::Elt orbit_sum(CycloRing const & z, std::vector<std::uint64_t> const & subgroup, std::uint64_t j)
{
    CycloRing::Elt r = z.zero();
    for (auto h : subgroup) r[(j * h) % z.modulus()] += 1;
    return r;
}

namespace {

bool distinct(CycloRing const & z, std::vector<CycloRing::Elt> const & xs)
{
    std::set<std::vector<Integer>> seen;
    for (auto const & x : xs)
        if (!seen.insert(z.reduce(x)).second) return false;
    return true;
}

} // namespace

SubfieldGenerator subfield_generator(CycloRing const & z, std::vector<std::uint64_t> const & sub,
                                     std::vector<std::uint64_t> const & super)
{
    std::uint64_t m = z.modulus();
    SubfieldGenerator g;
    std::set<std::uint64_t> covered;
    std::vector<std::uint64_t> sorted = super;
    std::sort(sorted.begin(), sorted.end());
    for (auto b : sorted) {
        if (covered.count(b)) continue;
        g.cosets.push_back(b);
        for (auto h : sub) covered.insert(b * h % m);
    }
    auto conj_of = [&](CycloRing::Elt const & x) {
        std::vector<CycloRing::Elt> out;
        for (auto b : g.cosets) out.push_back(z.sigma(x, b));
        return out;
    };
    CycloRing::Elt cand = orbit_sum(z, sub, 1);
    auto conj = conj_of(cand);
    for (long c = 1; !distinct(z, conj); ++c) {
        if (c > 40) throw Error(ErrorKind::InvalidInput, "no generator found for a cyclotomic subfield");
        cand = z.constant(1);
        for (auto h : sub) cand = z.mul(cand, z.sub(z.constant(c), z.zeta_power(h)));
        conj = conj_of(cand);
    }
    g.element = cand;
    g.conjugates = std::move(conj);
    return g;
}

std::vector<CycloRing::Elt> conjugate_polynomial(CycloRing const & z, std::vector<CycloRing::Elt> const & conjugates)
{
    std::vector<CycloRing::Elt> poly{z.constant(1)};
    for (auto const & c : conjugates) {
        std::vector<CycloRing::Elt> next(poly.size() + 1, z.zero());
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = z.add(next[k + 1], poly[k]);
            next[k] = z.sub(next[k], z.mul(poly[k], c));
        }
        poly = std::move(next);
    }
    return poly;
}

std::vector<std::uint64_t> unit_group(std::uint64_t m)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = 1; a < m; ++a)
        if (std::gcd(a, m) == 1) out.push_back(a);
    if (m <= 2) out = {1 % m};
    return out;
}

std::vector<std::uint64_t> generated_subgroup(std::vector<std::uint64_t> const & gens, std::uint64_t m)
{
    std::set<std::uint64_t> h{1 % m};
    std::vector<std::uint64_t> frontier{1 % m};
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (auto x : frontier)
            for (auto g : gens) {
                std::uint64_t y = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * (g % m)) % m);
                if (h.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {h.begin(), h.end()};
}

} // namespace kloc
