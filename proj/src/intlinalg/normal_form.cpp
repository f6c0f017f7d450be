#include "kloc/intlinalg/normal_form.hpp"

#include <algorithm>

#include "kloc/error.hpp"

namespace kloc {

namespace {

/* Replace rows (r, i) of a by a unimodular combination so that a(i, c) = 0
 * and a(r, c) = gcd of the old pair. */
void gcd_combine_rows(IntMatrix & a, std::size_t r, std::size_t i, std::size_t c)
{
    Integer s, t;
    Integer g = xgcd(a(r, c), a(i, c), s, t);
    Integer x = a(r, c) / g;
    Integer y = a(i, c) / g;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        Integer ar = a(r, j);
        Integer ai = a(i, j);
        a(r, j) = s * ar + t * ai;
        a(i, j) = x * ai - y * ar;
    }
}

} // namespace

IntMatrix hnf(IntMatrix const & m)
{
    IntMatrix a = m;
    std::size_t const nr = a.rows(), nc = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        /* bring the smallest nonzero entry to the pivot row first */
        std::size_t best = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (a(i, c) != 0 && (best == nr || abs(a(i, c)) < abs(a(best, c)))) best = i;
        if (best == nr) continue;
        a.swap_rows(r, best);
        for (std::size_t i = r + 1; i < nr; ++i) {
            if (a(i, c) == 0) continue;
            if (mpz_divisible_p(a(i, c).get_mpz_t(), a(r, c).get_mpz_t())) {
                a.add_row_multiple(i, r, Integer(-(a(i, c) / a(r, c))));
            } else {
                gcd_combine_rows(a, r, i, c);
            }
        }
        if (a(r, c) < 0) a.negate_row(r);
        for (std::size_t k = 0; k < r; ++k) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a(k, c).get_mpz_t(), a(r, c).get_mpz_t());
            a.add_row_multiple(k, r, Integer(-q));
        }
        ++r;
    }
    return a.submatrix(0, 0, r, nc);
}

IntMatrix hnf_modulo(IntMatrix const & m, Integer const & d)
{
    std::size_t const k = m.cols();
    if (d <= 0) throw Error(ErrorKind::InvalidInput, "hnf_modulo: modulus must be positive");
    Integer modulus = d;
    std::vector<std::vector<Integer>> work;
    work.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Integer> v(k);
        bool nz = false;
        for (std::size_t j = 0; j < k; ++j) {
            v[j] = floor_mod(m(i, j), modulus);
            nz = nz || v[j] != 0;
        }
        if (nz) work.push_back(std::move(v));
    }
    IntMatrix h(k, k);
    std::vector<Integer> pivot(k);
    for (std::size_t j = 0; j < k; ++j) {
        std::fill(pivot.begin(), pivot.end(), Integer(0));
        pivot[j] = modulus;
        for (auto & w : work) {
            w[j] = floor_mod(w[j], modulus);
            if (w[j] == 0) continue;
            Integer s, t;
            Integer g = xgcd(pivot[j], w[j], s, t);
            Integer x = pivot[j] / g;
            Integer y = w[j] / g;
            for (std::size_t l = j + 1; l < k; ++l) {
                Integer pl = pivot[l];
                Integer wl = w[l];
                pivot[l] = floor_mod(Integer(s * pl + t * wl), modulus);
                w[l] = floor_mod(Integer(x * wl - y * pl), modulus);
            }
            pivot[j] = g;
            w[j] = 0;
        }
        for (std::size_t l = 0; l < k; ++l) h(j, l) = pivot[l];
        /* rows whose remaining part vanished carry no information */
        std::erase_if(work, [&](std::vector<Integer> & w) {
            for (std::size_t l = j + 1; l < k; ++l) {
                w[l] = floor_mod(w[l], modulus);
                if (w[l] != 0) return false;
            }
            return true;
        });
    }
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(j, j).get_mpz_t());
            h.add_row_multiple(i, j, Integer(-q));
        }
    }
    return h;
}

namespace {

IntMatrix reverse_columns(IntMatrix const & m)
{
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, m.cols() - 1 - j);
    return r;
}

IntMatrix reverse_both(IntMatrix const & h)
{
    std::size_t n = h.cols();
    if (h.rows() != n) throw Error(ErrorKind::InvalidInput, "lattice is not of full rank");
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = h(n - 1 - i, n - 1 - j);
    return b;
}

} // namespace

IntMatrix hnf_lower(IntMatrix const & m) { return reverse_both(hnf(reverse_columns(m))); }

IntMatrix hnf_lower_modulo(IntMatrix const & m, Integer const & d) { return reverse_both(hnf_modulo(reverse_columns(m), d)); }

SmithForm snf(IntMatrix const & m)
{
    std::size_t const nr = m.rows(), nc = m.cols();
    SmithForm out{IntMatrix::identity(nr), m, IntMatrix::identity(nc), IntMatrix::identity(nc)};
    IntMatrix & a = out.d;
    IntMatrix & u = out.u;
    IntMatrix & v = out.v;
    IntMatrix & vi = out.v_inverse;

    auto move_min_to = [&](std::size_t t) -> bool {
        std::size_t bi = nr, bj = nc;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j)
                if (a(i, j) != 0 && (bi == nr || abs(a(i, j)) < abs(a(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
        if (bi == nr) return false;
        a.swap_rows(t, bi);
        u.swap_rows(t, bi);
        a.swap_cols(t, bj);
        v.swap_cols(t, bj);
        vi.swap_rows(t, bj);
        return true;
    };

    for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
        if (!move_min_to(t)) break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (a(i, t) == 0) continue;
                Integer q = round_div(a(i, t), a(t, t));
                a.add_row_multiple(i, t, Integer(-q));
                u.add_row_multiple(i, t, Integer(-q));
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (a(t, j) == 0) continue;
                Integer q = round_div(a(t, j), a(t, t));
                a.add_col_multiple(j, t, Integer(-q));
                v.add_col_multiple(j, t, Integer(-q));
                vi.add_row_multiple(t, j, q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) {
                /* a smaller remainder appeared in row or column t; make it the pivot */
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < nr; ++i)
                    if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < nc; ++j)
                    if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) {
                        bi = t;
                        bj = j;
                    }
                a.swap_rows(t, bi);
                u.swap_rows(t, bi);
                a.swap_cols(t, bj);
                v.swap_cols(t, bj);
                vi.swap_rows(t, bj);
                continue;
            }
            /* divisibility condition on the remaining block */
            std::size_t bad = nr;
            for (std::size_t i = t + 1; i < nr && bad == nr; ++i)
                for (std::size_t j = t + 1; j < nc; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == nr) break;
            a.add_row_multiple(t, bad, Integer(1));
            u.add_row_multiple(t, bad, Integer(1));
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    return out;
}

std::vector<Integer> elementary_divisors(IntMatrix const & m)
{
    SmithForm s = snf(m);
    std::vector<Integer> d(std::min(m.rows(), m.cols()));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = s.d(i, i);
    return d;
}

} // namespace kloc
