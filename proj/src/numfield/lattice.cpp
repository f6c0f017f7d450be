#include "kloc/numfield/lattice.hpp"

#include <cmath>

#include "kloc/error.hpp"

namespace kloc {

RealVectors gram(RealVectors const & v)
{
    std::size_t n = v.size();
    RealVectors g(n, std::vector<long double>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            long double s = 0;
            for (std::size_t k = 0; k < v[i].size(); ++k) s += v[i][k] * v[j][k];
            g[i][j] = g[j][i] = s;
        }
    return g;
}

IntMatrix lll_float(RealVectors & b)
{
    std::size_t n = b.size();
    IntMatrix t = IntMatrix::identity(n);
    if (n <= 1) return t;
    std::size_t m = b[0].size();
    auto dot = [&](std::vector<long double> const & x, std::vector<long double> const & y) {
        long double s = 0;
        for (std::size_t k = 0; k < m; ++k) s += x[k] * y[k];
        return s;
    };
    RealVectors bstar(n, std::vector<long double>(m));
    std::vector<long double> bn(n);
    RealVectors mu(n, std::vector<long double>(n, 0));
    auto gs_row = [&](std::size_t i) {
        bstar[i] = b[i];
        for (std::size_t j = 0; j < i; ++j) {
            mu[i][j] = bn[j] > 0 ? dot(b[i], bstar[j]) / bn[j] : 0;
            for (std::size_t k = 0; k < m; ++k) bstar[i][k] -= mu[i][j] * bstar[j][k];
        }
        bn[i] = dot(bstar[i], bstar[i]);
    };
    gs_row(0);
    std::size_t k = 1;
    gs_row(1);
    unsigned long guard = 0;
    while (k < n) {
        if (++guard > 1000000UL) throw Error(ErrorKind::PrecisionExhausted, "floating LLL did not terminate");
        for (std::size_t j = k; j-- > 0;) {
            long double q = std::nearbyint(mu[k][j]);
            if (q == 0) continue;
            for (std::size_t c = 0; c < m; ++c) b[k][c] -= q * b[j][c];
            t.add_row_multiple(k, j, Integer(static_cast<long>(-q)));
            for (std::size_t i = 0; i < j; ++i) mu[k][i] -= q * mu[j][i];
            mu[k][j] -= q;
        }
        gs_row(k);
        if (bn[k] < (0.99L - mu[k][k - 1] * mu[k][k - 1]) * bn[k - 1]) {
            std::swap(b[k], b[k - 1]);
            t.swap_rows(k, k - 1);
            gs_row(k - 1);
            gs_row(k);
            if (k > 1) --k;
        } else {
            ++k;
            if (k < n) gs_row(k);
        }
    }
    return t;
}

bool enumerate_short_vectors(RealVectors const & g, long double bound,
                             std::function<bool(std::vector<long> const &, long double)> const & visit, unsigned long max_nodes)
{
    std::size_t n = g.size();
    /* Cholesky in Cohen's q form: Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2 */
    RealVectors q = g;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] = q[i][j] / q[i][i];
        }
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!(q[i][i] > 0)) throw Error(ErrorKind::PrecisionExhausted, "Gram matrix not positive definite");
    long double const c = bound * (1 + 1e-12L) + 1e-12L;
    std::vector<long double> t(n), u(n), up(n);
    std::vector<long> x(n);
    std::size_t i = n - 1;
    t[i] = c;
    u[i] = 0;
    auto set_bounds = [&](std::size_t idx) {
        long double z = std::sqrt(std::max(t[idx] / q[idx][idx], 0.0L));
        up[idx] = std::floor(z - u[idx]);
        x[idx] = static_cast<long>(std::ceil(-z - u[idx])) - 1;
    };
    set_bounds(i);
    unsigned long nodes = 0;
    for (;;) {
        ++x[i];
        if (++nodes > max_nodes) return false;
        if (x[i] > up[i]) {
            if (i == n - 1) return true;
            ++i;
            continue;
        }
        if (i > 0) {
            long double d = x[i] + u[i];
            t[i - 1] = t[i] - q[i][i] * d * d;
            --i;
            long double s = 0;
            for (std::size_t j = i + 1; j < n; ++j) s += q[i][j] * x[j];
            u[i] = s;
            set_bounds(i);
            continue;
        }
        /* full vector; skip zero and keep one of each +-pair */
        bool zero = true;
        std::size_t last = n;
        for (std::size_t j = n; j-- > 0;)
            if (x[j] != 0) {
                zero = false;
                last = j;
                break;
            }
        if (zero) return true; /* enumeration reached the origin: all later vectors are negatives */
        (void)last;
        long double d = x[0] + u[0];
        long double val = c - t[0] + q[0][0] * d * d;
        if (!visit(x, val)) return false;
    }
}

IntMatrix lll_exact(IntMatrix const & basis)
{
    std::size_t n = basis.rows();
    std::vector<std::vector<Integer>> b(n + 1);
    for (std::size_t i = 0; i < n; ++i) b[i + 1] = basis.row_vector(i);
    if (n <= 1) return basis;
    std::size_t m = basis.cols();
    auto dot = [&](std::vector<Integer> const & x, std::vector<Integer> const & y) {
        Integer s = 0;
        for (std::size_t c = 0; c < m; ++c) s += x[c] * y[c];
        return s;
    };
    std::vector<Integer> d(n + 1);
    std::vector<std::vector<Integer>> lam(n + 1, std::vector<Integer>(n + 1));
    d[0] = 1;
    d[1] = dot(b[1], b[1]);
    std::size_t k = 2, kmax = 1;

    auto red = [&](std::size_t kk, std::size_t l) {
        Integer twice = 2 * lam[kk][l];
        if (abs(twice) <= d[l]) return;
        Integer q = round_div(lam[kk][l], d[l]);
        for (std::size_t c = 0; c < m; ++c) b[kk][c] -= q * b[l][c];
        lam[kk][l] -= q * d[l];
        for (std::size_t i = 1; i < l; ++i) lam[kk][i] -= q * lam[l][i];
    };
    auto swap = [&](std::size_t kk) {
        std::swap(b[kk], b[kk - 1]);
        for (std::size_t j = 1; j + 1 < kk; ++j) std::swap(lam[kk][j], lam[kk - 1][j]);
        Integer l = lam[kk][kk - 1];
        Integer bb = (d[kk - 2] * d[kk] + l * l) / d[kk - 1];
        for (std::size_t i = kk + 1; i <= kmax; ++i) {
            Integer t = lam[i][kk];
            lam[i][kk] = (d[kk] * lam[i][kk - 1] - l * t) / d[kk - 1];
            lam[i][kk - 1] = (bb * t + l * lam[i][kk]) / d[kk];
        }
        d[kk - 1] = bb;
    };

    while (k <= n) {
        if (k > kmax) {
            kmax = k;
            for (std::size_t j = 1; j <= k; ++j) {
                Integer u = dot(b[k], b[j]);
                for (std::size_t i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
                if (j < k)
                    lam[k][j] = u;
                else {
                    if (u == 0) throw Error(ErrorKind::InvalidInput, "lll_exact: dependent rows");
                    d[k] = u;
                }
            }
        }
        for (;;) {
            red(k, k - 1);
            if (100 * d[k] * d[k - 2] < 99 * d[k - 1] * d[k - 1] - 100 * lam[k][k - 1] * lam[k][k - 1]) {
                swap(k);
                if (k > 2) --k;
                continue;
            }
            break;
        }
        for (std::size_t l = k - 1; l-- > 1;) red(k, l);
        ++k;
    }
    IntMatrix out(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < m; ++c) out(i, c) = b[i + 1][c];
    return out;
}

} // namespace kloc
