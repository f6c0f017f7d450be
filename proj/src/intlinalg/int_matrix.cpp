#include "kloc/intlinalg/int_matrix.hpp"

#include <cassert>
#include <ostream>
#include <sstream>

#include "kloc/error.hpp"

namespace kloc {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init)
{
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (auto const & r : init) {
        if (r.size() != cols_) throw Error(ErrorKind::InvalidInput, "ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<Integer>> const & rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorKind::InvalidInput, "row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Integer> IntMatrix::column_vector(std::size_t j) const
{
    std::vector<Integer> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

void IntMatrix::append_row(std::span<Integer const> r)
{
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw Error(ErrorKind::InvalidInput, "append_row: length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) mpz_swap((*this)(a, j).get_mpz_t(), (*this)(b, j).get_mpz_t());
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) mpz_swap((*this)(i, a).get_mpz_t(), (*this)(i, b).get_mpz_t());
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, Integer const & k)
{
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) mpz_addmul((*this)(a, j).get_mpz_t(), k.get_mpz_t(), (*this)(b, j).get_mpz_t());
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, Integer const & k)
{
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) mpz_addmul((*this)(i, a).get_mpz_t(), k.get_mpz_t(), (*this)(i, b).get_mpz_t());
}

void IntMatrix::negate_row(std::size_t a)
{
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
}

void IntMatrix::negate_col(std::size_t a)
{
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    IntMatrix s(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
    return s;
}

bool IntMatrix::is_zero() const
{
    for (auto const & x : data_)
        if (x != 0) return false;
    return true;
}

Integer IntMatrix::determinant() const
{
    if (rows_ != cols_) throw Error(ErrorKind::InvalidInput, "determinant of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t IntMatrix::rank() const
{
    IntMatrix a = *this;
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && a(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        a.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < rows_; ++i) {
            for (std::size_t j = c + 1; j < cols_; ++j) {
                Integer t = a(i, j) * a(r, c) - a(i, c) * a(r, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

IntMatrix operator*(IntMatrix const & a, IntMatrix const & b)
{
    if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidInput, "matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                mpz_addmul(c(i, j).get_mpz_t(), a(i, k).get_mpz_t(), b(k, j).get_mpz_t());
        }
    return c;
}

IntMatrix operator+(IntMatrix const & a, IntMatrix const & b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::InvalidInput, "matrix sum shape mismatch");
    IntMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

IntMatrix operator-(IntMatrix const & a, IntMatrix const & b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::InvalidInput, "matrix difference shape mismatch");
    IntMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
    return c;
}

std::vector<Integer> operator*(std::span<Integer const> v, IntMatrix const & m)
{
    if (v.size() != m.rows()) throw Error(ErrorKind::InvalidInput, "vector-matrix shape mismatch");
    std::vector<Integer> out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_addmul(out[j].get_mpz_t(), v[i].get_mpz_t(), m(i, j).get_mpz_t());
    }
    return out;
}

std::ostream & operator<<(std::ostream & os, IntMatrix const & m)
{
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << "]";
    }
    return os << "]";
}

} // namespace kloc
