#include "kloc/intlinalg/modular.hpp"

#include "kloc/error.hpp"

namespace kloc {

FpMatrix::FpMatrix(std::uint64_t p, IntMatrix const & m) : p_(p), rows_(m.rows()), cols_(m.cols()), data_(m.rows() * m.cols())
{
    Integer mod(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = floor_mod(m(i, j), mod).get_ui();
}

std::vector<std::size_t> FpMatrix::row_reduce()
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && (*this)(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(r, j), (*this)(piv, j));
        std::uint64_t inv = invmod((*this)(r, c), p_);
        for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = mulmod((*this)(r, j), inv, p_);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || (*this)(i, c) == 0) continue;
            std::uint64_t f = (*this)(i, c);
            for (std::size_t j = c; j < cols_; ++j) {
                std::uint64_t sub = mulmod(f, (*this)(r, j), p_);
                std::uint64_t & x = (*this)(i, j);
                x = x >= sub ? x - sub : x + p_ - sub;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t FpMatrix::rank() const
{
    FpMatrix t = *this;
    return t.row_reduce().size();
}

std::vector<std::vector<std::uint64_t>> FpMatrix::right_kernel() const
{
    FpMatrix t = *this;
    std::vector<std::size_t> piv = t.row_reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint64_t> x(cols_, 0);
        x[free] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) {
            std::uint64_t v = t(k, free);
            x[piv[k]] = v ? p_ - v : 0;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<std::vector<std::uint64_t>> FpMatrix::left_kernel() const
{
    FpMatrix tr(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) tr(j, i) = (*this)(i, j);
    return tr.right_kernel();
}

std::vector<std::size_t> FpMatrix::independent_rows() const
{
    /* incremental elimination against the rows accepted so far */
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<std::size_t> lead;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < rows_; ++i) {
        std::vector<std::uint64_t> v(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            std::uint64_t f = v[lead[b]];
            if (!f) continue;
            for (std::size_t j = 0; j < cols_; ++j) {
                std::uint64_t sub = mulmod(f, basis[b][j], p_);
                v[j] = v[j] >= sub ? v[j] - sub : v[j] + p_ - sub;
            }
        }
        std::size_t l = 0;
        while (l < cols_ && v[l] == 0) ++l;
        if (l == cols_) continue;
        std::uint64_t inv = invmod(v[l], p_);
        for (auto & x : v) x = mulmod(x, inv, p_);
        basis.push_back(std::move(v));
        lead.push_back(l);
        chosen.push_back(i);
    }
    return chosen;
}

} // namespace kloc
