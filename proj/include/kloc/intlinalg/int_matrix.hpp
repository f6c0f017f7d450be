#ifndef KLOC_INTLINALG_INT_MATRIX_HPP
#define KLOC_INTLINALG_INT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "kloc/integer.hpp"

namespace kloc {

/* Dense matrix of arbitrary-precision integers, row-major. */
class IntMatrix {
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;

  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> init);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::vector<std::vector<Integer>> const & rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer & operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Integer const & operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<Integer const> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<Integer> row_vector(std::size_t i) const { return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_}; }
    std::vector<Integer> column_vector(std::size_t j) const;

    void append_row(std::span<Integer const> r);
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /* row a += k * row b */
    void add_row_multiple(std::size_t a, std::size_t b, Integer const & k);
    void add_col_multiple(std::size_t a, std::size_t b, Integer const & k);
    void negate_row(std::size_t a);
    void negate_col(std::size_t a);

    IntMatrix transpose() const;
    IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    bool is_zero() const;
    bool operator==(IntMatrix const & o) const = default;

    /* exact determinant (fraction-free Bareiss); square matrices only */
    Integer determinant() const;
    std::size_t rank() const;

    std::string to_string() const;
};

IntMatrix operator*(IntMatrix const & a, IntMatrix const & b);
IntMatrix operator+(IntMatrix const & a, IntMatrix const & b);
IntMatrix operator-(IntMatrix const & a, IntMatrix const & b);
std::vector<Integer> operator*(std::span<Integer const> v, IntMatrix const & m);
std::ostream & operator<<(std::ostream & os, IntMatrix const & m);

} // namespace kloc

#endif
