#ifndef KLOC_INTLINALG_MODULAR_HPP
#define KLOC_INTLINALG_MODULAR_HPP

#include <cstdint>
#include <vector>

#include "kloc/intlinalg/int_matrix.hpp"

namespace kloc {

/* Dense matrix over Z/pZ for a word-size prime p. */
class FpMatrix {
    std::uint64_t p_ = 2;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint64_t> data_;

  public:
    FpMatrix() = default;
    FpMatrix(std::uint64_t p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    FpMatrix(std::uint64_t p, IntMatrix const & m);

    std::uint64_t modulus() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t & operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::uint64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /* reduced row echelon form in place; returns pivot columns */
    std::vector<std::size_t> row_reduce();
    std::size_t rank() const;
    /* basis of { x : x * M = 0 } as rows */
    std::vector<std::vector<std::uint64_t>> left_kernel() const;
    /* basis of { x : M * x = 0 } as vectors */
    std::vector<std::vector<std::uint64_t>> right_kernel() const;
    /* indices of a maximal linearly independent subset of rows, chosen greedily in order */
    std::vector<std::size_t> independent_rows() const;
};

} // namespace kloc

#endif
