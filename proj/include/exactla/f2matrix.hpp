#pragma once

#include "exactla/intmatrix.hpp"

#include <cstdint>
#include <vector>

namespace exactla {

// Dense matrix over F2, entries stored as bytes in {0, 1}.
class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

    static F2Matrix identity(std::size_t n) {
        F2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint8_t operator()(std::size_t i, std::size_t j) const {
        return bits_[i * cols_ + j];
    }
    std::uint8_t &operator()(std::size_t i, std::size_t j) {
        return bits_[i * cols_ + j];
    }

    bool operator==(const F2Matrix &o) const = default;

    F2Matrix transpose() const {
        F2Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> bits_;
};

// Mod-2 reduction of an integer matrix.
F2Matrix f2_reduce(const IntMatrix &a);

std::size_t f2_rank(const F2Matrix &a);

// Reduced row echelon form over F2.
F2Matrix f2_row_reduce(const F2Matrix &a);

// Given independent columns of v spanning a subspace V of F2^n, returns
// columns spanning a complement W with V + W = F2^n and V intersect W = 0.
// Throws DependentGenerators when the columns of v are dependent.
F2Matrix f2_complement(const F2Matrix &v);

} // namespace exactla
