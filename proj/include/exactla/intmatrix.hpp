#pragma once

#include <cstddef>
#include <gmpxx.h>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace exactla {

using Int = mpz_class;

// Dense matrix over Z with arbitrary-precision entries, row-major.
// Value type: every operation returns a fresh matrix.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(
        std::initializer_list<std::initializer_list<long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.begin()->size() : 0;
        IntMatrix m(r, c);
        std::size_t i = 0;
        for (const auto &row : rows) {
            if (row.size() != c)
                throw std::invalid_argument("ragged row list");
            std::size_t j = 0;
            for (long v : row)
                m(i, j++) = v;
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Int &operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Int &operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }

    bool operator==(const IntMatrix &o) const = default;

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix &o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix product shape mismatch");
        IntMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int &a = (*this)(i, k);
                if (a == 0)
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    p(i, j) += a * o(k, j);
            }
        return p;
    }

    IntMatrix operator+(const IntMatrix &o) const {
        require_same_shape(o);
        IntMatrix s(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            s.entries_[i] = entries_[i] + o.entries_[i];
        return s;
    }

    IntMatrix operator-(const IntMatrix &o) const {
        require_same_shape(o);
        IntMatrix s(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            s.entries_[i] = entries_[i] - o.entries_[i];
        return s;
    }

    IntMatrix operator-() const {
        IntMatrix s(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            s.entries_[i] = -entries_[i];
        return s;
    }

    IntMatrix scaled(const Int &c) const {
        IntMatrix s(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            s.entries_[i] = c * entries_[i];
        return s;
    }

    std::vector<Int> col(std::size_t j) const {
        std::vector<Int> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    std::vector<Int> apply(const std::vector<Int> &x) const {
        if (x.size() != cols_)
            throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<Int> y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                y[i] += (*this)(i, j) * x[j];
        return y;
    }

    IntMatrix columns(const std::vector<std::size_t> &idx) const {
        IntMatrix m(rows_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t i = 0; i < rows_; ++i)
                m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    bool is_zero() const {
        for (const Int &e : entries_)
            if (e != 0)
                return false;
        return true;
    }

    std::string to_string() const;

  private:
    void require_same_shape(const IntMatrix &o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

// Horizontal concatenation [a | b]; a may have zero columns.
IntMatrix hcat(const IntMatrix &a, const IntMatrix &b);
// Vertical concatenation.
IntMatrix vcat(const IntMatrix &a, const IntMatrix &b);
// Column vector from a std::vector.
IntMatrix column_matrix(const std::vector<Int> &v);

// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const IntMatrix &a);

} // namespace exactla
