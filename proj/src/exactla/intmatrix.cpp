#include "exactla/intmatrix.hpp"

#include <sstream>

namespace exactla {

IntMatrix hcat(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols() == 0 && a.rows() == 0)
        return b;
    if (b.cols() == 0 && b.rows() == 0)
        return a;
    if (a.rows() != b.rows())
        throw std::invalid_argument("hcat row mismatch");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

IntMatrix vcat(const IntMatrix &a, const IntMatrix &b) {
    if (a.rows() == 0 && a.cols() == 0)
        return b;
    if (b.rows() == 0 && b.cols() == 0)
        return a;
    if (a.cols() != b.cols())
        throw std::invalid_argument("vcat column mismatch");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            m(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i)
            m(a.rows() + i, j) = b(i, j);
    }
    return m;
}

IntMatrix column_matrix(const std::vector<Int> &v) {
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        m(i, 0) = v[i];
    return m;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Int determinant(const IntMatrix &a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                mpz_swap(m(k, j).get_mpz_t(), m(p, j).get_mpz_t());
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

} // namespace exactla
