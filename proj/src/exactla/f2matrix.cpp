#include "exactla/f2matrix.hpp"
#include "exactla/errors.hpp"

namespace exactla {

F2Matrix f2_reduce(const IntMatrix &a) {
    F2Matrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = static_cast<std::uint8_t>(mpz_odd_p(a(i, j).get_mpz_t()));
    return m;
}

F2Matrix f2_row_reduce(const F2Matrix &a) {
    F2Matrix m = a;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(r, j), m(p, j));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m(i, c))
                for (std::size_t j = 0; j < m.cols(); ++j)
                    m(i, j) ^= m(r, j);
        ++r;
    }
    return m;
}

std::size_t f2_rank(const F2Matrix &a) {
    F2Matrix m = f2_row_reduce(a);
    std::size_t count = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j)) {
                ++count;
                break;
            }
    return count;
}

F2Matrix f2_complement(const F2Matrix &v) {
    std::size_t n = v.rows(), k = v.cols();
    if (f2_rank(v) != k)
        throw DependentGenerators("f2_complement: dependent generators");
    F2Matrix red = f2_row_reduce(v.transpose());
    std::vector<bool> pivot(n, false);
    for (std::size_t i = 0; i < red.rows(); ++i)
        for (std::size_t j = 0; j < red.cols(); ++j)
            if (red(i, j)) {
                pivot[j] = true;
                break;
            }
    F2Matrix w(n, n - k);
    std::size_t c = 0;
    for (std::size_t j = 0; j < n; ++j)
        if (!pivot[j])
            w(j, c++) = 1;
    return w;
}

} // namespace exactla
