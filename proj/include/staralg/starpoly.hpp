#pragma once

#include <compare>
#include <cstddef>
#include <gmpxx.h>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace staralg {

using Int = mpz_class;

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string &what)
        : std::runtime_error(what) {}
};

struct IndexError : std::runtime_error {
    explicit IndexError(const std::string &what) : std::runtime_error(what) {}
};

struct TermLimitExceeded : std::runtime_error {
    explicit TermLimitExceeded(const std::string &what)
        : std::runtime_error(what) {}
};

inline constexpr std::size_t kDefaultTermCap = 1000000;

// Basis word e_{j,k} (x) s_mu s_nu^*; empty mu and nu mean the unit of the
// Cuntz factor. Indices are 1-based.
struct Word {
    int j = 1;
    int k = 1;
    std::vector<int> mu;
    std::vector<int> nu;

    auto operator<=>(const Word &) const = default;

    // Word product: zero (nullopt semantics via returned flag), or a single
    // word obtained by contracting s_nu^* s_mu' along a common prefix.
    static bool mul(const Word &a, const Word &b, Word &out);
    Word adjoint() const { return {k, j, nu, mu}; }
    int degree() const {
        return static_cast<int>(mu.size()) - static_cast<int>(nu.size());
    }
};

// Finite integer combination of basis words of M_r (x) O_n.
class StarPoly {
  public:
    StarPoly(int r, int n) : r_(r), n_(n) {
        if (r < 1 || n < 1)
            throw IndexError("matrix size and Cuntz index must be positive");
    }

    static StarPoly zero(int r, int n) { return StarPoly(r, n); }
    static StarPoly unit(int r, int n);
    static StarPoly matrix_unit(int r, int n, int j, int k);
    static StarPoly isometry(int r, int n, int m);
    static StarPoly word(int r, int n, const Word &w, Int coeff = 1);

    int r() const { return r_; }
    int n() const { return n_; }
    const std::map<Word, Int> &terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word &w, const Int &coeff);

    StarPoly operator+(const StarPoly &o) const;
    StarPoly operator-(const StarPoly &o) const;
    StarPoly operator*(const StarPoly &o) const;
    StarPoly operator-() const;
    StarPoly scaled(const Int &c) const;

    bool operator==(const StarPoly &o) const = default;

    std::string to_string() const;

  private:
    void require_same_algebra(const StarPoly &o) const {
        if (r_ != o.r_ || n_ != o.n_)
            throw DimensionMismatch("operands live in different algebras");
    }

    int r_;
    int n_;
    std::map<Word, Int> terms_; // nonzero coefficients only
};

StarPoly adjoint(const StarPoly &p);
StarPoly mul(const StarPoly &p, const StarPoly &q);
StarPoly add(const StarPoly &p, const StarPoly &q);

// Canonical form: within each (j, k, degree) class all words are expanded
// to the class's maximal left length via s_mu s_nu^* = sum_i s_mu.i s_nu.i^*,
// then complete blocks are recombined bottom-up, so equal elements get
// identical representations.
StarPoly normalize(const StarPoly &p, std::size_t term_cap = kDefaultTermCap);

bool equal(const StarPoly &p, const StarPoly &q,
           std::size_t term_cap = kDefaultTermCap);

} // namespace staralg
