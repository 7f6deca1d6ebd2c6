#pragma once

#include "exactla/f2matrix.hpp"
#include "exactla/intmatrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace z2mod {

using exactla::Int;
using exactla::IntMatrix;

struct NotInvolution : std::runtime_error {
    explicit NotInvolution(const std::string &what)
        : std::runtime_error(what) {}
};

struct ChainViolation : std::runtime_error {
    explicit ChainViolation(const std::string &what)
        : std::runtime_error(what) {}
};

// Rank-n free Z-module together with an order-two matrix action.
// Construction checks S*S = I.
class Involution {
  public:
    explicit Involution(IntMatrix s) : s_(std::move(s)) {
        if (s_.rows() != s_.cols())
            throw NotInvolution("matrix is not square");
        if (s_ * s_ != IntMatrix::identity(s_.rows()))
            throw NotInvolution("matrix squared is not the identity");
    }

    std::size_t n() const { return s_.rows(); }
    const IntMatrix &s() const { return s_; }

  private:
    IntMatrix s_;
};

enum class SummandType { T1, T2, T3 };

// T1 = trivial action, T2 = sign action, T3 = regular module (rank 2, swap).
struct Multiplicities {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t n3 = 0;

    bool operator==(const Multiplicities &) const = default;
    std::size_t rank() const { return n1 + n2 + 2 * n3; }
};

// Unimodular change of basis P with P^-1 S P in canonical block form.
// Columns are ordered: n1 fixed vectors, n2 negated vectors, n3 pairs
// (x, Sx).
struct Decomposition {
    Multiplicities mult;
    IntMatrix p;
};

struct DecomposeOptions {
    std::uint64_t seed = 0;
};

// n1 = dim_F2(ker(S-I) / (I+S) Z^n), n2 = dim_F2(ker(S+I) / (I-S) Z^n),
// n3 = rank_F2((I+S) mod 2).
Multiplicities multiplicities(const Involution &inv);

// Block diagonal I_{n1} (+) -I_{n2} (+) n3 swap blocks.
IntMatrix canonical_form(const Multiplicities &mult);

bool verify_decomposition(const Involution &inv, const Decomposition &dec);

Decomposition decompose(const Involution &inv,
                        const DecomposeOptions &opts = {});

// Basis of a direct summand L of Z^n whose mod-p reduction is exactly the
// span of the columns of v_gens (entries read mod p).
IntMatrix lift_subspace_to_summand(std::size_t n, const Int &p,
                                   const IntMatrix &v_gens);
IntMatrix lift_subspace_to_summand(std::size_t n,
                                   const exactla::F2Matrix &v);

// Given p Z^n <= N <= Z^n (N spanned by the columns of n_gens), returns
// (N0, N1) with Z^n = N0 (+) N1 and N = p N0 (+) N1.
std::pair<IntMatrix, IntMatrix> split_relative(std::size_t n, const Int &p,
                                               const IntMatrix &n_gens);

namespace detail {

// Free-basis extraction for an involution with multiplicities (0, 0, q):
// returns x-columns such that the pairs (x_i, S x_i) form a Z-basis.
IntMatrix free_module_basis(const IntMatrix &s, std::uint64_t seed);

// Seeded fallback: perturb the candidate columns x by elements of the
// (-1)-eigenlattice until the paired basis becomes unimodular.
IntMatrix randomized_repair(const IntMatrix &s, const IntMatrix &x,
                            const IntMatrix &k_minus, std::uint64_t seed);

IntMatrix interleave_pairs(const IntMatrix &s, const IntMatrix &x);

} // namespace detail

} // namespace z2mod
