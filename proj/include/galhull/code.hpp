#ifndef GALHULL_CODE_HPP
#define GALHULL_CODE_HPP

#include <cstdint>
#include <vector>

#include "galhull/matrix.hpp"

namespace galhull {

/// An [n,k] linear code over GF(q), stored canonically: the generator matrix
/// is the RREF of the supplied spanning rows and has full row rank k. With
/// this normalization two codes are equal iff their generator matrices are
/// identical, so subspace-level statements reduce to matrix equality.
class LinearCode {
  public:
    /// Canonicalizes arbitrary spanning rows; dependent rows are dropped.
    static LinearCode from_rows(const MatrixGF& rows);

    const FieldPtr& field() const noexcept { return gen_.field(); }
    std::size_t length() const noexcept { return gen_.cols(); }     // n
    std::size_t dimension() const noexcept { return gen_.rows(); }  // k
    const MatrixGF& generator() const noexcept { return gen_; }

    bool operator==(const LinearCode& other) const { return gen_ == other.gen_; }

  private:
    explicit LinearCode(MatrixGF gen) : gen_(std::move(gen)) {}

    MatrixGF gen_;  // k x n, RREF, rank k
};

/// Coordinate permutation composed with nonzero coordinate scalings. Acting on
/// a vector x of length n it produces y with y_j = diag[j] * x[perm[j]].
struct MonomialTransform {
    std::vector<std::size_t> perm;   // bijection on {0, ..., n-1}
    std::vector<FieldElement> diag;  // n nonzero scalars

    static MonomialTransform identity(std::size_t n);
};

/// Hull decomposition of a code at one Galois level.
struct HullReport {
    GaloisLevel ell;
    LinearCode hull;         // the subcode C intersected with its ell-Galois dual
    std::size_t h = 0;       // dim hull
    std::size_t r = 0;       // k - h, equal to rank(gram)
    MatrixGF gram;           // G sigma^ell(G^T) for the canonical generator
    MatrixGF structured_gen; // k x n generator whose first h rows span the hull
};

/// G sigma^ell(G^T).
MatrixGF gram_matrix(const MatrixGF& gen, GaloisLevel ell);

/// The [n, n-k] code of all vectors x with <c, x>_ell = 0 for every codeword c.
LinearCode dual_galois(const LinearCode& c, GaloisLevel ell);

/// Hull by subspace intersection, cross-checked against the rank identity
/// h = k - rank(G sigma^ell(G^T)); disagreement means an implementation bug
/// and throws std::logic_error.
HullReport hull(const LinearCode& c, GaloisLevel ell);

/// True iff G sigma^ell(G^T) is nonsingular (trivial hull).
bool is_lcd(const LinearCode& c, GaloisLevel ell);

/// True iff G sigma^ell(G^T) = 0 (the code is contained in its dual).
bool is_self_orthogonal(const LinearCode& c, GaloisLevel ell);

/// True iff the code equals its ell-Galois dual. Also evaluates the two-sided
/// criterion (generator Gram zero and parity-check Gram at level e-ell zero)
/// and requires both routes to agree.
bool is_self_dual(const LinearCode& c, GaloisLevel ell);

LinearCode apply_monomial(const LinearCode& c, const MonomialTransform& t);

/// Canonical (n-k) x n matrix H with G H^T = 0 and rank n-k.
MatrixGF parity_check(const LinearCode& c);

struct StandardForm {
    MatrixGF b;                       // k x (n-k) block of the permuted generator (I_k | B)
    std::vector<std::size_t> colperm; // column j of the permuted generator is column colperm[j]
};

/// Stable column permutation moving the RREF pivot columns to the front.
StandardForm standard_form(const LinearCode& c);

/// Full weight enumerator A_0..A_n by codeword enumeration; requires
/// q^k <= 2^20.
std::vector<std::uint64_t> weight_distribution(const LinearCode& c);

}  // namespace galhull

#endif
