#ifndef GALHULL_MATRIX_PRODUCT_HPP
#define GALHULL_MATRIX_PRODUCT_HPP

#include <optional>
#include <vector>

#include "galhull/code.hpp"

namespace galhull {

/// Constituent codes C_1..C_M of a common length n over one field together
/// with an M x N outer matrix A; describes the matrix product code
/// [C_1, ..., C_M] . A of length N*n (codewords as row vectors).
class MatrixProductSpec {
  public:
    MatrixProductSpec(std::vector<LinearCode> codes, MatrixGF outer);

    const std::vector<LinearCode>& codes() const noexcept { return codes_; }
    const MatrixGF& outer() const noexcept { return outer_; }
    const FieldPtr& field() const noexcept { return outer_.field(); }
    std::size_t inner_length() const noexcept { return codes_.front().length(); }

  private:
    std::vector<LinearCode> codes_;
    MatrixGF outer_;
};

/// A sigma^ell(A^T) for the outer matrix; the M x M matrix whose diagonality
/// or triangularity drives the hull results.
MatrixGF outer_gram(const MatrixProductSpec& spec, GaloisLevel ell);

/// The diagonal (lambda_1, ..., lambda_M) of the outer Gram when it is
/// diagonal, nullopt otherwise.
std::optional<std::vector<FieldElement>> diagonal_lambda(const MatrixProductSpec& spec, GaloisLevel ell);

/// Block generator with (i,j) block a_ij * G_i, equal to
/// diag(G_1, ..., G_M) * (A kron I_n); requires a right non-singular A.
MatrixGF mpc_generator(const MatrixProductSpec& spec);

/// Canonical matrix product code; its dimension is checked to be the sum of
/// the constituent dimensions (a failure is a bug and throws).
LinearCode mpc_construct(const MatrixProductSpec& spec);

/// Hull of the matrix product code when the outer Gram is diagonal: the
/// product code of the B_i with B_i = C_i for lambda_i = 0 and
/// B_i = hull(C_i) otherwise. Each call cross-checks the formula against the
/// directly computed hull; disagreement throws std::logic_error.
LinearCode mpc_hull(const MatrixProductSpec& spec, GaloisLevel ell);

struct HullDimBounds {
    std::size_t lower = 0;
    std::size_t upper = 0;
    bool triangular = false;  // the triangular-Gram bound applies (nonzero diagonal)
};

/// Hull dimension bounds from the outer Gram shape. A triangular Gram with
/// all diagonal entries nonzero yields (0, sum dim hull(C_i)); a diagonal one
/// with nonzero entries forces equality. Otherwise the trivial bounds
/// (0, sum k_i) are returned with triangular = false. A zero diagonal entry
/// invalidates the informative bound, so it also falls back to the trivial
/// bounds.
HullDimBounds mpc_hull_dim_bounds(const MatrixProductSpec& spec, GaloisLevel ell);

/// Checks rank(full) >= sum of the diagonal block ranks for a block upper or
/// lower triangular matrix with the given diagonal blocks.
bool block_triangular_rank_bound(const std::vector<MatrixGF>& blocks, const MatrixGF& full);

}  // namespace galhull

#endif
