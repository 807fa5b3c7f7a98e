#ifndef GALHULL_MATRIX_HPP
#define GALHULL_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "galhull/field.hpp"

namespace galhull {

/// Dense row-major matrix over one FieldSpec. All arithmetic is exact.
class MatrixGF {
  public:
    /// Zero-filled matrix.
    MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols);
    /// Matrix from row-major integer encodings, each checked against the field.
    MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols, std::initializer_list<unsigned> values);
    MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols, const std::vector<unsigned>& values);

    static MatrixGF identity(FieldPtr field, std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldPtr& field() const noexcept { return field_; }

    FieldElement& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const FieldElement> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }

    MatrixGF transposed() const;
    /// Elementwise sigma^ell.
    MatrixGF frobenius(GaloisLevel ell) const;
    MatrixGF scaled(FieldElement s) const;

    MatrixGF operator+(const MatrixGF& other) const;
    MatrixGF operator*(const MatrixGF& other) const;
    bool operator==(const MatrixGF& other) const;

    MatrixGF vstack(const MatrixGF& below) const;
    MatrixGF hstack(const MatrixGF& right) const;
    MatrixGF submatrix(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;

    bool is_zero() const;
    void swap_rows(std::size_t a, std::size_t b);

  private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> entries_;
};

struct RrefResult {
    MatrixGF matrix;                  // the unique reduced row echelon form
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
    std::size_t rank = 0;
};

/// Reduced row echelon form with deterministic first-nonzero pivoting.
RrefResult rref(const MatrixGF& a);

std::size_t rank(const MatrixGF& a);

/// Canonical basis of {x : A x^T = 0} as a (cols - rank) x cols matrix. Each
/// basis row has a 1 in its free column and is derived from the RREF of A.
MatrixGF right_kernel(const MatrixGF& a);

/// Determinant by Gaussian elimination; the 0x0 determinant is 1.
FieldElement det(const MatrixGF& a);

/// Kronecker (tensor) product: block matrix with (i,j) block a_ij * B.
MatrixGF kronecker(const MatrixGF& a, const MatrixGF& b);

/// Right inverse B with A*B = I when A has full row rank, nullopt otherwise.
/// The solution is the canonical one read off the RREF of (A | I).
std::optional<MatrixGF> right_inverse(const MatrixGF& a);

}  // namespace galhull

#endif
