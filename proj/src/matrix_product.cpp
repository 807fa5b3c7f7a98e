#include "galhull/matrix_product.hpp"

#include <stdexcept>
#include <string>

namespace galhull {

namespace {

// Block matrix with (i,j) block a_ij * G_i for arbitrary row-space inputs; the
// row space equals the set of matrix products even when A has no right
// inverse.
MatrixGF block_rows(const std::vector<LinearCode>& codes, const MatrixGF& a) {
    const FieldSpec& f = *a.field();
    const std::size_t n = codes.front().length();
    std::size_t total_k = 0;
    for (const LinearCode& c : codes) total_k += c.dimension();

    MatrixGF g(a.field(), total_k, a.cols() * n);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        const MatrixGF& gi = codes[i].generator();
        for (std::size_t t = 0; t < gi.rows(); ++t) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                const FieldElement aij = a.at(i, j);
                if (aij.value == 0) continue;
                for (std::size_t s = 0; s < n; ++s) g.at(offset + t, j * n + s) = f.mul(aij, gi.at(t, s));
            }
        }
        offset += gi.rows();
    }
    return g;
}

}  // namespace

MatrixProductSpec::MatrixProductSpec(std::vector<LinearCode> codes, MatrixGF outer)
    : codes_(std::move(codes)), outer_(std::move(outer)) {
    if (codes_.empty()) throw CodeError("E_DIM_MISMATCH", "a matrix product needs at least one constituent code");
    for (const LinearCode& c : codes_) {
        if (!c.field()->same(*outer_.field()))
            throw CodeError("E_FIELD_MISMATCH", "constituent codes and outer matrix must share one field");
        if (c.length() != codes_.front().length())
            throw CodeError("E_DIM_MISMATCH", "constituent codes must share one length");
    }
    if (outer_.rows() != codes_.size())
        throw CodeError("E_DIM_MISMATCH", "outer matrix must have one row per constituent code");
}

MatrixGF outer_gram(const MatrixProductSpec& spec, GaloisLevel ell) {
    spec.field()->check_level(ell);
    return gram_matrix(spec.outer(), ell);
}

std::optional<std::vector<FieldElement>> diagonal_lambda(const MatrixProductSpec& spec, GaloisLevel ell) {
    const MatrixGF gram = outer_gram(spec, ell);
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = 0; j < gram.cols(); ++j)
            if (i != j && gram.at(i, j).value != 0) return std::nullopt;
    std::vector<FieldElement> lambda(gram.rows());
    for (std::size_t i = 0; i < gram.rows(); ++i) lambda[i] = gram.at(i, i);
    return lambda;
}

MatrixGF mpc_generator(const MatrixProductSpec& spec) {
    if (!right_inverse(spec.outer()))
        throw CodeError("E_NOT_RIGHT_INVERTIBLE", "the outer matrix has no right inverse");
    return block_rows(spec.codes(), spec.outer());
}

LinearCode mpc_construct(const MatrixProductSpec& spec) {
    const MatrixGF g = mpc_generator(spec);
    LinearCode code = LinearCode::from_rows(g);
    if (code.dimension() != g.rows())
        throw std::logic_error("matrix product code dimension " + std::to_string(code.dimension()) +
                               " does not equal the sum of constituent dimensions " + std::to_string(g.rows()));
    return code;
}

LinearCode mpc_hull(const MatrixProductSpec& spec, GaloisLevel ell) {
    const auto lambda = diagonal_lambda(spec, ell);
    if (!lambda)
        throw CodeError("E_NONDIAGONAL_GRAM", "the outer Gram A sigma^ell(A^T) is not diagonal");

    std::vector<LinearCode> parts;
    parts.reserve(spec.codes().size());
    for (std::size_t i = 0; i < spec.codes().size(); ++i) {
        if ((*lambda)[i].value == 0)
            parts.push_back(spec.codes()[i]);
        else
            parts.push_back(hull(spec.codes()[i], ell).hull);
    }
    const LinearCode by_formula = LinearCode::from_rows(block_rows(parts, spec.outer()));

    const LinearCode product = LinearCode::from_rows(block_rows(spec.codes(), spec.outer()));
    const LinearCode direct = hull(product, ell).hull;
    if (!(by_formula == direct))
        throw std::logic_error("matrix product hull formula disagrees with the direct hull");
    return by_formula;
}

HullDimBounds mpc_hull_dim_bounds(const MatrixProductSpec& spec, GaloisLevel ell) {
    if (!right_inverse(spec.outer()))
        throw CodeError("E_NOT_RIGHT_INVERTIBLE", "the outer matrix has no right inverse");
    const MatrixGF gram = outer_gram(spec, ell);
    const std::size_t m = gram.rows();

    bool upper = true, lower = true, diag_nonzero = true;
    for (std::size_t i = 0; i < m; ++i) {
        if (gram.at(i, i).value == 0) diag_nonzero = false;
        for (std::size_t j = 0; j < m; ++j) {
            if (i > j && gram.at(i, j).value != 0) upper = false;
            if (i < j && gram.at(i, j).value != 0) lower = false;
        }
    }

    std::size_t sum_k = 0;
    for (const LinearCode& c : spec.codes()) sum_k += c.dimension();

    if ((upper || lower) && diag_nonzero) {
        std::size_t sum_hull = 0;
        for (const LinearCode& c : spec.codes()) sum_hull += hull(c, ell).h;
        if (upper && lower) return HullDimBounds{sum_hull, sum_hull, true};  // diagonal: equality
        return HullDimBounds{0, sum_hull, true};
    }
    return HullDimBounds{0, sum_k, false};
}

bool block_triangular_rank_bound(const std::vector<MatrixGF>& blocks, const MatrixGF& full) {
    if (full.rows() != full.cols()) throw CodeError("E_BLOCK_LAYOUT", "the full matrix must be square");
    std::size_t total = 0;
    for (const MatrixGF& b : blocks) {
        if (b.rows() != b.cols()) throw CodeError("E_BLOCK_LAYOUT", "diagonal blocks must be square");
        if (!b.field()->same(*full.field()))
            throw CodeError("E_FIELD_MISMATCH", "blocks and full matrix must share one field");
        total += b.rows();
    }
    if (total != full.rows())
        throw CodeError("E_BLOCK_LAYOUT", "diagonal block sizes do not partition the full matrix");

    std::vector<std::size_t> offsets;
    std::size_t off = 0;
    for (const MatrixGF& b : blocks) {
        offsets.push_back(off);
        if (!(full.submatrix(off, off, b.rows(), b.rows()) == b))
            throw CodeError("E_BLOCK_LAYOUT", "a diagonal block does not match the full matrix");
        off += b.rows();
    }

    bool upper = true, lower = true;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        for (std::size_t bj = 0; bj < blocks.size(); ++bj) {
            if (bi == bj) continue;
            const MatrixGF sub =
                full.submatrix(offsets[bi], offsets[bj], blocks[bi].rows(), blocks[bj].rows());
            if (!sub.is_zero()) {
                if (bi > bj) upper = false;
                if (bi < bj) lower = false;
            }
        }
    }
    if (!upper && !lower)
        throw CodeError("E_BLOCK_LAYOUT", "the full matrix is not block upper or lower triangular");

    std::size_t sum_ranks = 0;
    for (const MatrixGF& b : blocks) sum_ranks += rank(b);
    return rank(full) >= sum_ranks;
}

}  // namespace galhull
