#include "galhull/code.hpp"

#include <stdexcept>
#include <string>

namespace galhull {

MonomialTransform MonomialTransform::identity(std::size_t n) {
    MonomialTransform t;
    t.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) t.perm[i] = i;
    t.diag.assign(n, FieldElement{1u});
    return t;
}

LinearCode LinearCode::from_rows(const MatrixGF& rows) {
    if (rows.cols() == 0) throw CodeError("E_EMPTY_CODE", "a code must have length at least 1");
    RrefResult red = rref(rows);
    return LinearCode(red.matrix.submatrix(0, 0, red.rank, rows.cols()));
}

MatrixGF gram_matrix(const MatrixGF& gen, GaloisLevel ell) {
    return gen * gen.transposed().frobenius(ell);
}

LinearCode dual_galois(const LinearCode& c, GaloisLevel ell) {
    const FieldSpec& f = *c.field();
    f.check_level(ell);
    // C^perp_ell = sigma^{e-ell}(C^perp_0), exponent reduced mod e.
    const unsigned t = (f.degree() - ell.ell) % f.degree();
    return LinearCode::from_rows(right_kernel(c.generator()).frobenius(GaloisLevel{t}));
}

HullReport hull(const LinearCode& c, GaloisLevel ell) {
    const FieldSpec& f = *c.field();
    f.check_level(ell);
    const std::size_t k = c.dimension();

    // Intersection via the left kernel of the stacked bases: pairs (a, b) with
    // a*G + b*D = 0 correspond exactly to hull elements a*G.
    const LinearCode dual = dual_galois(c, ell);
    const MatrixGF stacked = c.generator().vstack(dual.generator());
    const MatrixGF left_kernel = right_kernel(stacked.transposed());
    const MatrixGF coeffs = left_kernel.submatrix(0, 0, left_kernel.rows(), k);
    const LinearCode hull_code = LinearCode::from_rows(coeffs * c.generator());
    const std::size_t h = hull_code.dimension();

    MatrixGF gram = gram_matrix(c.generator(), ell);
    const std::size_t r = rank(gram);
    if (h + r != k)
        throw std::logic_error("hull dimension " + std::to_string(h) + " disagrees with k - rank(gram) = " +
                               std::to_string(k - r));

    // Extend the hull basis to a basis of the code, greedily over the
    // canonical generator rows.
    MatrixGF structured = hull_code.generator();
    std::size_t cur = h;
    for (std::size_t i = 0; i < k && cur < k; ++i) {
        MatrixGF candidate = structured.vstack(c.generator().submatrix(i, 0, 1, c.length()));
        if (rank(candidate) > cur) {
            structured = std::move(candidate);
            ++cur;
        }
    }
    if (cur != k) throw std::logic_error("failed to extend a hull basis to a basis of the code");

    return HullReport{ell, hull_code, h, r, std::move(gram), std::move(structured)};
}

bool is_lcd(const LinearCode& c, GaloisLevel ell) {
    return det(gram_matrix(c.generator(), ell)).value != 0;
}

bool is_self_orthogonal(const LinearCode& c, GaloisLevel ell) {
    return gram_matrix(c.generator(), ell).is_zero();
}

bool is_self_dual(const LinearCode& c, GaloisLevel ell) {
    const FieldSpec& f = *c.field();
    f.check_level(ell);
    const bool by_duality = (c == dual_galois(c, ell));

    const MatrixGF h = parity_check(c);
    const GaloisLevel co_level{(f.degree() - ell.ell) % f.degree()};
    const bool by_grams = gram_matrix(c.generator(), ell).is_zero() && gram_matrix(h, co_level).is_zero();
    if (by_duality != by_grams)
        throw std::logic_error("self-duality criteria disagree (canonical equality vs Gram conditions)");
    return by_duality;
}

LinearCode apply_monomial(const LinearCode& c, const MonomialTransform& t) {
    const FieldSpec& f = *c.field();
    const std::size_t n = c.length();
    if (t.perm.size() != n || t.diag.size() != n)
        throw CodeError("E_TRANSFORM_SIZE", "transform size does not match the code length");
    std::vector<bool> seen(n, false);
    for (std::size_t p : t.perm) {
        if (p >= n || seen[p]) throw CodeError("E_TRANSFORM_NOT_PERMUTATION", "perm is not a permutation");
        seen[p] = true;
    }
    for (FieldElement d : t.diag)
        if (d.value == 0) throw CodeError("E_TRANSFORM_ZERO_DIAG", "monomial transform with a zero diagonal entry");

    MatrixGF moved(c.field(), c.dimension(), n);
    for (std::size_t i = 0; i < c.dimension(); ++i)
        for (std::size_t j = 0; j < n; ++j) moved.at(i, j) = f.mul(t.diag[j], c.generator().at(i, t.perm[j]));
    return LinearCode::from_rows(moved);
}

MatrixGF parity_check(const LinearCode& c) { return right_kernel(c.generator()); }

StandardForm standard_form(const LinearCode& c) {
    if (c.dimension() == 0) throw CodeError("E_EMPTY_CODE", "standard form requires dimension at least 1");
    const std::size_t n = c.length(), k = c.dimension();
    const RrefResult red = rref(c.generator());

    std::vector<std::size_t> colperm = red.pivots;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) colperm.push_back(j);

    MatrixGF b(c.field(), k, n - k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n - k; ++j) b.at(i, j) = c.generator().at(i, colperm[k + j]);
    return StandardForm{std::move(b), std::move(colperm)};
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& c) {
    const FieldSpec& f = *c.field();
    const std::size_t n = c.length(), k = c.dimension();
    const unsigned q = f.order();

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= q;
        if (total > (1ull << 20))
            throw CodeError("E_ENUM_BUDGET", "q^k exceeds the enumeration budget 2^20");
    }

    // Per-row delta vectors: stepping message digit i from d to d+1 (mod q)
    // adds (elem(d+1) - elem(d)) * row_i to the running codeword.
    std::vector<std::vector<FieldElement>> delta(k);
    for (std::size_t i = 0; i < k; ++i) {
        delta[i].resize(static_cast<std::size_t>(q) * n);
        for (unsigned d = 0; d < q; ++d) {
            const FieldElement step = f.sub(FieldElement{(d + 1) % q}, FieldElement{d});
            for (std::size_t j = 0; j < n; ++j)
                delta[i][static_cast<std::size_t>(d) * n + j] = f.mul(step, c.generator().at(i, j));
        }
    }

    std::vector<std::uint64_t> counts(n + 1, 0);
    std::vector<unsigned> digit(k, 0);
    std::vector<FieldElement> cur(n, FieldElement{});
    for (std::uint64_t it = 0; it < total; ++it) {
        std::size_t w = 0;
        for (FieldElement e : cur)
            if (e.value != 0) ++w;
        ++counts[w];
        for (std::size_t i = 0; i < k; ++i) {
            const FieldElement* step = delta[i].data() + static_cast<std::size_t>(digit[i]) * n;
            for (std::size_t j = 0; j < n; ++j) cur[j] = f.add(cur[j], step[j]);
            if (++digit[i] < q) break;
            digit[i] = 0;
        }
    }
    return counts;
}

}  // namespace galhull
