#include "galhull/matrix.hpp"

#include <algorithm>
#include <string>

namespace galhull {

namespace {

void check_same_field(const MatrixGF& a, const MatrixGF& b) {
    if (!a.field()->same(*b.field()))
        throw CodeError("E_FIELD_MISMATCH", "matrices belong to different fields");
}

}  // namespace

MatrixGF::MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols) {}

MatrixGF::MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols, std::initializer_list<unsigned> values)
    : MatrixGF(std::move(field), rows, cols, std::vector<unsigned>(values)) {}

MatrixGF::MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols, const std::vector<unsigned>& values)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (values.size() != rows * cols)
        throw CodeError("E_DIM_MISMATCH", "matrix initializer has " + std::to_string(values.size()) +
                                              " entries, expected " + std::to_string(rows * cols));
    entries_.reserve(values.size());
    for (unsigned v : values) entries_.push_back(field_->element(v));
}

MatrixGF MatrixGF::identity(FieldPtr field, std::size_t n) {
    MatrixGF m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.field()->one();
    return m;
}

MatrixGF MatrixGF::transposed() const {
    MatrixGF t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

MatrixGF MatrixGF::frobenius(GaloisLevel ell) const {
    field_->check_level(ell);
    MatrixGF m(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = field_->frobenius_iter(entries_[i], ell.ell);
    return m;
}

MatrixGF MatrixGF::scaled(FieldElement s) const {
    MatrixGF m(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = field_->mul(entries_[i], s);
    return m;
}

MatrixGF MatrixGF::operator+(const MatrixGF& other) const {
    check_same_field(*this, other);
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw CodeError("E_DIM_MISMATCH", "matrix addition of incompatible shapes");
    MatrixGF m(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = field_->add(entries_[i], other.entries_[i]);
    return m;
}

MatrixGF MatrixGF::operator*(const MatrixGF& other) const {
    check_same_field(*this, other);
    if (cols_ != other.rows_)
        throw CodeError("E_DIM_MISMATCH", "matrix product of incompatible shapes " + std::to_string(rows_) + "x" +
                                              std::to_string(cols_) + " and " + std::to_string(other.rows_) + "x" +
                                              std::to_string(other.cols_));
    const FieldSpec& f = *field_;
    MatrixGF m(field_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t t = 0; t < cols_; ++t) {
            const FieldElement a = at(i, t);
            if (a.value == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                m.at(i, j) = f.add(m.at(i, j), f.mul(a, other.at(t, j)));
        }
    }
    return m;
}

bool MatrixGF::operator==(const MatrixGF& other) const {
    return field_->same(*other.field_) && rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
}

MatrixGF MatrixGF::vstack(const MatrixGF& below) const {
    check_same_field(*this, below);
    if (cols_ != below.cols_) throw CodeError("E_DIM_MISMATCH", "vertical stack of different widths");
    MatrixGF m(field_, rows_ + below.rows_, cols_);
    std::copy(entries_.begin(), entries_.end(), m.entries_.begin());
    std::copy(below.entries_.begin(), below.entries_.end(), m.entries_.begin() + static_cast<long>(entries_.size()));
    return m;
}

MatrixGF MatrixGF::hstack(const MatrixGF& right) const {
    check_same_field(*this, right);
    if (rows_ != right.rows_) throw CodeError("E_DIM_MISMATCH", "horizontal stack of different heights");
    MatrixGF m(field_, rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) m.at(i, cols_ + j) = right.at(i, j);
    }
    return m;
}

MatrixGF MatrixGF::submatrix(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_)
        throw CodeError("E_DIM_MISMATCH", "submatrix out of bounds");
    MatrixGF m(field_, nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
}

bool MatrixGF::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](FieldElement e) { return e.value == 0; });
}

void MatrixGF::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

RrefResult rref(const MatrixGF& a) {
    MatrixGF m = a;
    const FieldSpec& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (m.at(i, c).value != 0) {
                sel = i;
                break;
            }
        }
        if (sel == m.rows()) continue;
        m.swap_rows(sel, r);
        const FieldElement ipiv = f.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), ipiv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).value == 0) continue;
            const FieldElement factor = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(m), std::move(pivots), r};
}

std::size_t rank(const MatrixGF& a) { return rref(a).rank; }

MatrixGF right_kernel(const MatrixGF& a) {
    const RrefResult red = rref(a);
    const FieldSpec& f = *a.field();
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : red.pivots) is_pivot[c] = true;

    MatrixGF kernel(a.field(), n - red.rank, n);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        kernel.at(out, free_col) = f.one();
        for (std::size_t i = 0; i < red.pivots.size(); ++i)
            kernel.at(out, red.pivots[i]) = f.neg(red.matrix.at(i, free_col));
        ++out;
    }
    return kernel;
}

FieldElement det(const MatrixGF& a) {
    if (a.rows() != a.cols()) throw CodeError("E_NOT_SQUARE", "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    const FieldSpec& f = *a.field();
    if (n == 0) return f.one();
    MatrixGF m = a;
    FieldElement result = f.one();
    bool negate = false;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = n;
        for (std::size_t i = c; i < n; ++i) {
            if (m.at(i, c).value != 0) {
                sel = i;
                break;
            }
        }
        if (sel == n) return f.zero();
        if (sel != c) {
            m.swap_rows(sel, c);
            negate = !negate;
        }
        result = f.mul(result, m.at(c, c));
        const FieldElement ipiv = f.inv(m.at(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c).value == 0) continue;
            const FieldElement factor = f.mul(m.at(i, c), ipiv);
            for (std::size_t j = c; j < n; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(c, j)));
        }
    }
    return negate ? f.neg(result) : result;
}

MatrixGF kronecker(const MatrixGF& a, const MatrixGF& b) {
    check_same_field(a, b);
    const FieldSpec& f = *a.field();
    MatrixGF m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const FieldElement s = a.at(i, j);
            if (s.value == 0) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    m.at(i * b.rows() + r, j * b.cols() + c) = f.mul(s, b.at(r, c));
        }
    return m;
}

std::optional<MatrixGF> right_inverse(const MatrixGF& a) {
    const std::size_t m = a.rows(), n = a.cols();
    const RrefResult red = rref(a.hstack(MatrixGF::identity(a.field(), m)));
    // Pivots inside the first n columns are exactly the rank of A.
    std::size_t rank_a = 0;
    for (std::size_t c : red.pivots)
        if (c < n) ++rank_a;
    if (rank_a < m) return std::nullopt;
    // With R = T A in RREF and T the recorded row operations, placing row j of
    // T at the j-th pivot position solves A X = I.
    MatrixGF x(a.field(), n, m);
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t pc = red.pivots[j];
        for (std::size_t c = 0; c < m; ++c) x.at(pc, c) = red.matrix.at(j, n + c);
    }
    return x;
}

}  // namespace galhull
