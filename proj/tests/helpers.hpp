#ifndef GALHULL_TEST_HELPERS_HPP
#define GALHULL_TEST_HELPERS_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "galhull/code.hpp"
#include "galhull/matrix.hpp"

namespace galhull::testing {

// Deterministic generator; all randomized tests derive from fixed seeds.
struct Rng {
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

    std::uint64_t state;
};

inline FieldElement random_element(const FieldSpec& f, Rng& rng) {
    return FieldElement{static_cast<unsigned>(rng.below(f.order()))};
}

inline FieldElement random_unit(const FieldSpec& f, Rng& rng) {
    return FieldElement{static_cast<unsigned>(1 + rng.below(f.order() - 1))};
}

inline MatrixGF random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, Rng& rng) {
    MatrixGF m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_element(*f, rng);
    return m;
}

// Random code spanned by `spanning` random rows; dimension may come out lower.
inline LinearCode random_code(const FieldPtr& f, std::size_t n, std::size_t spanning, Rng& rng) {
    return LinearCode::from_rows(random_matrix(f, spanning, n, rng));
}

// Random code with dimension at least 1.
inline LinearCode random_nonzero_code(const FieldPtr& f, std::size_t n, std::size_t spanning, Rng& rng) {
    for (;;) {
        LinearCode c = random_code(f, n, spanning, rng);
        if (c.dimension() > 0) return c;
    }
}

inline MatrixGF random_invertible(const FieldPtr& f, std::size_t k, Rng& rng) {
    for (;;) {
        MatrixGF m = random_matrix(f, k, k, rng);
        if (det(m).value != 0) return m;
    }
}

inline std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
    return p;
}

// --- independent brute-force oracles -------------------------------------

// Every vector in the row space of `rows`, enumerated by explicit message
// combinations (no RREF involved).
inline std::set<std::vector<unsigned>> span_vectors(const MatrixGF& rows) {
    const FieldSpec& f = *rows.field();
    const std::size_t k = rows.rows(), n = rows.cols();
    std::set<std::vector<unsigned>> out;
    std::vector<unsigned> msg(k, 0);
    for (;;) {
        std::vector<FieldElement> word(n, FieldElement{});
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j)
                word[j] = f.add(word[j], f.mul(FieldElement{msg[i]}, rows.at(i, j)));
        std::vector<unsigned> enc(n);
        for (std::size_t j = 0; j < n; ++j) enc[j] = word[j].value;
        out.insert(std::move(enc));
        std::size_t pos = 0;
        while (pos < k && ++msg[pos] == f.order()) msg[pos++] = 0;
        if (pos == k) break;
    }
    return out;
}

// rank via |span| = q^rank.
inline std::size_t brute_rank(const MatrixGF& rows) {
    const auto span = span_vectors(rows);
    std::size_t r = 0;
    std::uint64_t size = 1;
    while (size < span.size()) {
        size *= rows.field()->order();
        ++r;
    }
    return r;
}

// Outer matrix whose level-ell Gram is diagonal by construction: rows get
// pairwise disjoint supports, so the off-diagonal inner products vanish
// coordinatewise. Slots listed in zero_slots receive lambda_i = 0 (p equal
// entries), every other slot a nonzero lambda_i.
inline MatrixGF random_diagonal_outer(const FieldPtr& f, GaloisLevel ell, std::size_t m,
                                      const std::vector<bool>& zero_slots, Rng& rng) {
    const unsigned p = f->characteristic();
    std::vector<std::vector<FieldElement>> rows(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (zero_slots[i]) {
            const FieldElement u = random_unit(*f, rng);
            rows[i].assign(p, u);  // p * u^{1+p^ell} = 0
        } else {
            const std::size_t support = 1 + rng.below(2);
            rows[i].assign(support, FieldElement{});
            for (int attempt = 0;; ++attempt) {
                if (attempt >= 20) {
                    rows[i].assign(1, random_unit(*f, rng));  // u^{1+p^ell} is never 0
                    break;
                }
                for (auto& v : rows[i]) v = random_unit(*f, rng);
                if (f->galois_inner(rows[i], rows[i], ell).value != 0) break;
            }
        }
    }
    std::size_t total = 0;
    for (const auto& r : rows) total += r.size();
    MatrixGF a(f, m, total);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t s = 0; s < rows[i].size(); ++s) a.at(i, offset + s) = rows[i][s];
        offset += rows[i].size();
    }
    return a;
}

// Outer matrix whose level-ell Gram is upper triangular with a nonzero
// diagonal, produced by one-sided Gram-Schmidt over the (sesquilinear) form.
// Retries until the diagonal stays nonzero and the rows remain independent.
inline MatrixGF random_triangular_outer(const FieldPtr& f, GaloisLevel ell, std::size_t m,
                                        std::size_t n, Rng& rng) {
    for (;;) {
        MatrixGF a = random_matrix(f, m, n, rng);
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            for (std::size_t j = 0; j < i && ok; ++j) {
                const FieldElement bij = f->galois_inner(a.row(i), a.row(j), ell);
                const FieldElement bjj = f->galois_inner(a.row(j), a.row(j), ell);
                if (bjj.value == 0) {
                    ok = false;
                    break;
                }
                const FieldElement c = f->mul(bij, f->inv(bjj));
                for (std::size_t t = 0; t < n; ++t) a.at(i, t) = f->sub(a.at(i, t), f->mul(c, a.at(j, t)));
            }
            if (ok && f->galois_inner(a.row(i), a.row(i), ell).value == 0) ok = false;
        }
        if (!ok || rank(a) < m) continue;
        return a;
    }
}

// Hull by codeword enumeration: all codewords orthogonal (at the given level)
// to every generator row.
inline LinearCode brute_hull(const LinearCode& c, GaloisLevel ell) {
    const FieldSpec& f = *c.field();
    const std::size_t n = c.length();
    std::vector<std::vector<unsigned>> members;
    for (const auto& enc : span_vectors(c.generator())) {
        std::vector<FieldElement> word(n);
        for (std::size_t j = 0; j < n; ++j) word[j] = FieldElement{enc[j]};
        bool orthogonal = true;
        for (std::size_t i = 0; i < c.dimension() && orthogonal; ++i)
            orthogonal = f.galois_inner(c.generator().row(i), word, ell).value == 0;
        if (orthogonal) members.push_back(enc);
    }
    MatrixGF rows(c.field(), members.size(), n);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) rows.at(i, j) = FieldElement{members[i][j]};
    return LinearCode::from_rows(rows);
}

}  // namespace galhull::testing

#endif
