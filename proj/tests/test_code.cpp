#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galhull/code.hpp"
#include "helpers.hpp"

using namespace galhull;
using galhull::testing::Rng;

namespace {

FieldPtr f2() { return FieldSpec::make(2, 1); }
FieldPtr f3() { return FieldSpec::make(3, 1); }
FieldPtr f4() { return FieldSpec::make(2, 2, std::vector<unsigned>{1, 1, 1}); }
FieldPtr f8() { return FieldSpec::make(2, 3, std::vector<unsigned>{1, 1, 0, 1}); }
FieldPtr f9() { return FieldSpec::make(3, 2); }

// [4,2] code over GF(8) whose level-1 Gram is [[0,4],[0,7]].
LinearCode f8_code() {
    return LinearCode::from_rows(MatrixGF(f8(), 2, 4, {1, 1, 3, 3, 0, 5, 1, 0}));
}

// Self-orthogonal [4,2] ternary code (every generator inner product vanishes).
LinearCode t_selforth() {
    return LinearCode::from_rows(MatrixGF(f3(), 2, 4, {1, 0, 1, 1, 0, 1, 1, 2}));
}

// Euclidean LCD [4,1] ternary repetition code.
LinearCode t_lcd() { return LinearCode::from_rows(MatrixGF(f3(), 1, 4, {1, 1, 1, 1})); }

LinearCode f4_repetition() { return LinearCode::from_rows(MatrixGF(f4(), 1, 2, {1, 1})); }

std::vector<GaloisLevel> all_levels(const FieldSpec& f) {
    std::vector<GaloisLevel> out;
    for (unsigned ell = 0; ell < f.degree(); ++ell) out.push_back(GaloisLevel{ell});
    return out;
}

}  // namespace

TEST_CASE("construction and canonical form") {
    auto f = f3();
    const LinearCode full = LinearCode::from_rows(MatrixGF::identity(f, 3));
    CHECK(full.dimension() == 3);
    CHECK(full.generator() == MatrixGF::identity(f, 3));

    CHECK(f8_code().dimension() == 2);
    CHECK(f8_code().length() == 4);

    auto fb = f2();
    const LinearCode dup = LinearCode::from_rows(MatrixGF(fb, 2, 3, {1, 1, 1, 1, 1, 1}));
    CHECK(dup.dimension() == 1);

    CHECK_THROWS_AS(LinearCode::from_rows(MatrixGF(f, 2, 0)), CodeError);

    // canonical equality: same row space, different spanning sets
    const LinearCode a = LinearCode::from_rows(MatrixGF(f, 2, 3, {1, 1, 0, 0, 1, 1}));
    const LinearCode b = LinearCode::from_rows(MatrixGF(f, 2, 3, {2, 2, 0, 1, 2, 1}));
    CHECK(a == b);
}

TEST_CASE("galois dual") {
    auto f = f3();
    const LinearCode full = LinearCode::from_rows(MatrixGF::identity(f, 3));
    CHECK(dual_galois(full, GaloisLevel{0}).dimension() == 0);

    // Hermitian self-dual repetition code over GF(4)
    const LinearCode rep = f4_repetition();
    CHECK(dual_galois(rep, GaloisLevel{1}) == rep);

    // dual rows annihilate the generator under the form, random codes
    Rng rng(21);
    auto f9p = f9();
    for (int it = 0; it < 50; ++it) {
        const std::size_t n = 1 + rng.below(7);
        const LinearCode c = testing::random_code(f9p, n, 1 + rng.below(n), rng);
        for (GaloisLevel ell : all_levels(*f9p)) {
            const LinearCode d = dual_galois(c, ell);
            CHECK(d.dimension() == n - c.dimension());
            for (std::size_t i = 0; i < c.dimension(); ++i)
                for (std::size_t j = 0; j < d.dimension(); ++j)
                    CHECK(f9p->galois_inner(c.generator().row(i), d.generator().row(j), ell).value == 0);
        }
    }
}

TEST_CASE("double dual identity") {
    Rng rng(22);
    const FieldPtr fields[] = {f4(), f8(), f9()};
    for (const auto& f : fields) {
        const unsigned e = f->degree();
        for (int it = 0; it < 25; ++it) {
            const std::size_t n = 1 + rng.below(6);
            const LinearCode c = testing::random_code(f, n, 1 + rng.below(n), rng);
            for (GaloisLevel ell : all_levels(*f))
                for (GaloisLevel fl : all_levels(*f)) {
                    const LinearCode dd = dual_galois(dual_galois(c, ell), fl);
                    const unsigned t = (2 * e - ell.ell - fl.ell) % e;
                    const LinearCode mapped = LinearCode::from_rows(c.generator().frobenius(GaloisLevel{t}));
                    CHECK(dd == mapped);
                }
            CHECK(dual_galois(dual_galois(c, GaloisLevel{0}), GaloisLevel{0}) == c);
            if (e % 2 == 0) {
                const GaloisLevel half{e / 2};
                CHECK(dual_galois(dual_galois(c, half), half) == c);
            }
        }
    }
}

TEST_CASE("hull of the known codes") {
    const HullReport rep = hull(f8_code(), GaloisLevel{1});
    CHECK(rep.h == 1);
    CHECK(rep.r == 1);
    CHECK(rep.hull == testing::brute_hull(f8_code(), GaloisLevel{1}));

    // gram of the canonical generator has rank 1 regardless of basis
    CHECK(rank(rep.gram) == 1);

    CHECK(hull(t_selforth(), GaloisLevel{0}).h == 2);  // the whole code
    CHECK(hull(t_selforth(), GaloisLevel{0}).hull == t_selforth());
    CHECK(hull(t_lcd(), GaloisLevel{0}).h == 0);
}

TEST_CASE("structured generator shape") {
    Rng rng(23);
    const FieldPtr fields[] = {f3(), f4(), f8(), f9()};
    for (const auto& f : fields) {
        for (int it = 0; it < 30; ++it) {
            const std::size_t n = 1 + rng.below(7);
            const LinearCode c = testing::random_code(f, n, 1 + rng.below(n), rng);
            for (GaloisLevel ell : all_levels(*f)) {
                const HullReport rep = hull(c, ell);
                const std::size_t k = c.dimension();
                CHECK(rep.h + rep.r == k);
                CHECK(rank(rep.gram) == rep.r);
                CHECK(rep.structured_gen.rows() == k);
                CHECK(LinearCode::from_rows(rep.structured_gen) == c);
                if (rep.h > 0)
                    CHECK(LinearCode::from_rows(rep.structured_gen.submatrix(0, 0, rep.h, n)) == rep.hull);

                const MatrixGF g0 = gram_matrix(rep.structured_gen, ell);
                // leading h columns vanish, the trailing r columns have rank r
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < rep.h; ++j) CHECK(g0.at(i, j).value == 0);
                CHECK(rank(g0.submatrix(0, rep.h, k, rep.r)) == rep.r);

                // Euclidean / Hermitian specialization: the whole top block is
                // zero and the trailing square block is invertible.
                const bool symmetric_level =
                    ell.ell == 0 || (f->degree() % 2 == 0 && ell.ell == f->degree() / 2);
                if (symmetric_level) {
                    for (std::size_t i = 0; i < rep.h; ++i)
                        for (std::size_t j = rep.h; j < k; ++j) CHECK(g0.at(i, j).value == 0);
                    CHECK(det(g0.submatrix(rep.h, rep.h, rep.r, rep.r)).value != 0);
                }
            }
        }
    }
}

TEST_CASE("hull dimension from the gram rank for any generator") {
    Rng rng(24);
    const FieldPtr fields[] = {f2(), f3(), f4(), f8(), f9()};
    for (const auto& f : fields) {
        for (int it = 0; it < 20; ++it) {
            const std::size_t n = 1 + rng.below(8);
            const LinearCode c = testing::random_nonzero_code(f, n, 1 + rng.below(n), rng);
            for (GaloisLevel ell : all_levels(*f)) {
                const std::size_t h = hull(c, ell).h;
                for (int alt = 0; alt < 3; ++alt) {
                    const MatrixGF basis_change = testing::random_invertible(f, c.dimension(), rng);
                    const MatrixGF g = basis_change * c.generator();
                    CHECK(c.dimension() - rank(gram_matrix(g, ell)) == h);
                }
            }
        }
    }
}

TEST_CASE("hull equals the enumerated hull on small codes") {
    Rng rng(25);
    const FieldPtr fields[] = {f2(), f3(), f4(), f8(), f9()};
    for (const auto& f : fields) {
        for (int it = 0; it < 20; ++it) {
            const std::size_t n = 1 + rng.below(6);
            std::size_t kmax = 0;
            std::uint64_t size = 1;
            while (kmax < n && size * f->order() <= 4096) {
                size *= f->order();
                ++kmax;
            }
            if (kmax == 0) continue;
            const LinearCode c = testing::random_code(f, n, 1 + rng.below(kmax), rng);
            for (GaloisLevel ell : all_levels(*f))
                CHECK(hull(c, ell).hull == testing::brute_hull(c, ell));
        }
    }
}

TEST_CASE("lcd, self-orthogonal and self-dual predicates") {
    CHECK(is_lcd(t_lcd(), GaloisLevel{0}));
    CHECK_FALSE(is_lcd(t_selforth(), GaloisLevel{0}));
    CHECK_FALSE(is_lcd(f4_repetition(), GaloisLevel{1}));

    CHECK(is_self_orthogonal(f4_repetition(), GaloisLevel{1}));
    CHECK(is_self_orthogonal(t_selforth(), GaloisLevel{0}));
    CHECK_FALSE(is_self_orthogonal(t_lcd(), GaloisLevel{0}));
    CHECK_FALSE(is_self_orthogonal(LinearCode::from_rows(MatrixGF::identity(f3(), 3)), GaloisLevel{0}));

    CHECK(is_self_dual(f4_repetition(), GaloisLevel{1}));
    CHECK_FALSE(is_self_dual(LinearCode::from_rows(MatrixGF(f3(), 1, 2, {1, 1})), GaloisLevel{0}));
    CHECK_FALSE(is_self_dual(t_lcd(), GaloisLevel{0}));  // 2k != n

    // the zero code is LCD and self-orthogonal at once
    const LinearCode zero = LinearCode::from_rows(MatrixGF(f3(), 0, 4));
    CHECK(zero.dimension() == 0);
    CHECK(is_lcd(zero, GaloisLevel{0}));
    CHECK(is_self_orthogonal(zero, GaloisLevel{0}));
    CHECK_FALSE(is_self_dual(zero, GaloisLevel{0}));
    CHECK(hull(zero, GaloisLevel{0}).h == 0);

    // predicates agree with the hull dimension on random codes
    Rng rng(26);
    const FieldPtr fields[] = {f3(), f4(), f8(), f9()};
    for (const auto& f : fields) {
        for (int it = 0; it < 30; ++it) {
            const std::size_t n = 1 + rng.below(6);
            const LinearCode c = testing::random_code(f, n, 1 + rng.below(n), rng);
            for (GaloisLevel ell : all_levels(*f)) {
                const HullReport rep = hull(c, ell);
                CHECK(is_lcd(c, ell) == (rep.h == 0));
                CHECK(is_self_orthogonal(c, ell) == (rep.h == c.dimension()));
                CHECK(is_self_dual(c, ell) == (c == dual_galois(c, ell)));
            }
        }
    }
}

TEST_CASE("monomial transforms") {
    const LinearCode c = t_selforth();
    CHECK(apply_monomial(c, MonomialTransform::identity(4)) == c);

    // permutations leave the hull dimension alone
    Rng rng(27);
    for (int it = 0; it < 20; ++it) {
        MonomialTransform t = MonomialTransform::identity(4);
        t.perm = testing::random_permutation(4, rng);
        CHECK(hull(apply_monomial(t_lcd(), t), GaloisLevel{0}).h == 0);
        CHECK(hull(apply_monomial(c, t), GaloisLevel{0}).h == 2);
    }

    // GF(4) repetition code keeps Hermitian hull dimension 1 under every
    // diagonal rescaling
    for (unsigned a = 1; a < 4; ++a)
        for (unsigned b = 1; b < 4; ++b) {
            MonomialTransform t = MonomialTransform::identity(2);
            t.diag = {FieldElement{a}, FieldElement{b}};
            CHECK(hull(apply_monomial(f4_repetition(), t), GaloisLevel{1}).h == 1);
        }

    MonomialTransform bad = MonomialTransform::identity(3);
    CHECK_THROWS_AS(apply_monomial(c, bad), CodeError);
    MonomialTransform zero_diag = MonomialTransform::identity(4);
    zero_diag.diag[2] = FieldElement{0};
    CHECK_THROWS_AS(apply_monomial(c, zero_diag), CodeError);
    MonomialTransform not_perm = MonomialTransform::identity(4);
    not_perm.perm[0] = 1;
    CHECK_THROWS_AS(apply_monomial(c, not_perm), CodeError);
}

TEST_CASE("form and hull invariance under permutations") {
    Rng rng(28);
    const FieldPtr fields[] = {f3(), f8(), f9()};
    for (const auto& f : fields) {
        for (int it = 0; it < 30; ++it) {
            const std::size_t n = 2 + rng.below(6);
            const auto perm = testing::random_permutation(n, rng);
            // the form itself is invariant
            std::vector<FieldElement> x(n), y(n), px(n), py(n);
            for (std::size_t j = 0; j < n; ++j) {
                x[j] = testing::random_element(*f, rng);
                y[j] = testing::random_element(*f, rng);
            }
            for (std::size_t j = 0; j < n; ++j) {
                px[j] = x[perm[j]];
                py[j] = y[perm[j]];
            }
            for (GaloisLevel ell : all_levels(*f))
                CHECK(f->galois_inner(px, py, ell) == f->galois_inner(x, y, ell));

            // and so is the hull dimension
            const LinearCode c = testing::random_code(f, n, 1 + rng.below(n), rng);
            MonomialTransform t = MonomialTransform::identity(n);
            t.perm = perm;
            for (GaloisLevel ell : all_levels(*f))
                CHECK(hull(apply_monomial(c, t), ell).h == hull(c, ell).h);
        }
    }
}

TEST_CASE("ternary hull dimension is monomial invariant") {
    Rng rng(29);
    auto f = f3();
    for (int it = 0; it < 60; ++it) {
        const std::size_t n = 1 + rng.below(7);
        const LinearCode c = testing::random_code(f, n, 1 + rng.below(n), rng);
        MonomialTransform t;
        t.perm = testing::random_permutation(n, rng);
        t.diag.resize(n);
        for (auto& d : t.diag) d = testing::random_unit(*f, rng);
        CHECK(hull(apply_monomial(c, t), GaloisLevel{0}).h == hull(c, GaloisLevel{0}).h);
    }
}

TEST_CASE("parity check") {
    auto f = f3();
    const LinearCode full = LinearCode::from_rows(MatrixGF::identity(f, 3));
    CHECK(parity_check(full).rows() == 0);

    const LinearCode rep3 = LinearCode::from_rows(MatrixGF(f2(), 1, 3, {1, 1, 1}));
    const MatrixGF h = parity_check(rep3);
    CHECK(h.rows() == 2);
    // brute force: its span is exactly the even-weight vectors
    const auto span = testing::span_vectors(h);
    CHECK(span.size() == 4);
    for (const auto& v : span) CHECK((v[0] + v[1] + v[2]) % 2 == 0);

    // an LCD code and its Euclidean dual together span everything
    CHECK(rank(t_lcd().generator().vstack(parity_check(t_lcd()))) == 4);

    Rng rng(30);
    for (int it = 0; it < 30; ++it) {
        const std::size_t n = 1 + rng.below(7);
        const LinearCode c = testing::random_code(f, n, 1 + rng.below(n), rng);
        const MatrixGF hh = parity_check(c);
        CHECK((c.generator() * hh.transposed()).is_zero());
        CHECK(rank(hh) == n - c.dimension());
        // dim(C + C-perp) = n - dim of the Euclidean hull
        CHECK(rank(c.generator().vstack(hh)) == n - hull(c, GaloisLevel{0}).h);
    }
}

TEST_CASE("standard form") {
    auto f = f3();
    const LinearCode ready = LinearCode::from_rows(MatrixGF(f, 2, 4, {1, 0, 2, 1, 0, 1, 1, 1}));
    const StandardForm sf = standard_form(ready);
    CHECK(sf.colperm == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(sf.b == MatrixGF(f, 2, 2, {2, 1, 1, 1}));

    const LinearCode shifted = LinearCode::from_rows(MatrixGF(f, 1, 2, {0, 1}));
    const StandardForm sf2 = standard_form(shifted);
    CHECK(sf2.colperm == std::vector<std::size_t>{1, 0});
    CHECK(sf2.b == MatrixGF(f, 1, 1, {0}));

    // permuted generator is (I | B) and spans the permuted code
    const LinearCode c = f8_code();
    const StandardForm sf3 = standard_form(c);
    CHECK(sf3.b.rows() == 2);
    CHECK(sf3.b.cols() == 2);
    MonomialTransform t = MonomialTransform::identity(4);
    t.perm = sf3.colperm;
    const LinearCode permuted = apply_monomial(c, t);
    const MatrixGF expected = MatrixGF::identity(f8(), 2).hstack(sf3.b);
    CHECK(LinearCode::from_rows(expected) == permuted);

    CHECK_THROWS_AS(standard_form(LinearCode::from_rows(MatrixGF(f, 0, 3))), CodeError);
}

TEST_CASE("weight distribution") {
    const LinearCode zero = LinearCode::from_rows(MatrixGF(f3(), 0, 4));
    CHECK(weight_distribution(zero) == std::vector<std::uint64_t>{1, 0, 0, 0, 0});

    const LinearCode rep3 = LinearCode::from_rows(MatrixGF(f2(), 1, 3, {1, 1, 1}));
    CHECK(weight_distribution(rep3) == std::vector<std::uint64_t>{1, 0, 0, 1});

    Rng rng(31);
    auto f = f4();
    for (int it = 0; it < 15; ++it) {
        const std::size_t n = 1 + rng.below(6);
        const LinearCode c = testing::random_code(f, n, 1 + rng.below(n), rng);
        const auto dist = weight_distribution(c);
        CHECK(dist[0] == 1);
        std::uint64_t sum = 0, expected = 1;
        for (auto v : dist) sum += v;
        for (std::size_t i = 0; i < c.dimension(); ++i) expected *= f->order();
        CHECK(sum == expected);

        MonomialTransform t;
        t.perm = testing::random_permutation(n, rng);
        t.diag.resize(n);
        for (auto& d : t.diag) d = testing::random_unit(*f, rng);
        CHECK(weight_distribution(apply_monomial(c, t)) == dist);
    }

    // enumeration budget: 4^11 > 2^20
    const LinearCode big = LinearCode::from_rows(MatrixGF::identity(f4(), 11));
    CHECK_THROWS_AS(weight_distribution(big), CodeError);
}
