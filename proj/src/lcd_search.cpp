#include "galhull/lcd_search.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace galhull {

namespace {

std::uint64_t upow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

LcdSearchResult make_found(const LinearCode& c, GaloisLevel ell, const StandardForm& sf,
                           std::vector<FieldElement> x, std::uint64_t evaluations) {
    const FieldSpec& f = *c.field();
    const std::size_t n = c.length(), k = c.dimension();
    MonomialTransform t;
    t.perm = sf.colperm;
    t.diag.assign(n, f.one());
    for (std::size_t j = 0; j < k; ++j) t.diag[j] = x[j];

    LinearCode certified = apply_monomial(c, t);
    if (!is_lcd(certified, ell))
        throw std::logic_error("nonvanishing point does not certify an LCD code");

    LcdSearchResult res;
    res.found = true;
    res.exhausted = false;
    res.evaluations = evaluations;
    res.x = std::move(x);
    res.transform = std::move(t);
    res.code = std::move(certified);
    return res;
}

}  // namespace

FieldElement f_eval(const MatrixGF& b, std::span<const FieldElement> x, GaloisLevel ell) {
    const FieldSpec& f = *b.field();
    f.check_level(ell);
    if (x.size() != b.rows())
        throw CodeError("E_DIM_MISMATCH", "diagonal vector length " + std::to_string(x.size()) +
                                              " does not match B with " + std::to_string(b.rows()) + " rows");
    MatrixGF m = b * b.transposed().frobenius(ell);
    for (std::size_t i = 0; i < m.rows(); ++i)
        m.at(i, i) = f.add(m.at(i, i), f.mul(x[i], f.frobenius(x[i], ell)));
    return det(m);
}

LcdSearchResult lcd_equivalent_search(const LinearCode& c, GaloisLevel ell, const LcdSearchConfig& cfg) {
    const FieldSpec& f = *c.field();
    f.check_level(ell);
    if (c.dimension() == 0)
        throw CodeError("E_EMPTY_CODE", "the search requires a code of dimension at least 1");

    const unsigned q = f.order(), p = f.characteristic(), e = f.degree();
    const std::size_t k = c.dimension();
    const std::uint64_t pl = upow(p, ell.ell);
    if (q > 4 && 1 + pl > q - 2)
        throw std::logic_error("degree bound 1 + p^ell <= q - 2 failed although q > 4");

    const StandardForm sf = standard_form(c);

    if (cfg.strategy == LcdStrategy::SeededRandom) {
        if (cfg.budget == 0) throw CodeError("E_BAD_BUDGET", "random search needs a positive budget");
        std::mt19937_64 rng(cfg.seed);
        const std::uint64_t range = q - 1;
        const std::uint64_t limit = (UINT64_MAX / range) * range;
        auto draw_unit = [&]() {
            for (;;) {
                const std::uint64_t r = rng();
                if (r < limit) return FieldElement{static_cast<unsigned>(1 + r % range)};
            }
        };
        std::vector<FieldElement> x(k);
        std::uint64_t evaluations = 0;
        for (std::uint64_t it = 0; it < cfg.budget; ++it) {
            for (std::size_t i = 0; i < k; ++i) x[i] = draw_unit();
            ++evaluations;
            if (f_eval(sf.b, x, ell).value != 0) return make_found(c, ell, sf, x, evaluations);
        }
        LcdSearchResult res;
        res.evaluations = evaluations;
        res.exhausted = false;  // the budget ran out, the domain was not enumerated
        return res;
    }

    // Candidate coordinate domain, ascending by encoding.
    std::vector<FieldElement> domain;
    if (cfg.strategy == LcdStrategy::ExhaustiveUnits) {
        domain.reserve(q - 1);
        for (unsigned v = 1; v < q; ++v) domain.push_back(FieldElement{v});
    } else {
        const unsigned m = cfg.subfield_degree;
        if (m < 1 || m >= e || e % m != 0)
            throw CodeError("E_BAD_SUBFIELD", "restricted strategy needs 1 <= m <= e-1 with m | e");
        if (upow(p, e) < upow(p, ell.ell) + upow(p, m) + 2)
            throw CodeError("E_BAD_SUBFIELD", "restricted strategy needs p^e - p^ell - p^m >= 2");
        for (unsigned v = 0; v < q; ++v) {
            const FieldElement a{v};
            if (f.frobenius_iter(a, m) != a) domain.push_back(a);  // a outside F_{p^m}
        }
    }

    // Lexicographic tuple order: the first coordinate is the most significant.
    std::vector<std::size_t> idx(k, 0);
    std::vector<FieldElement> x(k, domain[0]);
    std::uint64_t evaluations = 0;
    for (;;) {
        ++evaluations;
        if (f_eval(sf.b, x, ell).value != 0) return make_found(c, ell, sf, x, evaluations);
        std::size_t pos = k;
        while (pos-- > 0) {
            if (++idx[pos] < domain.size()) {
                x[pos] = domain[idx[pos]];
                break;
            }
            idx[pos] = 0;
            x[pos] = domain[0];
            if (pos == 0) {
                if (cfg.strategy == LcdStrategy::ExhaustiveUnits && q > 4)
                    throw std::logic_error("exhaustive unit search failed although q > 4 guarantees success");
                LcdSearchResult res;
                res.evaluations = evaluations;
                res.exhausted = true;
                return res;
            }
        }
    }
}

bool verify_lcd_equivalence(const LcdSearchResult& result, const LinearCode& original, GaloisLevel ell) {
    if (!result.found || !result.transform || !result.code)
        throw CodeError("E_NO_RESULT", "verification requires a successful search result");

    if (!(apply_monomial(original, *result.transform) == *result.code)) return false;
    if (!is_lcd(*result.code, ell)) return false;

    // Same parameters: compare full weight enumerators when the enumeration
    // budget allows; the monomial map itself preserves weights in any case.
    std::uint64_t total = 1;
    bool within_budget = true;
    for (std::size_t i = 0; i < original.dimension(); ++i) {
        total *= original.field()->order();
        if (total > (1ull << 20)) {
            within_budget = false;
            break;
        }
    }
    if (within_budget && weight_distribution(original) != weight_distribution(*result.code)) return false;
    return true;
}

}  // namespace galhull
