#ifndef GALHULL_LCD_SEARCH_HPP
#define GALHULL_LCD_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "galhull/code.hpp"

namespace galhull {

enum class LcdStrategy {
    ExhaustiveUnits,              // all of (F_q^*)^k in lexicographic encoding order
    RestrictedSubfieldComplement, // all of (F_q \ F_{p^m})^k in lexicographic order
    SeededRandom,                 // i.i.d. uniform draws from (F_q^*)^k up to a budget
};

struct LcdSearchConfig {
    LcdStrategy strategy = LcdStrategy::ExhaustiveUnits;
    unsigned subfield_degree = 1;    // m; restricted strategy only, needs m | e and p^e - p^ell - p^m >= 2
    std::uint64_t budget = 100000;   // random strategy only
    std::uint64_t seed = 0;          // random strategy only
};

struct LcdSearchResult {
    bool found = false;
    bool exhausted = false;          // the strategy's whole domain was tried without success
    std::uint64_t evaluations = 0;   // number of f_eval calls
    std::vector<FieldElement> x;     // certifying diagonal scalars (when found)
    std::optional<MonomialTransform> transform;  // standard-form permutation + diag(x, 1, ..., 1)
    std::optional<LinearCode> code;              // the certified LCD code (when found)
};

/// det(diag(x_1^{1+p^ell}, ..., x_k^{1+p^ell}) + B sigma^ell(B^T)), evaluated
/// numerically. This equals det(G_x sigma^ell(G_x^T)) for the scaled
/// standard-form generator G_x = (diag(x) | B).
FieldElement f_eval(const MatrixGF& b, std::span<const FieldElement> x, GaloisLevel ell);

/// Searches for a monomial transform making the code ell-Galois LCD. The code
/// is put in standard form (I_k | B) and candidates x are enumerated in the
/// strategy's canonical order; the first x with f_eval(B, x, ell) != 0 wins.
/// For q > 4 the exhaustive-units strategy is guaranteed to succeed; exhausting
/// it there throws std::logic_error. For q <= 4 exhaustion is a legitimate
/// outcome and is reported.
LcdSearchResult lcd_equivalent_search(const LinearCode& c, GaloisLevel ell, const LcdSearchConfig& cfg);

/// Re-derives the certificate: the transform maps the original onto the result
/// code, the result is LCD, and (within the enumeration budget) the weight
/// distributions agree.
bool verify_lcd_equivalence(const LcdSearchResult& result, const LinearCode& original, GaloisLevel ell);

}  // namespace galhull

#endif
