#ifndef GALHULL_FIELD_HPP
#define GALHULL_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "galhull/errors.hpp"

namespace galhull {

/// Element of GF(p^e), encoded as an integer in [0, q). The base-p digits
/// d0..d_{e-1} of the encoding (least significant first) are the coefficients
/// of the representative polynomial d0 + d1*a + ... + d_{e-1}*a^{e-1}, where a
/// is the residue of the modulus root. Elements carry no field reference; all
/// operations take a FieldSpec as context.
struct FieldElement {
    constexpr FieldElement() = default;
    explicit constexpr FieldElement(unsigned v) : value(static_cast<std::uint16_t>(v)) {}

    std::uint16_t value = 0;

    friend constexpr bool operator==(FieldElement, FieldElement) = default;
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Power of the Frobenius automorphism a -> a^p. Valid range is [0, e-1] for
/// the field it is used with; every operation taking a level enforces this.
struct GaloisLevel {
    constexpr GaloisLevel() = default;
    explicit constexpr GaloisLevel(unsigned v) : ell(v) {}

    unsigned ell = 0;
};

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Exact arithmetic context for GF(p^e) with q = p^e <= 2^16.
///
/// The modulus is a monic irreducible polynomial of degree e over GF(p),
/// stored as e+1 coefficients with the constant term first. Correctness is
/// defined by polynomial arithmetic modulo that polynomial; discrete log/exp
/// tables are built at construction purely as an optimization.
///
/// Immutable after construction and safe to share across threads; all
/// operations are pure.
class FieldSpec {
  public:
    /// Builds GF(p^e). When no modulus is supplied the lexicographically
    /// smallest monic irreducible polynomial of degree e is selected, with
    /// coefficient tuples compared constant term first. A supplied modulus
    /// must be monic of degree e and irreducible over GF(p).
    static FieldPtr make(unsigned p, unsigned e,
                         std::optional<std::vector<unsigned>> modulus = std::nullopt);

    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return e_; }
    unsigned order() const noexcept { return q_; }
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

    /// True when the other spec describes the same field construction
    /// (equal p, e and modulus).
    bool same(const FieldSpec& other) const noexcept;

    FieldElement zero() const noexcept { return FieldElement{}; }
    FieldElement one() const noexcept { return FieldElement{1u}; }
    /// Checked encoding; rejects values >= q.
    FieldElement element(unsigned value) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::uint64_t n) const;

    /// sigma^ell(a) = a^(p^ell) for 0 <= ell <= e-1.
    FieldElement frobenius(FieldElement a, GaloisLevel ell) const;
    /// sigma^t(a) for arbitrary t >= 0; the exponent is reduced mod e.
    FieldElement frobenius_iter(FieldElement a, unsigned t) const;

    /// <x,y>_ell = sum_i x_i * y_i^(p^ell).
    FieldElement galois_inner(std::span<const FieldElement> x,
                              std::span<const FieldElement> y, GaloisLevel ell) const;

    void check_level(GaloisLevel ell) const;

  private:
    FieldSpec(unsigned p, unsigned e, std::vector<unsigned> modulus);

    void check_element(FieldElement a) const;
    unsigned mul_encoded(unsigned a, unsigned b) const;  // polynomial semantics
    unsigned pow_encoded(unsigned a, std::uint64_t n) const;
    void build_tables();

    unsigned p_ = 0;
    unsigned e_ = 0;
    unsigned q_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<std::uint16_t> exp_;  // exp_[i] = g^i, i in [0, q-1)
    std::vector<std::uint16_t> log_;  // log_[a] for a != 0
};

}  // namespace galhull

#endif
