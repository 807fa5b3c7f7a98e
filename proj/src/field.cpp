#include "galhull/field.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace galhull {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), coefficients constant term first.
using Poly = std::vector<unsigned>;

std::size_t poly_degree(const Poly& f) {
    std::size_t d = f.size();
    while (d > 0 && f[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;
}

bool poly_is_zero(const Poly& f) {
    return std::all_of(f.begin(), f.end(), [](unsigned c) { return c == 0; });
}

// Remainder of f modulo a monic divisor g of degree >= 1.
Poly poly_rem(Poly f, const Poly& g, unsigned p) {
    const std::size_t dg = poly_degree(g);
    while (!poly_is_zero(f)) {
        const std::size_t df = poly_degree(f);
        if (df < dg) break;
        const std::uint64_t c = f[df];
        const std::size_t shift = df - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            const std::uint64_t sub = (c * g[i]) % p;
            f[shift + i] = static_cast<unsigned>((f[shift + i] + p - sub) % p);
        }
    }
    return f;
}

bool poly_is_irreducible(const Poly& f, unsigned p, unsigned degree) {
    if (degree == 1) return true;
    // Trial division by every monic polynomial of degree 1..degree/2.
    for (unsigned d = 1; 2 * d <= degree; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            std::uint64_t t = idx;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = static_cast<unsigned>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_is_zero(poly_rem(f, g, p))) return false;
        }
    }
    return true;
}

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> fs;
    for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

FieldPtr FieldSpec::make(unsigned p, unsigned e, std::optional<std::vector<unsigned>> modulus) {
    if (!is_prime(p)) throw CodeError("E_NONPRIME_CHARACTERISTIC", "p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw CodeError("E_BAD_DEGREE", "extension degree must be at least 1");

    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > (1ull << 16))
            throw CodeError("E_FIELD_TOO_LARGE", "p^e exceeds the supported bound 2^16");
    }

    std::vector<unsigned> mod;
    if (modulus) {
        mod = std::move(*modulus);
        if (mod.size() != e + 1)
            throw CodeError("E_BAD_MODULUS", "modulus must have exactly e+1 coefficients");
        for (unsigned c : mod)
            if (c >= p) throw CodeError("E_BAD_MODULUS", "modulus coefficient out of range [0, p)");
        if (mod[e] != 1) throw CodeError("E_BAD_MODULUS", "modulus must be monic");
        if (!poly_is_irreducible(mod, p, e))
            throw CodeError("E_BAD_MODULUS", "modulus is reducible over GF(p)");
    } else {
        // Lexicographically smallest monic irreducible, coefficient tuples
        // (c0, c1, ..., c_{e-1}) compared with the constant term first.
        std::uint64_t count = 1;
        for (unsigned i = 0; i < e; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<unsigned> cand(e + 1, 0);
            std::uint64_t t = idx;
            for (unsigned i = 0; i < e; ++i) {
                // c0 is the most significant position of the tuple order
                unsigned digit_pos = e - 1 - i;
                cand[digit_pos] = static_cast<unsigned>(t % p);
                t /= p;
            }
            cand[e] = 1;
            if (poly_is_irreducible(cand, p, e)) {
                mod = std::move(cand);
                break;
            }
        }
    }

    return FieldPtr(new FieldSpec(p, e, std::move(mod)));
}

FieldSpec::FieldSpec(unsigned p, unsigned e, std::vector<unsigned> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e_; ++i) q *= p_;
    q_ = static_cast<unsigned>(q);
    build_tables();
}

bool FieldSpec::same(const FieldSpec& other) const noexcept {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
}

FieldElement FieldSpec::element(unsigned value) const {
    if (value >= q_)
        throw CodeError("E_BAD_ENCODING",
                        "value " + std::to_string(value) + " is not an element encoding of a field of order " +
                            std::to_string(q_));
    return FieldElement{value};
}

void FieldSpec::check_element(FieldElement a) const {
    if (a.value >= q_)
        throw CodeError("E_FIELD_MISMATCH", "element encoding " + std::to_string(a.value) +
                                                " is out of range for a field of order " + std::to_string(q_));
}

void FieldSpec::check_level(GaloisLevel ell) const {
    if (ell.ell >= e_)
        throw CodeError("E_BAD_LEVEL", "Galois level " + std::to_string(ell.ell) +
                                           " is outside [0, e-1] for e = " + std::to_string(e_));
}

unsigned FieldSpec::mul_encoded(unsigned a, unsigned b) const {
    // Convolve base-p digit vectors and reduce modulo the modulus polynomial.
    unsigned da[16], db[16];
    unsigned ta = a, tb = b;
    for (unsigned i = 0; i < e_; ++i) {
        da[i] = ta % p_;
        ta /= p_;
        db[i] = tb % p_;
        tb /= p_;
    }
    std::uint64_t prod[31] = {0};
    for (unsigned i = 0; i < e_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < e_; ++j) prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
    }
    for (unsigned d = 2 * e_ - 2; d >= e_ && d < 31; --d) {
        const std::uint64_t c = prod[d] % p_;
        prod[d] = 0;
        if (c == 0) continue;
        // x^e = -(m_0 + m_1 x + ... + m_{e-1} x^{e-1})
        for (unsigned t = 0; t < e_; ++t) prod[t + d - e_] += c * (p_ - modulus_[t] % p_);
    }
    unsigned out = 0;
    for (unsigned i = e_; i-- > 0;) out = out * p_ + static_cast<unsigned>(prod[i] % p_);
    return out;
}

unsigned FieldSpec::pow_encoded(unsigned a, std::uint64_t n) const {
    unsigned result = 1;
    unsigned base = a;
    while (n > 0) {
        if (n & 1) result = mul_encoded(result, base);
        base = mul_encoded(base, base);
        n >>= 1;
    }
    return result;
}

void FieldSpec::build_tables() {
    const unsigned q1 = q_ - 1;
    // Find the smallest generator of the multiplicative group.
    const auto factors = prime_factors(q1);
    unsigned gen = 1;
    for (unsigned cand = 1; cand < q_; ++cand) {
        bool ok = true;
        for (unsigned f : factors) {
            if (pow_encoded(cand, q1 / f) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = cand;
            break;
        }
    }
    exp_.assign(q1, 0);
    log_.assign(q_, 0);
    unsigned cur = 1;
    for (unsigned i = 0; i < q1; ++i) {
        exp_[i] = static_cast<std::uint16_t>(cur);
        log_[cur] = static_cast<std::uint16_t>(i);
        cur = mul_encoded(cur, gen);
    }
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const {
    check_element(a);
    check_element(b);
    if (p_ == 2) return FieldElement{static_cast<unsigned>(a.value ^ b.value)};
    unsigned ta = a.value, tb = b.value, out = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        out += ((ta % p_ + tb % p_) % p_) * mult;
        mult *= p_;
        ta /= p_;
        tb /= p_;
    }
    return FieldElement{out};
}

FieldElement FieldSpec::neg(FieldElement a) const {
    check_element(a);
    if (p_ == 2) return a;
    unsigned ta = a.value, out = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        out += ((p_ - ta % p_) % p_) * mult;
        mult *= p_;
        ta /= p_;
    }
    return FieldElement{out};
}

FieldElement FieldSpec::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
    check_element(a);
    check_element(b);
    if (a.value == 0 || b.value == 0) return zero();
    const unsigned q1 = q_ - 1;
    const unsigned s = (static_cast<unsigned>(log_[a.value]) + log_[b.value]) % q1;
    return FieldElement{exp_[s]};
}

FieldElement FieldSpec::inv(FieldElement a) const {
    check_element(a);
    if (a.value == 0) throw CodeError("E_DIV_ZERO", "inversion of the zero element");
    const unsigned q1 = q_ - 1;
    return FieldElement{exp_[(q1 - log_[a.value]) % q1]};
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t n) const {
    check_element(a);
    if (a.value == 0) return n == 0 ? one() : zero();
    const unsigned q1 = q_ - 1;
    const std::uint64_t s = (static_cast<std::uint64_t>(log_[a.value]) * (n % q1)) % q1;
    return FieldElement{exp_[s]};
}

FieldElement FieldSpec::frobenius(FieldElement a, GaloisLevel ell) const {
    check_level(ell);
    return frobenius_iter(a, ell.ell);
}

FieldElement FieldSpec::frobenius_iter(FieldElement a, unsigned t) const {
    check_element(a);
    t %= e_;
    if (t == 0 || a.value <= 1) return a;
    std::uint64_t pe = 1;
    for (unsigned i = 0; i < t; ++i) pe *= p_;
    return pow(a, pe);
}

FieldElement FieldSpec::galois_inner(std::span<const FieldElement> x, std::span<const FieldElement> y,
                                     GaloisLevel ell) const {
    check_level(ell);
    if (x.size() != y.size())
        throw CodeError("E_LENGTH_MISMATCH", "vectors of lengths " + std::to_string(x.size()) + " and " +
                                                 std::to_string(y.size()) + " in an inner product");
    FieldElement acc = zero();
    for (std::size_t i = 0; i < x.size(); ++i) acc = add(acc, mul(x[i], frobenius_iter(y[i], ell.ell)));
    return acc;
}

}  // namespace galhull
