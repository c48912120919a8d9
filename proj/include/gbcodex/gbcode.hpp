#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "gbcodex/css.hpp"
#include "gbcodex/gf2poly.hpp"

namespace gbcodex {

/// GB(a, b, n): H_X = [Circ(a) | Circ(b)], H_Z = [Circ(b)^T | Circ(a)^T].
struct GbSpec {
    BinaryPolynomial a;
    BinaryPolynomial b;
    std::size_t n = 0;

    /// Throws unless n >= 1 and both generators have degree below n.
    void validate() const;
    friend bool operator==(const GbSpec&, const GbSpec&) = default;
};

/// GB(1 + x, 1 + x^alpha, n), the form every weight-2 pair reduces to.
struct CanonicalW2 {
    std::int64_t alpha = 0;
    std::int64_t n = 0;
    // Generators were exchanged because only the second exponent was a unit mod n.
    bool swapped = false;
    // alpha was replaced by n - alpha to land in [1, n/2].
    bool mirrored = false;

    GbSpec spec() const;
};

/// Raised when a weight-2 pair has no canonical form (neither exponent is a unit mod n).
class NotReducible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

CssCode build(const GbSpec& spec);
CssCode build(const CanonicalW2& canonical);

/// 2 deg gcd(a, b, x^n - 1).
std::size_t dimension_formula(const GbSpec& spec);

/// Multiplies each generator by the monomial that clears its lowest exponent.
GbSpec shift_normalize(const GbSpec& spec);

/// alpha = v * u^{-1} mod n for GB(1 + x^u, 1 + x^v, n).
///
/// When u is not a unit but v is, the generators are swapped first. Throws
/// NotReducible when neither is a unit, or when the result would be alpha = 0
/// (v = 0 mod n makes the second generator vanish).
CanonicalW2 canonicalize_w2(std::int64_t u, std::int64_t v, std::int64_t n, bool mirror = false);

/// Shift-normalizes and, if both generators then have weight 2, canonicalizes.
/// Returns nullopt for specs that are not weight-2 pairs.
std::optional<CanonicalW2> try_canonicalize(const GbSpec& spec, bool mirror = false);

/// Modular inverse; nullopt when gcd(a, m) != 1.
std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace gbcodex
