#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gbcodex {

/// Polynomial over GF(2), stored as packed coefficient words.
///
/// Bit i of the packed storage holds the coefficient of x^i. Trailing zero
/// words are trimmed so that equal polynomials compare equal regardless of
/// how they were built.
class BinaryPolynomial {
public:
    BinaryPolynomial() = default;

    static BinaryPolynomial zero() { return {}; }
    static BinaryPolynomial one() { return monomial(0); }
    static BinaryPolynomial monomial(std::size_t exponent);
    static BinaryPolynomial from_support(const std::vector<std::size_t>& exponents);
    // x^n - 1, which is x^n + 1 over GF(2).
    static BinaryPolynomial x_pow_n_minus_one(std::size_t n);

    bool coefficient(std::size_t i) const;
    void toggle(std::size_t i);

    // Empty for the zero polynomial.
    std::optional<std::size_t> degree() const;
    std::optional<std::size_t> lowest_exponent() const;
    std::size_t weight() const;
    bool is_zero() const { return words_.empty(); }
    std::vector<std::size_t> support() const;

    BinaryPolynomial& operator+=(const BinaryPolynomial& other);
    friend BinaryPolynomial operator+(BinaryPolynomial lhs, const BinaryPolynomial& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

    // "1+x^5" style, exponents ascending; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void trim();

    std::vector<std::uint64_t> words_;
};

/// Parse error carrying the 0-based character offset of the offending token.
class PolynomialParseError : public std::invalid_argument {
public:
    PolynomialParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Grammar: term ("+" term)*, term := "0" | "1" | "x" | "x^" int.
/// Repeated terms cancel, as they would over GF(2).
BinaryPolynomial parse_polynomial(std::string_view text);

BinaryPolynomial add(const BinaryPolynomial& p, const BinaryPolynomial& q);

/// p(x) reduced modulo x^n - 1 (exponents folded mod n).
BinaryPolynomial reduce_mod(const BinaryPolynomial& p, std::size_t n);

BinaryPolynomial mul_mod(const BinaryPolynomial& p, const BinaryPolynomial& q, std::size_t n);

/// Full (non-modular) product.
BinaryPolynomial multiply(const BinaryPolynomial& p, const BinaryPolynomial& q);

struct DivisionResult {
    BinaryPolynomial quotient;
    BinaryPolynomial remainder;
};

DivisionResult divide(const BinaryPolynomial& dividend, const BinaryPolynomial& divisor);

/// Euclid. Throws std::domain_error("gcd undefined") when both inputs are zero.
BinaryPolynomial gcd(const BinaryPolynomial& p, const BinaryPolynomial& q);

/// gcd(gcd(a, b), x^n - 1).
BinaryPolynomial gcd_with_cyclic(const BinaryPolynomial& a, const BinaryPolynomial& b, std::size_t n);

/// p(x^k) mod x^n - 1: exponent i maps to i*k mod n, colliding terms cancel.
BinaryPolynomial substitute_power(const BinaryPolynomial& p, std::size_t k, std::size_t n);

}  // namespace gbcodex
