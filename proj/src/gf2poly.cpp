#include "gbcodex/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

namespace gbcodex {

namespace {

constexpr std::size_t kWordBits = 64;

}  // namespace

BinaryPolynomial BinaryPolynomial::monomial(std::size_t exponent) {
    BinaryPolynomial p;
    p.toggle(exponent);
    return p;
}

BinaryPolynomial BinaryPolynomial::from_support(const std::vector<std::size_t>& exponents) {
    BinaryPolynomial p;
    for (std::size_t e : exponents) {
        p.toggle(e);
    }
    return p;
}

BinaryPolynomial BinaryPolynomial::x_pow_n_minus_one(std::size_t n) {
    BinaryPolynomial p = monomial(n);
    p.toggle(0);
    return p;
}

bool BinaryPolynomial::coefficient(std::size_t i) const {
    const std::size_t w = i / kWordBits;
    if (w >= words_.size()) {
        return false;
    }
    return (words_[w] >> (i % kWordBits)) & 1U;
}

void BinaryPolynomial::toggle(std::size_t i) {
    const std::size_t w = i / kWordBits;
    if (w >= words_.size()) {
        words_.resize(w + 1, 0);
    }
    words_[w] ^= std::uint64_t{1} << (i % kWordBits);
    trim();
}

std::optional<std::size_t> BinaryPolynomial::degree() const {
    if (words_.empty()) {
        return std::nullopt;
    }
    const std::uint64_t top = words_.back();
    return (words_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(top));
}

std::optional<std::size_t> BinaryPolynomial::lowest_exponent() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return w * kWordBits + std::countr_zero(words_[w]);
        }
    }
    return std::nullopt;
}

std::size_t BinaryPolynomial::weight() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

std::vector<std::size_t> BinaryPolynomial::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            out.push_back(w * kWordBits + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& other) {
    if (other.words_.size() > words_.size()) {
        words_.resize(other.words_.size(), 0);
    }
    for (std::size_t w = 0; w < other.words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    trim();
    return *this;
}

std::string BinaryPolynomial::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t e : support()) {
        if (!out.empty()) {
            out += '+';
        }
        if (e == 0) {
            out += '1';
        } else if (e == 1) {
            out += 'x';
        } else {
            out += "x^" + std::to_string(e);
        }
    }
    return out;
}

void BinaryPolynomial::trim() {
    while (!words_.empty() && words_.back() == 0) {
        words_.pop_back();
    }
}

BinaryPolynomial parse_polynomial(std::string_view text) {
    BinaryPolynomial result;
    std::size_t pos = 0;
    const auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };

    bool expect_term = true;
    skip_space();
    if (pos == text.size()) {
        throw PolynomialParseError("empty polynomial", pos);
    }
    while (pos < text.size()) {
        skip_space();
        if (!expect_term) {
            if (text[pos] != '+') {
                throw PolynomialParseError(std::string("expected '+' but found '") + text[pos] + "'", pos);
            }
            ++pos;
            expect_term = true;
            continue;
        }
        if (pos == text.size()) {
            break;
        }
        const char c = text[pos];
        if (c == '0' || c == '1') {
            if (pos + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
                throw PolynomialParseError("constant terms must be 0 or 1", pos);
            }
            if (c == '1') {
                result.toggle(0);
            }
            ++pos;
        } else if (c == 'x' || c == 'X') {
            ++pos;
            std::size_t exponent = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t value = 0;
                const char* begin = text.data() + pos;
                const char* end = text.data() + text.size();
                auto [ptr, ec] = std::from_chars(begin, end, value);
                if (ec != std::errc{} || ptr == begin) {
                    throw PolynomialParseError("expected exponent after '^'", pos);
                }
                pos += static_cast<std::size_t>(ptr - begin);
                exponent = value;
            }
            result.toggle(exponent);
        } else {
            throw PolynomialParseError(std::string("unexpected character '") + c + "'", pos);
        }
        expect_term = false;
        skip_space();
    }
    if (expect_term) {
        throw PolynomialParseError("dangling '+'", text.size());
    }
    return result;
}

BinaryPolynomial add(const BinaryPolynomial& p, const BinaryPolynomial& q) { return p + q; }

BinaryPolynomial reduce_mod(const BinaryPolynomial& p, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("modulus x^n - 1 needs n >= 1");
    }
    BinaryPolynomial out;
    for (std::size_t e : p.support()) {
        out.toggle(e % n);
    }
    return out;
}

BinaryPolynomial multiply(const BinaryPolynomial& p, const BinaryPolynomial& q) {
    BinaryPolynomial out;
    const auto qs = q.support();
    for (std::size_t i : p.support()) {
        for (std::size_t j : qs) {
            out.toggle(i + j);
        }
    }
    return out;
}

BinaryPolynomial mul_mod(const BinaryPolynomial& p, const BinaryPolynomial& q, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("modulus x^n - 1 needs n >= 1");
    }
    BinaryPolynomial out;
    const auto qs = q.support();
    for (std::size_t i : p.support()) {
        for (std::size_t j : qs) {
            out.toggle((i % n + j % n) % n);
        }
    }
    return out;
}

DivisionResult divide(const BinaryPolynomial& dividend, const BinaryPolynomial& divisor) {
    const auto dd = divisor.degree();
    if (!dd) {
        throw std::domain_error("division by the zero polynomial");
    }
    DivisionResult r{BinaryPolynomial{}, dividend};
    while (true) {
        const auto rd = r.remainder.degree();
        if (!rd || *rd < *dd) {
            break;
        }
        const std::size_t shift = *rd - *dd;
        r.quotient.toggle(shift);
        for (std::size_t e : divisor.support()) {
            r.remainder.toggle(e + shift);
        }
    }
    return r;
}

BinaryPolynomial gcd(const BinaryPolynomial& p, const BinaryPolynomial& q) {
    if (p.is_zero() && q.is_zero()) {
        throw std::domain_error("gcd undefined");
    }
    BinaryPolynomial a = p;
    BinaryPolynomial b = q;
    while (!b.is_zero()) {
        BinaryPolynomial r = divide(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BinaryPolynomial gcd_with_cyclic(const BinaryPolynomial& a, const BinaryPolynomial& b, std::size_t n) {
    const BinaryPolynomial modulus = BinaryPolynomial::x_pow_n_minus_one(n);
    if (a.is_zero() && b.is_zero()) {
        return modulus;
    }
    return gcd(gcd(a, b), modulus);
}

BinaryPolynomial substitute_power(const BinaryPolynomial& p, std::size_t k, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("modulus x^n - 1 needs n >= 1");
    }
    BinaryPolynomial out;
    const std::size_t km = k % n;
    for (std::size_t e : p.support()) {
        out.toggle(static_cast<std::size_t>((static_cast<unsigned __int128>(e % n) * km) % n));
    }
    return out;
}

}  // namespace gbcodex
