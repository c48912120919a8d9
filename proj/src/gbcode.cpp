#include "gbcodex/gbcode.hpp"

#include <numeric>
#include <string>

namespace gbcodex {

void GbSpec::validate() const {
    if (n == 0) {
        throw std::invalid_argument("GB code needs n >= 1");
    }
    for (const auto* p : {&a, &b}) {
        if (const auto d = p->degree(); d && *d >= n) {
            throw std::invalid_argument("polynomial too wide");
        }
    }
}

GbSpec CanonicalW2::spec() const {
    if (n < 2 || alpha < 1 || alpha >= n) {
        throw std::invalid_argument("canonical alpha must lie in [1, n-1]");
    }
    return {BinaryPolynomial::from_support({0, 1}),
            BinaryPolynomial::from_support({0, static_cast<std::size_t>(alpha)}),
            static_cast<std::size_t>(n)};
}

CssCode build(const GbSpec& spec) {
    spec.validate();
    const BitMatrix a = circulant(spec.a, spec.n);
    const BitMatrix b = circulant(spec.b, spec.n);
    return CssCode(hstack(a, b), hstack(transpose(b), transpose(a)));
}

CssCode build(const CanonicalW2& canonical) { return build(canonical.spec()); }

std::size_t dimension_formula(const GbSpec& spec) {
    spec.validate();
    const auto g = gcd_with_cyclic(spec.a, spec.b, spec.n);
    return 2 * g.degree().value_or(0);
}

namespace {

BinaryPolynomial strip_low_power(const BinaryPolynomial& p, std::size_t n) {
    const auto low = p.lowest_exponent();
    if (!low) {
        throw std::invalid_argument("shift_normalize: zero generator");
    }
    // Multiply by x^{n - low}, i.e. divide by x^low in the cyclic ring.
    BinaryPolynomial out;
    for (std::size_t e : p.support()) {
        out.toggle((e + n - *low % n) % n);
    }
    return out;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

GbSpec shift_normalize(const GbSpec& spec) {
    spec.validate();
    return {strip_low_power(spec.a, spec.n), strip_low_power(spec.b, spec.n), spec.n};
}

std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m) {
    if (m <= 0) {
        return std::nullopt;
    }
    std::int64_t old_r = mod(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1 && m != 1) {
        return std::nullopt;
    }
    return mod(old_s, m);
}

CanonicalW2 canonicalize_w2(std::int64_t u, std::int64_t v, std::int64_t n, bool mirror) {
    if (n < 2) {
        throw std::invalid_argument("canonical form needs n >= 2");
    }
    CanonicalW2 c;
    c.n = n;
    auto inv = inverse_mod(u, n);
    if (!inv) {
        if (!inverse_mod(v, n)) {
            throw NotReducible("not reducible to canonical form: neither exponent " + std::to_string(u) +
                               " nor " + std::to_string(v) + " is coprime to n = " + std::to_string(n));
        }
        std::swap(u, v);
        inv = inverse_mod(u, n);
        c.swapped = true;
    }
    c.alpha = static_cast<std::int64_t>(static_cast<__int128>(mod(v, n)) * *inv % n);
    if (c.alpha == 0) {
        throw NotReducible("not reducible to canonical form: second generator vanishes modulo x^n - 1");
    }
    if (mirror && 2 * c.alpha > n) {
        c.alpha = n - c.alpha;
        c.mirrored = true;
    }
    return c;
}

std::optional<CanonicalW2> try_canonicalize(const GbSpec& spec, bool mirror) {
    const GbSpec s = shift_normalize(spec);
    if (s.a.weight() != 2 || s.b.weight() != 2) {
        return std::nullopt;
    }
    const auto u = static_cast<std::int64_t>(*s.a.degree());
    const auto v = static_cast<std::int64_t>(*s.b.degree());
    return canonicalize_w2(u, v, static_cast<std::int64_t>(s.n), mirror);
}

}  // namespace gbcodex
