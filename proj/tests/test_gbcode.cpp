#include <numeric>
#include <random>

#include "doctest.h"
#include "gbcodex/arithmetic.hpp"
#include "gbcodex/gbcode.hpp"

using namespace gbcodex;

namespace {

GbSpec spec(const char* a, const char* b, std::size_t n) {
    return {parse_polynomial(a), parse_polynomial(b), n};
}

struct Params {
    std::size_t length, k;
    std::optional<std::size_t> d;
    friend bool operator==(const Params&, const Params&) = default;
};

Params params(const GbSpec& s) {
    const CssCode c = build(s);
    return {c.length(), c.dimension(), c.exhaustive_distance(Side::X).distance};
}

}  // namespace

TEST_CASE("build") {
    const CssCode c = build(spec("1+x", "1+x^2", 5));
    CHECK(c.length() == 10);
    CHECK(c.dimension() == 2);
    const CssCode kitaev = build(spec("1+x", "1+x^3", 9));
    CHECK(kitaev.length() == 18);
    CHECK(build(spec("1", "1", 3)).dimension() == 0);
    CHECK_THROWS_AS(build(spec("1+x^5", "1", 5)), std::invalid_argument);
    // H_Z = [B^T | A^T]
    const BitMatrix a = circulant(parse_polynomial("1+x"), 5);
    const BitMatrix b = circulant(parse_polynomial("1+x^2"), 5);
    CHECK(c.h_x() == hstack(a, b));
    CHECK(c.h_z() == hstack(transpose(b), transpose(a)));
}

TEST_CASE("dimension formula") {
    CHECK(dimension_formula(spec("1+x", "1+x^2", 5)) == 2);
    CHECK(dimension_formula(spec("1", "1", 7)) == 0);
    for (std::size_t n = 2; n <= 50; ++n) {
        for (std::size_t alpha = 1; alpha < n; ++alpha) {
            CHECK(dimension_formula(GbSpec{parse_polynomial("1+x"),
                                           BinaryPolynomial::from_support({0, alpha}), n}) == 2);
        }
    }
}

TEST_CASE("dimension formula agrees with ranks on random weight <= 3 generators") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + rng() % 40;
        BinaryPolynomial a, b;
        const auto w = [&] { return 1 + rng() % 3; };
        for (std::size_t i = 0, wa = w(); i < wa; ++i) a.toggle(rng() % n);
        for (std::size_t i = 0, wb = w(); i < wb; ++i) b.toggle(rng() % n);
        const GbSpec s{a, b, n};
        CHECK(dimension_formula(s) == build(s).dimension());
    }
}

TEST_CASE("shift_normalize") {
    CHECK(shift_normalize(spec("x+x^3", "1+x^2", 7)) == spec("1+x^2", "1+x^2", 7));
    CHECK(shift_normalize(spec("x^2", "x^5", 9)) == spec("1", "1", 9));
    CHECK(shift_normalize(optimized_kitaev_spec(1)) == spec("1+x^3", "1+x", 5));
    CHECK_THROWS_AS(shift_normalize(spec("0", "1", 4)), std::invalid_argument);
}

TEST_CASE("canonicalize_w2") {
    CHECK(canonicalize_w2(1, 2, 5).alpha == 2);
    const auto c = canonicalize_w2(3, 1, 10);
    CHECK(c.alpha == 7);
    CHECK_FALSE(c.swapped);
    CHECK(params(spec("1+x^3", "1+x", 10)) == params(CanonicalW2{7, 10}.spec()));

    // u shares a factor with n but v does not: swap.
    const auto s = canonicalize_w2(2, 3, 8);
    CHECK(s.swapped);
    CHECK(s.alpha == 2 * 3 % 8);  // 3^{-1} = 3 mod 8
    CHECK_THROWS_AS(canonicalize_w2(2, 4, 8), NotReducible);
    CHECK_THROWS_AS(canonicalize_w2(1, 0, 8), NotReducible);

    const auto m = canonicalize_w2(1, 9, 13, true);
    CHECK(m.alpha == 4);
    CHECK(m.mirrored);
    CHECK_FALSE(canonicalize_w2(1, 4, 13, true).mirrored);
}

TEST_CASE("equivalences preserve parameters on small instances") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const std::int64_t n = 3 + static_cast<std::int64_t>(rng() % 14);
        std::int64_t u = 1 + static_cast<std::int64_t>(rng() % (n - 1));
        if (std::gcd(u, n) != 1) continue;
        const std::int64_t v = 1 + static_cast<std::int64_t>(rng() % (n - 1));
        const auto original = GbSpec{BinaryPolynomial::from_support({0, static_cast<std::size_t>(u)}),
                                     BinaryPolynomial::from_support({0, static_cast<std::size_t>(v)}),
                                     static_cast<std::size_t>(n)};
        const auto c = canonicalize_w2(u, v, n);
        CHECK(params(original) == params(c.spec()));
        CHECK(params(c.spec()) == params(CanonicalW2{n - c.alpha, n}.spec()));
    }
}

TEST_CASE("try_canonicalize") {
    CHECK_FALSE(try_canonicalize(spec("1+x+x^2", "1+x", 7)).has_value());
    const auto c = try_canonicalize(spec("x+x^4", "x^2+x^3", 11));  // (1+x^3, 1+x)
    REQUIRE(c.has_value());
    CHECK(c->alpha == *inverse_mod(3, 11));
    CHECK(inverse_mod(4, 8) == std::nullopt);
    CHECK(inverse_mod(3, 10) == 7);
}
