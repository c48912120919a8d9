#include <random>

#include "doctest.h"
#include "gbcodex/css.hpp"
#include "gbcodex/gbcode.hpp"
#include "oracles.hpp"

using namespace gbcodex;

namespace {

CssCode gb(const char* a, const char* b, std::size_t n) {
    return build(GbSpec{parse_polynomial(a), parse_polynomial(b), n});
}

BitMatrix row_matrix(std::initializer_list<int> bits) {
    BitMatrix m(1, bits.size());
    std::size_t i = 0;
    for (int b : bits) m.set(0, i++, b != 0);
    return m;
}

}  // namespace

TEST_CASE("construction validates shape and orthogonality") {
    CHECK_NOTHROW(gb("1+x", "1+x^2", 5));
    CHECK_THROWS_WITH_AS(CssCode(row_matrix({1, 1}), row_matrix({1, 0})), "not orthogonal", std::invalid_argument);
    CHECK_THROWS_WITH_AS(CssCode(row_matrix({1, 1}), row_matrix({1, 1, 0})), "shape mismatch",
                         std::invalid_argument);
    const CssCode trivial(BitMatrix(2, 4), BitMatrix(3, 4));
    CHECK(trivial.dimension() == 4);
}

TEST_CASE("dimension") {
    CHECK(gb("1+x", "1+x^2", 5).dimension() == 2);
    CHECK(gb("1+x", "1+x^3", 10).dimension() == 2);
    CHECK(gb("1", "1", 3).dimension() == 0);
}

TEST_CASE("logical operator tests") {
    const CssCode code = gb("1+x", "1+x^2", 5);
    CHECK_FALSE(code.is_logical_x(BitVector(10)));
    for (const auto& r : code.h_z().row_vectors()) CHECK_FALSE(code.is_logical_x(r));
    const BitVector staircase = BitVector::from_support(10, {0, 6, 8});
    CHECK(code.is_logical_x(staircase));
    // Adding a stabilizer keeps logical status.
    for (const auto& r : code.h_z().row_vectors()) CHECK(code.is_logical_x(staircase ^ r));
    CHECK_THROWS_AS(code.is_logical_x(BitVector(9)), std::invalid_argument);
}

TEST_CASE("exhaustive distance on table instances") {
    const CssCode c5 = gb("1+x", "1+x^2", 5);
    const auto rx = c5.exhaustive_distance(Side::X);
    CHECK(rx.distance == 3);
    CHECK(rx.witness.weight() == 3);
    CHECK(c5.is_logical_x(rx.witness));
    CHECK(c5.exhaustive_distance(Side::Z).distance == 3);

    CHECK(gb("1+x", "1+x", 2).exhaustive_distance(Side::X).distance == 2);
    CHECK(gb("1+x", "1+x^5", 13).exhaustive_distance(Side::X).distance == 5);
}

TEST_CASE("exhaustive distance: infinite and capped") {
    CHECK_FALSE(gb("1", "1", 3).exhaustive_distance(Side::X).distance.has_value());
    const CssCode big = gb("1+x", "1+x^5", 13);
    CHECK_THROWS_AS(big.exhaustive_distance(Side::X, {.kernel_cap = 10}), KernelTooLarge);
}

TEST_CASE("Gray-code oracle matches full brute force and is thread-count independent") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + rng() % 8;  // length <= 18
        BinaryPolynomial a, b;
        for (std::size_t i = 0; i < n; ++i) {
            if (rng() % 3 == 0) a.toggle(i);
            if (rng() % 3 == 0) b.toggle(i);
        }
        const CssCode code = build(GbSpec{a, b, n});
        const auto gray = code.exhaustive_distance(Side::X, {.kernel_cap = 26, .threads = 1});
        CHECK(gray.distance == oracle::brute_force_distance_x(code));
        const auto multi = code.exhaustive_distance(Side::X, {.kernel_cap = 26, .threads = 3});
        CHECK(multi.distance == gray.distance);
        CHECK(multi.witness == gray.witness);
        // GB codes have d_X = d_Z.
        CHECK(code.exhaustive_distance(Side::Z).distance == gray.distance);
        CHECK(code.dimension() == dimension_formula(GbSpec{a, b, n}));
    }
}
