#pragma once

#include <cstdint>
#include <vector>

namespace gbcodex {

struct Vec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(std::int64_t k, Vec2 a) { return {k * a.x, k * a.y}; }
    friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
};

std::int64_t norm2(Vec2 v);
std::int64_t norm_l1(Vec2 v);
std::int64_t dot(Vec2 a, Vec2 b);

/// Orders by (|x|+|y|, x, y); used for every deterministic witness choice.
bool l1_less(Vec2 a, Vec2 b);

/// floor(sqrt(v)) and ceil(sqrt(v)) by integer Newton iteration.
std::uint64_t isqrt(std::uint64_t v);
std::uint64_t ceil_sqrt(std::uint64_t v);

/// Full-rank integer lattice in Z^2.
class Lattice2D {
public:
    /// Throws std::invalid_argument for a degenerate basis.
    Lattice2D(Vec2 b1, Vec2 b2);

    Vec2 b1() const { return b1_; }
    Vec2 b2() const { return b2_; }
    std::int64_t det() const { return det_; }

    /// Integer-combination test via Cramer's rule.
    bool contains(Vec2 t) const;

private:
    Vec2 b1_;
    Vec2 b2_;
    std::int64_t det_;
};

/// Z(n, 0) + Z(-alpha, 1): the kernel of (x, y) -> x + alpha y mod n.
Lattice2D gb_lattice(std::int64_t alpha, std::int64_t n);

/// Direct membership test x + alpha y = 0 mod n.
bool gb_contains(std::int64_t alpha, std::int64_t n, Vec2 t);

/// Lagrange-Gauss reduction: |b1| <= |b2|, |<b1,b2>| <= |b1|^2 / 2.
Lattice2D gauss_reduce(const Lattice2D& lattice);

struct ShortestVector {
    std::int64_t norm2 = 0;  // exact squared length
    double length = 0.0;     // for display only
    Vec2 witness;
};

ShortestVector lambda_euclid(const Lattice2D& lattice);

struct MinL1 {
    std::int64_t l1 = 0;
    Vec2 witness;
};

/// Smallest L1 norm over nonzero lattice vectors; witness minimal under l1_less.
MinL1 min_l1(const Lattice2D& lattice);

/// Every nonzero lattice vector with squared Euclidean length <= radius2, sorted by l1_less.
std::vector<Vec2> enumerate_ball(const Lattice2D& lattice, std::int64_t radius2);

/// Every nonzero lattice vector with L1 norm <= radius_l1, sorted by l1_less.
std::vector<Vec2> enumerate_short(const Lattice2D& lattice, std::int64_t radius_l1);

}  // namespace gbcodex
