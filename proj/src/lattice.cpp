#include "gbcodex/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <tuple>

namespace gbcodex {

std::int64_t norm2(Vec2 v) { return v.x * v.x + v.y * v.y; }
std::int64_t norm_l1(Vec2 v) { return std::llabs(v.x) + std::llabs(v.y); }
std::int64_t dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

bool l1_less(Vec2 a, Vec2 b) {
    return std::tuple(norm_l1(a), a.x, a.y) < std::tuple(norm_l1(b), b.x, b.y);
}

std::uint64_t isqrt(std::uint64_t v) {
    if (v < 2) {
        return v;
    }
    // Newton from above converges monotonically to floor(sqrt(v)).
    std::uint64_t x = v;
    std::uint64_t y = x / 2 + (x & 1);
    while (y < x) {
        x = y;
        y = (x + v / x) / 2;
    }
    return x;
}

std::uint64_t ceil_sqrt(std::uint64_t v) {
    const std::uint64_t r = isqrt(v);
    return r * r == v ? r : r + 1;
}

namespace {

std::int64_t cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

// Nearest integer to num / den for den > 0, ties toward +infinity.
std::int64_t round_div(std::int64_t num, std::int64_t den) {
    const std::int64_t twice = 2 * num + den;
    const std::int64_t q = twice / (2 * den);
    return (twice % (2 * den) != 0 && twice < 0) ? q - 1 : q;
}

}  // namespace

Lattice2D::Lattice2D(Vec2 b1, Vec2 b2) : b1_(b1), b2_(b2), det_(std::llabs(cross(b1, b2))) {
    if (det_ == 0) {
        throw std::invalid_argument("degenerate lattice basis");
    }
}

bool Lattice2D::contains(Vec2 t) const {
    // t = c1 b1 + c2 b2  with  c1 = cross(t, b2) / D,  c2 = cross(b1, t) / D.
    const std::int64_t d = cross(b1_, b2_);
    return cross(t, b2_) % d == 0 && cross(b1_, t) % d == 0;
}

Lattice2D gb_lattice(std::int64_t alpha, std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("gb_lattice needs n >= 1");
    }
    return Lattice2D({n, 0}, {-alpha, 1});
}

bool gb_contains(std::int64_t alpha, std::int64_t n, Vec2 t) {
    const std::int64_t r = (t.x + static_cast<std::int64_t>((static_cast<__int128>(alpha) * t.y) % n)) % n;
    return r == 0;
}

Lattice2D gauss_reduce(const Lattice2D& lattice) {
    Vec2 a = lattice.b1();
    Vec2 b = lattice.b2();
    if (norm2(a) > norm2(b)) {
        std::swap(a, b);
    }
    while (true) {
        const std::int64_t mu = round_div(dot(a, b), norm2(a));
        b = b - mu * a;
        if (norm2(b) >= norm2(a)) {
            break;
        }
        std::swap(a, b);
    }
    return Lattice2D(a, b);
}

std::vector<Vec2> enumerate_ball(const Lattice2D& lattice, std::int64_t radius2) {
    std::vector<Vec2> out;
    if (radius2 <= 0) {
        return out;
    }
    const Lattice2D red = gauss_reduce(lattice);
    const Vec2 b1 = red.b1();
    const Vec2 b2 = red.b2();
    const auto det = static_cast<__int128>(red.det());
    // |c1| = |cross(t, b2)| / D <= |t| |b2| / D, likewise |c2| <= |t| |b1| / D.
    const auto coeff_bound = [&](Vec2 b) {
        const __int128 num = static_cast<__int128>(radius2) * norm2(b);
        const auto bound2 = static_cast<std::uint64_t>(num / (det * det));
        return static_cast<std::int64_t>(isqrt(bound2)) + 1;
    };
    const std::int64_t c1max = coeff_bound(b2);
    const std::int64_t c2max = coeff_bound(b1);
    for (std::int64_t c1 = -c1max; c1 <= c1max; ++c1) {
        for (std::int64_t c2 = -c2max; c2 <= c2max; ++c2) {
            if (c1 == 0 && c2 == 0) {
                continue;
            }
            const Vec2 t = c1 * b1 + c2 * b2;
            if (norm2(t) <= radius2) {
                out.push_back(t);
            }
        }
    }
    std::sort(out.begin(), out.end(), l1_less);
    return out;
}

ShortestVector lambda_euclid(const Lattice2D& lattice) {
    const Lattice2D red = gauss_reduce(lattice);
    ShortestVector s;
    s.norm2 = norm2(red.b1());
    s.length = std::sqrt(static_cast<double>(s.norm2));
    // Canonical witness among all vectors of minimal length.
    s.witness = red.b1();
    for (Vec2 t : enumerate_ball(lattice, s.norm2)) {
        if (l1_less(t, s.witness)) {
            s.witness = t;
        }
    }
    return s;
}

std::vector<Vec2> enumerate_short(const Lattice2D& lattice, std::int64_t radius_l1) {
    std::vector<Vec2> out;
    if (radius_l1 <= 0) {
        return out;
    }
    for (Vec2 t : enumerate_ball(lattice, radius_l1 * radius_l1)) {
        if (norm_l1(t) <= radius_l1) {
            out.push_back(t);
        }
    }
    return out;
}

MinL1 min_l1(const Lattice2D& lattice) {
    // The reduced b1 bounds the answer, and the L1 ball of that radius sits
    // inside the Euclidean ball enumerate_ball scans.
    const Lattice2D red = gauss_reduce(lattice);
    const std::int64_t radius = norm_l1(red.b1());
    const auto candidates = enumerate_short(lattice, radius);
    return {norm_l1(candidates.front()), candidates.front()};
}

}  // namespace gbcodex
