#include "gbcodex/arithmetic.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

namespace gbcodex {

Factorization factorize(std::uint64_t n) {
    Factorization out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) {
            continue;
        }
        PrimePower pp{p, 0};
        while (n % p == 0) {
            n /= p;
            ++pp.exponent;
        }
        out.push_back(pp);
    }
    if (n > 1) {
        out.push_back({n, 1});
    }
    return out;
}

bool is_admissible(std::uint64_t n) {
    if (n == 0) {
        return false;
    }
    for (const auto& [p, e] : factorize(n)) {
        if (p == 2 ? e > 1 : p % 4 != 1) {
            return false;
        }
    }
    return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    unsigned __int128 result = 1 % mod;
    unsigned __int128 b = base % mod;
    while (exp > 0) {
        if (exp & 1U) {
            result = result * b % mod;
        }
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t inverse_mod_u(std::uint64_t a, std::uint64_t m) {
    const auto inv = inverse_mod(static_cast<std::int64_t>(a % m), static_cast<std::int64_t>(m));
    if (!inv) {
        throw std::logic_error("inverse does not exist");
    }
    return static_cast<std::uint64_t>(*inv);
}

// r with r^2 = -1 mod p: a^((p-1)/4) squares to -1 exactly when a is a non-residue.
std::uint64_t sqrt_minus_one_mod_prime(std::uint64_t p, std::uint64_t seed) {
    if (p == 2) {
        return 1;
    }
    std::mt19937_64 rng(seed ^ p);
    std::uniform_int_distribution<std::uint64_t> pick(2, p - 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
        const std::uint64_t r = pow_mod(pick(rng), (p - 1) / 4, p);
        if (mul_mod(r, r, p) == p - 1) {
            return r;
        }
    }
    // Each draw fails with probability 1/2; reaching here is practically impossible.
    for (std::uint64_t a = 2; a < p; ++a) {
        const std::uint64_t r = pow_mod(a, (p - 1) / 4, p);
        if (mul_mod(r, r, p) == p - 1) {
            return r;
        }
    }
    throw std::domain_error("no square root of -1 modulo " + std::to_string(p));
}

}  // namespace

std::vector<std::uint64_t> sqrt_minus_one_mod_prime_power(std::uint64_t p, std::uint32_t eps, std::uint64_t seed) {
    if (p % 4 != 1 || eps == 0) {
        throw std::invalid_argument("need a prime p = 1 mod 4 and eps >= 1");
    }
    std::uint64_t r = sqrt_minus_one_mod_prime(p, seed);
    std::uint64_t modulus = p;
    // Hensel: r <- r - (r^2 + 1) / (2r), one power of p at a time.
    for (std::uint32_t e = 1; e < eps; ++e) {
        modulus *= p;
        const std::uint64_t f = (mul_mod(r, r, modulus) + 1) % modulus;
        const std::uint64_t step = mul_mod(f, inverse_mod_u(2 * r % modulus, modulus), modulus);
        r = (r + modulus - step) % modulus;
    }
    std::vector<std::uint64_t> out{r, modulus - r};
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> sqrt_minus_one_all(std::uint64_t n, std::uint64_t seed) {
    if (n == 1) {
        return {};
    }
    if (!is_admissible(n)) {
        throw std::domain_error("no square root of -1 modulo " + std::to_string(n));
    }
    // CRT accumulation: (residue set, modulus) grows one prime power at a time.
    std::vector<std::uint64_t> roots{0};
    std::uint64_t modulus = 1;
    for (const auto& [p, e] : factorize(n)) {
        std::vector<std::uint64_t> local;
        std::uint64_t pe = 1;
        for (std::uint32_t i = 0; i < e; ++i) pe *= p;
        if (p == 2) {
            local = {1};
        } else {
            local = sqrt_minus_one_mod_prime_power(p, e, seed);
        }
        const std::uint64_t inv = inverse_mod_u(modulus % pe, pe);
        std::vector<std::uint64_t> next;
        for (std::uint64_t a : roots) {
            for (std::uint64_t b : local) {
                // x = a + modulus * ((b - a) * modulus^{-1} mod pe)
                const std::uint64_t diff = (b + pe - a % pe) % pe;
                next.push_back(a + modulus * mul_mod(diff, inv, pe));
            }
        }
        roots = std::move(next);
        modulus *= pe;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

GbSpec kitaev_spec(std::int64_t m) {
    if (m < 1) {
        throw std::invalid_argument("kitaev_spec needs m >= 1");
    }
    const auto n = static_cast<std::size_t>(m * m);
    return {reduce_mod(BinaryPolynomial::from_support({0, 1}), n),
            reduce_mod(BinaryPolynomial::from_support({0, static_cast<std::size_t>(m)}), n), n};
}

GbSpec optimized_kitaev_spec(std::int64_t t) {
    if (t < 1) {
        throw std::invalid_argument("optimized_kitaev_spec needs t >= 1");
    }
    const std::int64_t d = 2 * t + 1;
    const auto n = static_cast<std::size_t>((d * d + 1) / 2);
    const auto s = static_cast<std::size_t>(2 * t * t);
    return {reduce_mod(BinaryPolynomial::from_support({0, s + 1}), n),
            reduce_mod(BinaryPolynomial::from_support({1, s}), n), n};
}

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::Kitaev: return "kitaev";
        case Provenance::OptimizedKitaev: return "optimized-kitaev";
        case Provenance::New: return "new";
    }
    return "?";
}

Provenance provenance_from_string(std::string_view s) {
    for (Provenance p : {Provenance::Kitaev, Provenance::OptimizedKitaev, Provenance::New}) {
        if (to_string(p) == s) return p;
    }
    throw std::invalid_argument("unknown provenance '" + std::string(s) + "'");
}

Provenance classify(std::int64_t alpha, std::int64_t n) {
    const auto same = [&](std::int64_t a) { return a == alpha || a == n - alpha; };
    const auto m = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(n)));
    if (m * m == n && same(m % n)) {
        return Provenance::Kitaev;
    }
    for (std::int64_t t = 1; (2 * t + 1) * (2 * t + 1) <= 2 * n; ++t) {
        const GbSpec spec = optimized_kitaev_spec(t);
        if (static_cast<std::int64_t>(spec.n) != n) {
            continue;
        }
        if (const auto c = try_canonicalize(spec); c && same(c->alpha)) {
            return Provenance::OptimizedKitaev;
        }
    }
    return Provenance::New;
}

LatticeSummary summarize_lattice(std::int64_t alpha, std::int64_t n) {
    const Lattice2D lattice = gb_lattice(alpha, n);
    const Lattice2D reduced = gauss_reduce(lattice);
    const MinL1 l1 = min_l1(lattice);
    return {lambda_euclid(lattice).norm2, l1.l1, l1.witness, reduced.b1(), reduced.b2()};
}

CatalogEntry make_entry(std::int64_t alpha, std::int64_t n, const DistanceBudget& budget) {
    CatalogEntry e;
    e.n = n;
    e.alpha = std::min(alpha, n - alpha);
    e.alpha_mirror = n - e.alpha;
    e.length = 2 * n;
    e.report = determine(e.alpha, n, budget);
    e.k = e.report.k;
    e.lattice = summarize_lattice(e.alpha, n);
    e.provenance = classify(e.alpha, n);
    return e;
}

std::vector<CatalogEntry> sweep_catalog(std::int64_t max_length, const DistanceBudget& budget, std::uint64_t seed) {
    std::vector<CatalogEntry> out;
    for (std::int64_t n = 2; 2 * n <= max_length; ++n) {
        if (!is_admissible(static_cast<std::uint64_t>(n))) {
            continue;
        }
        std::optional<CatalogEntry> best;
        for (std::uint64_t root : sqrt_minus_one_all(static_cast<std::uint64_t>(n), seed)) {
            const auto alpha = static_cast<std::int64_t>(root);
            if (2 * alpha > n) {
                continue;  // same code as n - alpha
            }
            CatalogEntry e = make_entry(alpha, n, budget);
            const auto key = [](const CatalogEntry& c) {
                return std::tuple(c.report.distance(), c.report.lower_bound, -c.alpha);
            };
            if (!best || key(e) > key(*best)) {
                best = std::move(e);
            }
        }
        if (best) {
            out.push_back(std::move(*best));
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return std::tuple(a.report.distance(), a.length) < std::tuple(b.report.distance(), b.length);
    });
    return out;
}

}  // namespace gbcodex
