#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gbcodex/distance.hpp"
#include "gbcodex/gbcode.hpp"
#include "gbcodex/lattice.hpp"

namespace gbcodex {

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

/// Trial division; primes ascending. factorize(1) is empty.
Factorization factorize(std::uint64_t n);

/// n = 2^e * prod p_i^k_i with e in {0, 1} and every p_i = 1 mod 4.
bool is_admissible(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

constexpr std::uint64_t kDefaultSeed = 0x6762636f646578ULL;

/// Both r with r^2 = -1 mod p^eps, ascending. Requires p prime, p = 1 mod 4.
std::vector<std::uint64_t> sqrt_minus_one_mod_prime_power(std::uint64_t p, std::uint32_t eps,
                                                          std::uint64_t seed = kDefaultSeed);

/// Every alpha in [1, n-1] with alpha^2 = -1 mod n, ascending.
/// Throws std::domain_error("no square root of -1") for non-admissible n.
std::vector<std::uint64_t> sqrt_minus_one_all(std::uint64_t n, std::uint64_t seed = kDefaultSeed);

/// GB(1 + x, 1 + x^m, m^2).
GbSpec kitaev_spec(std::int64_t m);
/// GB(1 + x^{2t^2+1}, x + x^{2t^2}, (d^2+1)/2) with d = 2t + 1, reduced mod x^n - 1.
GbSpec optimized_kitaev_spec(std::int64_t t);

enum class Provenance { Kitaev, OptimizedKitaev, New };
std::string_view to_string(Provenance p);
Provenance provenance_from_string(std::string_view s);

/// Family membership of the canonical code GB(1 + x, 1 + x^alpha, n).
Provenance classify(std::int64_t alpha, std::int64_t n);

struct LatticeSummary {
    std::int64_t lambda_sq = 0;
    std::int64_t min_l1 = 0;
    Vec2 min_l1_witness;
    Vec2 reduced_b1;
    Vec2 reduced_b2;
    friend bool operator==(const LatticeSummary&, const LatticeSummary&) = default;
};

LatticeSummary summarize_lattice(std::int64_t alpha, std::int64_t n);

struct CatalogEntry {
    std::int64_t n = 0;
    std::int64_t alpha = 0;         // representative, alpha <= n/2
    std::int64_t alpha_mirror = 0;  // n - alpha, the same code
    std::int64_t length = 0;
    std::int64_t k = 0;
    DistanceReport report;
    LatticeSummary lattice;
    Provenance provenance = Provenance::New;
    friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// One entry per admissible n with 2n <= max_length, keeping for each n the
/// root alpha with the largest distance (then larger lower bound, then smaller
/// alpha). Sorted by (d, length).
std::vector<CatalogEntry> sweep_catalog(std::int64_t max_length, const DistanceBudget& budget = {},
                                        std::uint64_t seed = kDefaultSeed);

/// Evaluates one (alpha, n) pair into a catalog entry.
CatalogEntry make_entry(std::int64_t alpha, std::int64_t n, const DistanceBudget& budget = {});

}  // namespace gbcodex
