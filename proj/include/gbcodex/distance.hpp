#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gbcodex/css.hpp"
#include "gbcodex/lattice.hpp"
#include "gbcodex/torus_graph.hpp"

namespace gbcodex {

/// ceil(lambda(L)) for L = Z(n,0) + Z(-alpha,1), computed from the exact
/// squared length. The bound is proven for n >= 6 and 1 < alpha < n-1;
/// outside that range the value is still returned with the flag cleared.
struct LowerBound {
    std::int64_t value = 0;
    std::int64_t lambda_sq = 0;
    bool hypothesis_met = false;
    friend bool operator==(const LowerBound&, const LowerBound&) = default;
};

LowerBound lattice_lower_bound(std::int64_t alpha, std::int64_t n);

struct ReducedBound {
    std::int64_t alpha = 0;
    LowerBound bound;
};

/// Bound for GB(1 + x^u, 1 + x^v, n) through alpha = v u^{-1} mod n.
/// Throws std::domain_error when gcd(u, n) != 1; the hypothesis flag also
/// requires n > max(6, u, v).
ReducedBound reduced_lower_bound(std::int64_t u, std::int64_t v, std::int64_t n);

struct Certificate {
    std::int64_t weight = 0;
    Vec2 displacement;
    EdgeVector vector;
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Lightest logical staircase over lattice vectors with L1 norm <= min_l1 + slack.
/// Throws std::runtime_error("no certificate found") if none validates.
Certificate upper_bound_certificate(std::int64_t alpha, std::int64_t n, std::int64_t slack = 0);

/// max(lattice_lower_bound, min_t lb(t)) where lb(t) is the least integer
/// >= |t| with the parity of |t.x| + |t.y|. Requires 1 < alpha < n-1.
std::int64_t parity_refined_lower(std::int64_t alpha, std::int64_t n);

enum class Method { SandwichClosed, OracleConfirmed, IntervalOnly };
enum class ClosedBy { None, Lattice, Parity };

std::string_view to_string(Method m);
std::string_view to_string(ClosedBy c);
Method method_from_string(std::string_view s);
ClosedBy closed_by_from_string(std::string_view s);

struct DistanceBudget {
    std::size_t oracle_cap = 26;
    bool run_oracle = true;
    bool use_parity = true;
    std::int64_t certificate_slack = 0;
    unsigned threads = 0;
};

struct DistanceReport {
    std::int64_t n = 0;
    std::int64_t alpha = 0;
    std::int64_t k = 0;

    LowerBound lattice_bound;
    std::optional<std::int64_t> parity_lower;
    std::int64_t lower_bound = 0;  // best lower bound in force

    std::int64_t upper_bound = 0;
    Certificate certificate;

    std::optional<std::int64_t> exact;
    Method method = Method::IntervalOnly;
    ClosedBy closed_by = ClosedBy::None;

    std::optional<std::int64_t> oracle_dx;
    std::optional<std::int64_t> oracle_dz;

    /// Exact value when known, otherwise the certified upper bound.
    std::int64_t distance() const { return exact.value_or(upper_bound); }
    friend bool operator==(const DistanceReport&, const DistanceReport&) = default;
};

/// Combines the lattice bounds, the staircase certificate and, when the
/// kernel fits under the cap, the exhaustive oracle on both sides. Throws
/// std::logic_error if the oracle ever contradicts the bounds.
DistanceReport determine(std::int64_t alpha, std::int64_t n, const DistanceBudget& budget = {});

}  // namespace gbcodex
