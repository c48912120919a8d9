#include "doctest.h"
#include "gbcodex/distance.hpp"
#include "gbcodex/gbcode.hpp"
#include "oracles.hpp"

using namespace gbcodex;

TEST_CASE("lattice lower bound") {
    const LowerBound a = lattice_lower_bound(5, 13);
    CHECK(a.lambda_sq == 13);
    CHECK(a.value == 4);
    CHECK(a.hypothesis_met);

    const LowerBound b = lattice_lower_bound(2, 5);
    CHECK(b.value == 3);
    CHECK_FALSE(b.hypothesis_met);

    CHECK(lattice_lower_bound(3, 9).value == 3);
    CHECK_FALSE(lattice_lower_bound(1, 9).hypothesis_met);
    CHECK_FALSE(lattice_lower_bound(8, 9).hypothesis_met);
}

TEST_CASE("reduction to the canonical lattice") {
    const ReducedBound c = reduced_lower_bound(3, 1, 10);
    CHECK(c.alpha == 7);
    CHECK(c.bound == lattice_lower_bound(7, 10));
    CHECK_THROWS_AS(reduced_lower_bound(2, 1, 10), std::domain_error);
    CHECK_THROWS_AS(reduced_lower_bound(1, 10, 10), std::domain_error);
    // u or v at least n clears the hypothesis.
    CHECK_FALSE(reduced_lower_bound(1, 14, 13).bound.hypothesis_met);
    CHECK(reduced_lower_bound(1, 5, 13).bound.hypothesis_met);
}

TEST_CASE("parity refinement") {
    CHECK(parity_refined_lower(5, 13) == 5);
    CHECK(parity_refined_lower(3, 9) == 3);
    CHECK(parity_refined_lower(4, 17) == 5);
    CHECK_THROWS_AS(parity_refined_lower(1, 13), std::invalid_argument);
    for (std::int64_t n = 6; n <= 60; ++n)
        for (std::int64_t a = 2; a < n - 1; ++a)
            CHECK(parity_refined_lower(a, n) >= lattice_lower_bound(a, n).value);
}

TEST_CASE("staircase certificates") {
    const Certificate c = upper_bound_certificate(4, 17);
    CHECK(c.weight == 5);
    CHECK(static_cast<std::int64_t>(c.vector.weight()) == c.weight);
    CHECK(build(CanonicalW2{4, 17}).is_logical_x(c.vector));

    const Certificate d = upper_bound_certificate(31, 74);
    CHECK(d.weight == 12);
    CHECK(build(CanonicalW2{31, 74}).is_logical_x(d.vector));
    CHECK(gb_contains(31, 74, d.displacement));

    // The code at n = 2 is degenerate but still has a staircase certificate.
    CHECK(upper_bound_certificate(1, 2).weight == 2);
}

TEST_CASE("method strings round-trip") {
    for (Method m : {Method::SandwichClosed, Method::OracleConfirmed, Method::IntervalOnly})
        CHECK(method_from_string(to_string(m)) == m);
    for (ClosedBy c : {ClosedBy::None, ClosedBy::Lattice, ClosedBy::Parity})
        CHECK(closed_by_from_string(to_string(c)) == c);
    CHECK(to_string(Method::SandwichClosed) == "sandwich-closed");
    CHECK_THROWS_AS(method_from_string("closed"), std::invalid_argument);
}

TEST_CASE("determine on small codes") {
    const DistanceReport r = determine(2, 5);
    CHECK(r.k == 2);
    CHECK(r.exact == 3);
    CHECK(r.method == Method::SandwichClosed);
    CHECK(r.oracle_dx == 3);
    CHECK(r.oracle_dz == 3);

    const DistanceReport k3 = determine(3, 9);
    CHECK(k3.exact == 3);
    CHECK(k3.method == Method::SandwichClosed);
    CHECK(k3.closed_by == ClosedBy::Lattice);

    const DistanceReport p = determine(5, 13);
    CHECK(p.exact == 5);
    CHECK(p.closed_by == ClosedBy::Parity);
    CHECK(p.lattice_bound.value == 4);

    DistanceBudget no_oracle;
    no_oracle.run_oracle = false;
    const DistanceReport big = determine(31, 74, no_oracle);
    CHECK(big.upper_bound == 12);
    CHECK(big.lower_bound <= 12);
    CHECK_FALSE(big.oracle_dx.has_value());
    if (!big.exact) CHECK(big.method == Method::IntervalOnly);

    DistanceBudget no_parity = no_oracle;
    no_parity.use_parity = false;
    const DistanceReport plain = determine(5, 13, no_parity);
    CHECK_FALSE(plain.parity_lower.has_value());
    CHECK(plain.lower_bound == 4);
    CHECK_FALSE(plain.exact.has_value());
}

TEST_CASE("the oracle never contradicts the bounds") {
    DistanceBudget budget;
    budget.oracle_cap = 20;
    for (std::int64_t n = 6; n <= 18; ++n)
        for (std::int64_t a = 2; a < n - 1; ++a) {
            const DistanceReport r = determine(a, n, budget);
            REQUIRE(r.oracle_dx.has_value());
            if (r.k == 0) continue;
            CHECK(*r.oracle_dx == *r.oracle_dz);
            CHECK(r.lower_bound <= *r.oracle_dx);
            CHECK(*r.oracle_dx <= r.upper_bound);
            CHECK(r.exact == r.oracle_dx);
            CHECK(*r.oracle_dx == oracle::homology_bfs_distance(a, n));
        }
}

TEST_CASE("determine is deterministic across thread counts") {
    DistanceBudget one;
    one.threads = 1;
    DistanceBudget four;
    four.threads = 4;
    CHECK(determine(7, 25, one) == determine(7, 25, four));
}

TEST_CASE("sandwich results agree with the homology oracle") {
    DistanceBudget budget;
    budget.run_oracle = false;
    for (std::int64_t n : {29, 37, 41, 50, 53, 61, 65, 73, 74}) {
        for (std::int64_t a = 2; a < n - 1; ++a) {
            if ((a * a + 1) % n != 0) continue;
            const DistanceReport r = determine(a, n, budget);
            const std::int64_t d = oracle::homology_bfs_distance(a, n);
            CHECK(r.lower_bound <= d);
            CHECK(d <= r.upper_bound);
            if (r.exact) CHECK(*r.exact == d);
        }
    }
}
