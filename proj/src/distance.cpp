#include "gbcodex/distance.hpp"

#include <algorithm>
#include <stdexcept>

#include "gbcodex/gbcode.hpp"

namespace gbcodex {

namespace {

void require_canonical(std::int64_t alpha, std::int64_t n) {
    if (n < 2 || alpha < 1 || alpha > n - 1) {
        throw std::invalid_argument("need n >= 2 and 1 <= alpha <= n-1");
    }
}

}  // namespace

LowerBound lattice_lower_bound(std::int64_t alpha, std::int64_t n) {
    require_canonical(alpha, n);
    LowerBound b;
    b.lambda_sq = lambda_euclid(gb_lattice(alpha, n)).norm2;
    b.value = static_cast<std::int64_t>(ceil_sqrt(static_cast<std::uint64_t>(b.lambda_sq)));
    b.hypothesis_met = n >= 6 && alpha > 1 && alpha < n - 1;
    return b;
}

ReducedBound reduced_lower_bound(std::int64_t u, std::int64_t v, std::int64_t n) {
    if (n < 2) {
        throw std::invalid_argument("need n >= 2");
    }
    const auto inv = inverse_mod(u, n);
    if (!inv) {
        throw std::domain_error("u = " + std::to_string(u) + " is not coprime to n = " + std::to_string(n));
    }
    const std::int64_t vm = ((v % n) + n) % n;
    ReducedBound out;
    out.alpha = static_cast<std::int64_t>(static_cast<__int128>(vm) * *inv % n);
    if (out.alpha == 0) {
        throw std::domain_error("v = 0 mod n: the second generator vanishes");
    }
    out.bound = lattice_lower_bound(out.alpha, n);
    out.bound.hypothesis_met = out.bound.hypothesis_met && n > std::max<std::int64_t>({6, u, v});
    return out;
}

Certificate upper_bound_certificate(std::int64_t alpha, std::int64_t n, std::int64_t slack) {
    require_canonical(alpha, n);
    const CssCode code = build(CanonicalW2{alpha, n});
    EchelonBasis stabilizers(code.length());
    for (const auto& r : code.h_z().row_vectors()) {
        stabilizers.insert(r);
    }
    const TorusGraph graph(n, alpha);
    const Lattice2D lattice = gb_lattice(alpha, n);
    const std::int64_t radius = min_l1(lattice).l1 + std::max<std::int64_t>(slack, 0);

    std::optional<Certificate> best;
    for (Vec2 t : enumerate_short(lattice, radius)) {
        EdgeVector v = graph.staircase(t);
        if (!mat_vec(code.h_x(), v).is_zero() || stabilizers.contains(v)) {
            continue;
        }
        const auto w = static_cast<std::int64_t>(v.weight());
        if (!best || w < best->weight) {
            best = Certificate{w, t, std::move(v)};
        }
    }
    if (!best) {
        throw std::runtime_error("no certificate found for alpha = " + std::to_string(alpha) +
                                 ", n = " + std::to_string(n));
    }
    return *best;
}

std::int64_t parity_refined_lower(std::int64_t alpha, std::int64_t n) {
    require_canonical(alpha, n);
    if (alpha == 1 || alpha == n - 1) {
        throw std::invalid_argument("parity refinement needs 1 < alpha < n-1");
    }
    const Lattice2D lattice = gb_lattice(alpha, n);
    const std::int64_t m1 = min_l1(lattice).l1;
    // A cycle lifting to t has length >= |t|_2 and the parity of t.x + t.y.
    // Vectors longer than m1 cannot beat the L1-minimal one, whose own bound is <= m1.
    std::int64_t best = m1;
    for (Vec2 t : enumerate_ball(lattice, m1 * m1)) {
        auto lb = static_cast<std::int64_t>(ceil_sqrt(static_cast<std::uint64_t>(norm2(t))));
        if ((lb - norm_l1(t)) % 2 != 0) {
            ++lb;
        }
        best = std::min(best, lb);
    }
    return std::max(best, lattice_lower_bound(alpha, n).value);
}

std::string_view to_string(Method m) {
    switch (m) {
        case Method::SandwichClosed: return "sandwich-closed";
        case Method::OracleConfirmed: return "oracle-confirmed";
        case Method::IntervalOnly: return "interval-only";
    }
    return "?";
}

std::string_view to_string(ClosedBy c) {
    switch (c) {
        case ClosedBy::None: return "none";
        case ClosedBy::Lattice: return "lattice";
        case ClosedBy::Parity: return "parity";
    }
    return "?";
}

Method method_from_string(std::string_view s) {
    for (Method m : {Method::SandwichClosed, Method::OracleConfirmed, Method::IntervalOnly}) {
        if (to_string(m) == s) return m;
    }
    throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

ClosedBy closed_by_from_string(std::string_view s) {
    for (ClosedBy c : {ClosedBy::None, ClosedBy::Lattice, ClosedBy::Parity}) {
        if (to_string(c) == s) return c;
    }
    throw std::invalid_argument("unknown closing bound '" + std::string(s) + "'");
}

DistanceReport determine(std::int64_t alpha, std::int64_t n, const DistanceBudget& budget) {
    require_canonical(alpha, n);
    DistanceReport r;
    r.n = n;
    r.alpha = alpha;

    const CssCode code = build(CanonicalW2{alpha, n});
    r.k = static_cast<std::int64_t>(code.dimension());
    if (r.k == 0) {
        // 1 + x divides both generators and x^n - 1, so this cannot happen for n >= 2.
        throw std::logic_error("canonical weight-2 code without logical qubits");
    }

    r.lattice_bound = lattice_lower_bound(alpha, n);
    r.lower_bound = r.lattice_bound.value;
    const bool nondegenerate = alpha > 1 && alpha < n - 1;
    if (budget.use_parity && nondegenerate) {
        r.parity_lower = parity_refined_lower(alpha, n);
        r.lower_bound = std::max(r.lower_bound, *r.parity_lower);
    }

    r.certificate = upper_bound_certificate(alpha, n, budget.certificate_slack);
    r.upper_bound = r.certificate.weight;

    if (budget.run_oracle && code.kernel_dimension(Side::X) <= budget.oracle_cap &&
        code.kernel_dimension(Side::Z) <= budget.oracle_cap) {
        const ExhaustiveOptions opts{budget.oracle_cap, budget.threads};
        r.oracle_dx = static_cast<std::int64_t>(*code.exhaustive_distance(Side::X, opts).distance);
        r.oracle_dz = static_cast<std::int64_t>(*code.exhaustive_distance(Side::Z, opts).distance);
        if (*r.oracle_dx != *r.oracle_dz || *r.oracle_dx > r.upper_bound ||
            (r.lattice_bound.hypothesis_met && *r.oracle_dx < r.lower_bound)) {
            throw std::logic_error("exhaustive oracle contradicts the certified bounds for alpha = " +
                                   std::to_string(alpha) + ", n = " + std::to_string(n));
        }
    }

    // Outside the proven range the lattice bound is only a heuristic; the oracle overrides it.
    const bool overridden = !r.lattice_bound.hypothesis_met && r.oracle_dx && *r.oracle_dx < r.lower_bound;
    if (overridden) {
        r.lower_bound = *r.oracle_dx;
    }

    if (!overridden && r.lower_bound == r.upper_bound) {
        r.exact = r.upper_bound;
        r.method = Method::SandwichClosed;
        r.closed_by = r.lattice_bound.value == r.upper_bound ? ClosedBy::Lattice : ClosedBy::Parity;
    } else if (r.oracle_dx) {
        r.exact = r.oracle_dx;
        r.method = Method::OracleConfirmed;
    } else {
        r.method = Method::IntervalOnly;
    }
    return r;
}

}  // namespace gbcodex
