// Acceptance suite: one PASS/FAIL line per criterion, detail lines indented.
// All comparisons are exact integer comparisons; only the wall-clock limits
// below are tolerances.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "../oracles.hpp"
#include "gbcodex/arithmetic.hpp"
#include "gbcodex/catalog.hpp"
#include "gbcodex/distance.hpp"
#include "gbcodex/gbcode.hpp"

using namespace gbcodex;

namespace {

constexpr double kTableSeconds = 300.0;
constexpr double kBoundSweepSeconds = 120.0;
constexpr double kArithmeticSeconds = 30.0;
constexpr std::int64_t kTableMaxLength = 200;
constexpr std::uint64_t kArithmeticLimit = 10000;
constexpr std::uint64_t kRandomSeed = 20240611;

using Params = std::tuple<std::int64_t, std::int64_t, std::int64_t>;  // length, k, d

// Reference (length, k, d) rows for codes of length below 200.
const std::vector<Params> kReferenceTable = {
    {4, 2, 2},    {10, 2, 3},   {20, 2, 4},   {26, 2, 5},   {34, 2, 5},   {52, 2, 6},   {50, 2, 7},
    {58, 2, 7},   {74, 2, 7},   {68, 2, 8},   {100, 2, 8},  {82, 2, 9},   {106, 2, 9},  {130, 2, 9},
    {116, 2, 10}, {122, 2, 10}, {146, 2, 11}, {148, 2, 12}, {170, 2, 13}, {178, 2, 13}, {194, 2, 13},
};

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> details;

    void fail(const std::string& why) {
        pass = false;
        details.push_back(why);
    }
};

// Every code built by criteria 1-7, rechecked structurally by criterion 9.
std::vector<GbSpec> g_constructed;
std::vector<CatalogEntry> g_table;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string params_string(const Params& p) {
    std::ostringstream s;
    s << "[[" << std::get<0>(p) << ", " << std::get<1>(p) << ", " << std::get<2>(p) << "]]";
    return s.str();
}

std::optional<std::size_t> code_distance(const CssCode& code, std::size_t cap) {
    ExhaustiveOptions opts;
    opts.kernel_cap = cap;
    const auto dx = code.exhaustive_distance(Side::X, opts).distance;
    const auto dz = code.exhaustive_distance(Side::Z, opts).distance;
    if (!dx) return dz;
    if (!dz) return dx;
    return std::min(*dx, *dz);
}

Outcome table_reproduction() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    DistanceBudget budget;
    budget.threads = 1;
    g_table = sweep_catalog(kTableMaxLength, budget);
    const double elapsed = seconds_since(start);

    std::map<Params, int> got, want;
    for (const auto& e : g_table) {
        ++got[{e.length, e.k, e.report.distance()}];
        g_constructed.push_back(CanonicalW2{e.alpha, e.n}.spec());

        const CssCode code = build(CanonicalW2{e.alpha, e.n});
        const Certificate& c = e.report.certificate;
        if (c.weight != e.report.distance() || static_cast<std::int64_t>(c.vector.weight()) != c.weight ||
            !code.is_logical_x(c.vector))
            o.fail("n=" + std::to_string(e.n) + ": no logical certificate of weight d");
        if (static_cast<std::uint64_t>(e.report.distance()) < ceil_sqrt(static_cast<std::uint64_t>(e.n)))
            o.fail("n=" + std::to_string(e.n) + ": d below ceil(sqrt(n))");
    }
    for (const auto& p : kReferenceTable) ++want[p];

    for (const auto& [p, count] : got) {
        const int extra = count - (want.count(p) ? want[p] : 0);
        for (int i = 0; i < extra; ++i) {
            std::string line = "unexpected " + params_string(p);
            for (const auto& e : g_table)
                if (e.length == std::get<0>(p) && e.report.distance() == std::get<2>(p))
                    line += " (n=" + std::to_string(e.n) + ", alpha=" + std::to_string(e.alpha) +
                            ", bounds [" + std::to_string(e.report.lower_bound) + ", " +
                            std::to_string(e.report.upper_bound) +
                            "], shortest nontrivial cycle = " +
                            std::to_string(oracle::homology_bfs_distance(e.alpha, e.n)) + ")";
            o.fail(line);
        }
    }
    for (const auto& [p, count] : want) {
        const int missing = count - (got.count(p) ? got[p] : 0);
        for (int i = 0; i < missing; ++i) {
            std::string line = "missing " + params_string(p);
            const std::int64_t n = std::get<0>(p) / 2;
            if (is_admissible(static_cast<std::uint64_t>(n)) && n > 2) {
                line += "; exact distance per root alpha:";
                for (auto a : sqrt_minus_one_all(static_cast<std::uint64_t>(n)))
                    if (2 * static_cast<std::int64_t>(a) <= n)
                        line += " " + std::to_string(a) + "->" +
                                std::to_string(oracle::homology_bfs_distance(static_cast<std::int64_t>(a), n));
            }
            o.fail(line);
        }
    }
    if (elapsed > kTableSeconds) o.fail("runtime " + std::to_string(elapsed) + " s over the limit");

    std::ostringstream s;
    s << g_table.size() << " entries (expected " << kReferenceTable.size() << "), " << elapsed << " s";
    o.summary = s.str();
    return o;
}

Outcome lower_bound_sweep() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::size_t checked = 0, violations = 0;
    ExhaustiveOptions opts;
    opts.threads = 1;
    for (std::int64_t n = 6; n <= 20; ++n)
        for (std::int64_t a = 2; a < n - 1; ++a) {
            const GbSpec spec = CanonicalW2{a, n}.spec();
            g_constructed.push_back(spec);
            const auto d = build(spec).exhaustive_distance(Side::X, opts).distance;
            const LowerBound lb = lattice_lower_bound(a, n);
            ++checked;
            if (d && static_cast<std::int64_t>(*d) < lb.value) {
                ++violations;
                o.fail("alpha=" + std::to_string(a) + " n=" + std::to_string(n) + ": d_X=" + std::to_string(*d) +
                       " < " + std::to_string(lb.value));
            }
        }
    const double elapsed = seconds_since(start);
    if (elapsed > kBoundSweepSeconds) o.fail("runtime " + std::to_string(elapsed) + " s over the limit");
    std::ostringstream s;
    s << checked << " pairs, " << violations << " violations, " << elapsed << " s";
    o.summary = s.str();
    return o;
}

Outcome lattice_divisibility() {
    Outcome o;
    std::size_t pairs = 0;
    for (std::uint64_t n = 2; n <= kArithmeticLimit; ++n) {
        if (!is_admissible(n)) continue;
        for (auto a : sqrt_minus_one_all(n)) {
            const auto alpha = static_cast<std::int64_t>(a);
            const auto nn = static_cast<std::int64_t>(n);
            const std::int64_t lam2 = lambda_euclid(gb_lattice(alpha, nn)).norm2;
            ++pairs;
            if (lam2 < nn || lam2 % nn != 0)
                o.fail("alpha=" + std::to_string(a) + " n=" + std::to_string(n) + ": lambda^2=" +
                       std::to_string(lam2));
        }
    }
    o.summary = std::to_string(pairs) + " (alpha, n) pairs, " + std::to_string(o.details.size()) + " failures";
    return o;
}

Outcome oracle_agreement() {
    Outcome o;
    std::map<std::int64_t, std::int64_t> reference;
    for (const auto& [len, k, d] : kReferenceTable) reference[len] = d;
    std::vector<std::string> checked;
    for (const auto& e : g_table) {
        const CssCode code = build(CanonicalW2{e.alpha, e.n});
        if (code.kernel_dimension(Side::X) > 26 || code.kernel_dimension(Side::Z) > 26) continue;
        const auto dx = code.exhaustive_distance(Side::X).distance;
        const auto dz = code.exhaustive_distance(Side::Z).distance;
        checked.push_back(std::to_string(e.n));
        if (!dx || !dz || *dx != *dz) {
            o.fail("n=" + std::to_string(e.n) + ": d_X != d_Z");
            continue;
        }
        if (!reference.count(e.length) || static_cast<std::int64_t>(*dx) != reference[e.length])
            o.fail("n=" + std::to_string(e.n) + ": oracle d=" + std::to_string(*dx) + " differs from the table");
    }
    for (std::int64_t n : {2, 5, 10, 13, 17, 25})
        if (std::find(checked.begin(), checked.end(), std::to_string(n)) == checked.end())
            o.fail("n=" + std::to_string(n) + " was not checked");
    std::string list;
    for (const auto& s : checked) list += (list.empty() ? "" : ",") + s;
    o.summary = "oracle run for n in {" + list + "}";
    return o;
}

Outcome kitaev_family() {
    Outcome o;
    for (std::int64_t m = 2; m <= 7; ++m) {
        const GbSpec spec = kitaev_spec(m);
        g_constructed.push_back(spec);
        const std::string tag = "m=" + std::to_string(m) + ": ";
        if (build(spec).dimension() != 2) o.fail(tag + "k != 2");
        const auto canon = try_canonicalize(spec);
        if (!canon || canon->alpha != m || canon->n != m * m) {
            o.fail(tag + "unexpected canonical form");
            continue;
        }
        DistanceBudget budget;
        budget.run_oracle = m <= 4;
        const DistanceReport r = determine(canon->alpha, canon->n, budget);
        const LatticeSummary lat = summarize_lattice(canon->alpha, canon->n);
        if (lat.lambda_sq != m * m || lat.min_l1 != m) o.fail(tag + "lambda or min-L1 differs from m");
        if (r.exact != m) o.fail(tag + "exact distance not established as m");
        if (r.lower_bound != m || r.upper_bound != m) o.fail(tag + "bounds do not sandwich m");
        if (m <= 4 && (r.oracle_dx != m || r.oracle_dz != m)) o.fail(tag + "oracle does not confirm m");
    }
    o.summary = "m = 2..7";
    return o;
}

Outcome optimized_family() {
    Outcome o;
    std::string forms;
    for (std::int64_t t = 1; t <= 6; ++t) {
        const std::int64_t d = 2 * t + 1;
        const GbSpec spec = optimized_kitaev_spec(t);
        g_constructed.push_back(spec);
        const std::string tag = "t=" + std::to_string(t) + ": ";
        const auto canon = try_canonicalize(spec);
        if (!canon) {
            o.fail(tag + "no canonical form");
            continue;
        }
        g_constructed.push_back(canon->spec());
        forms += " (" + std::to_string(canon->alpha) + "," + std::to_string(canon->n) + ")";
        const CssCode original = build(spec);
        const CssCode reduced = build(*canon);
        if (original.length() != reduced.length() || original.dimension() != reduced.dimension())
            o.fail(tag + "canonical form changes (length, k)");
        const DistanceReport r = determine(canon->alpha, canon->n);
        if (r.upper_bound != d) o.fail(tag + "certified upper bound " + std::to_string(r.upper_bound));
        if (r.lower_bound > d) o.fail(tag + "lower bound exceeds d");
        if (r.exact && *r.exact != d) o.fail(tag + "exact distance " + std::to_string(*r.exact));
        const bool small = reduced.kernel_dimension(Side::X) <= 26 && reduced.kernel_dimension(Side::Z) <= 26;
        if (small && (r.oracle_dx != d || r.oracle_dz != d)) o.fail(tag + "oracle does not confirm d");
        if (oracle::homology_bfs_distance(canon->alpha, canon->n) != d)
            o.fail(tag + "independent cycle search disagrees with d");
    }
    o.summary = "canonical (alpha, n):" + forms;
    return o;
}

Outcome equivalences() {
    Outcome o;
    std::mt19937_64 rng(kRandomSeed);
    const auto pick = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    const auto params = [](const CssCode& c) {
        return std::tuple(c.length(), c.dimension(), code_distance(c, 30));
    };
    const auto two_term = [](std::int64_t e, std::int64_t n) {
        return BinaryPolynomial::one() + BinaryPolynomial::monomial(static_cast<std::size_t>(e % n));
    };

    int canon_failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t n = pick(3, 18);
        std::int64_t r = pick(1, n - 1);
        while (std::gcd(r, n) != 1) r = pick(1, n - 1);
        const std::int64_t s = pick(1, n - 1);
        const GbSpec spec{two_term(r, n), two_term(s, n), static_cast<std::size_t>(n)};
        const CanonicalW2 canon = canonicalize_w2(r, s, n);
        g_constructed.push_back(spec);
        g_constructed.push_back(canon.spec());
        if (params(build(spec)) != params(build(canon))) {
            ++canon_failures;
            o.fail("canonicalization r=" + std::to_string(r) + " s=" + std::to_string(s) + " n=" +
                   std::to_string(n));
        }
    }
    int shift_failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t n = pick(3, 18);
        const std::int64_t r = pick(1, n - 1);
        const std::int64_t s = pick(1, n - 1);
        const std::int64_t i = pick(0, n - 1);
        const std::int64_t j = pick(0, n - 1);
        const GbSpec base{two_term(r, n), two_term(s, n), static_cast<std::size_t>(n)};
        const auto x = [](std::int64_t e) { return BinaryPolynomial::monomial(static_cast<std::size_t>(e)); };
        const GbSpec shifted{mul_mod(x(i), base.a, static_cast<std::size_t>(n)),
                             mul_mod(x(j), base.b, static_cast<std::size_t>(n)), static_cast<std::size_t>(n)};
        g_constructed.push_back(base);
        g_constructed.push_back(shifted);
        const auto expected = params(build(base));
        if (params(build(shifted)) != expected || params(build(shift_normalize(shifted))) != expected) {
            ++shift_failures;
            o.fail("shift i=" + std::to_string(i) + " j=" + std::to_string(j) + " r=" + std::to_string(r) +
                   " s=" + std::to_string(s) + " n=" + std::to_string(n));
        }
    }
    o.summary = "200 canonicalizations (" + std::to_string(canon_failures) + " failures), 200 shifts (" +
                std::to_string(shift_failures) + " failures)";
    return o;
}

Outcome arithmetic_scan() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::size_t mismatches = 0;
    for (std::uint64_t n = 1; n <= kArithmeticLimit; ++n) {
        // Residues in [0, n) so that n = 1 (where 0^2 = -1) is covered.
        bool any_root = false;
        for (std::uint64_t a = 0; a < n && !any_root; ++a) any_root = (a * a + 1) % n == 0;
        if (is_admissible(n) != any_root) {
            ++mismatches;
            o.fail("admissibility differs at n=" + std::to_string(n));
        }
        if (!any_root) continue;
        if (sqrt_minus_one_all(n) != oracle::scan_sqrt_minus_one(n)) {
            ++mismatches;
            o.fail("root set differs at n=" + std::to_string(n));
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed > kArithmeticSeconds) o.fail("runtime " + std::to_string(elapsed) + " s over the limit");
    std::ostringstream s;
    s << "n <= " << kArithmeticLimit << ", " << mismatches << " mismatches, " << elapsed << " s";
    o.summary = s.str();
    return o;
}

Outcome structure() {
    Outcome o;
    std::size_t codes = 0;
    for (const auto& spec : g_constructed) {
        ++codes;
        const BitMatrix hx = hstack(circulant(spec.a, spec.n), circulant(spec.b, spec.n));
        const BitMatrix hz =
            hstack(transpose(circulant(spec.b, spec.n)), transpose(circulant(spec.a, spec.n)));
        if (!mat_mul(hx, transpose(hz)).is_zero()) {
            o.fail("H_X H_Z^T != 0 for GB(" + spec.a.to_string() + ", " + spec.b.to_string() + ", " +
                   std::to_string(spec.n) + ")");
            continue;
        }
        if (build(spec).dimension() != dimension_formula(spec))
            o.fail("k mismatch for GB(" + spec.a.to_string() + ", " + spec.b.to_string() + ", " +
                   std::to_string(spec.n) + ")");
    }

    CatalogHeader header;
    header.max_length = kTableMaxLength;
    header.records = static_cast<std::int64_t>(g_table.size());
    std::istringstream in(to_ndjson(header, g_table));
    const VerifyResult v = verify_catalog(in);
    if (!v.ok() || v.records != g_table.size()) o.fail("catalog verify failed");
    for (const auto& issue : v.issues) o.fail("line " + std::to_string(issue.line) + ": " + issue.message);
    for (const auto& e : g_table)
        if (entry_from_json(nlohmann::json::parse(entry_to_json(e).dump())) != e)
            o.fail("round-trip changed n=" + std::to_string(e.n));

    o.summary = std::to_string(codes) + " codes, catalog of " + std::to_string(v.records) + " records";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"table reproduction", table_reproduction},
        {"lattice lower bound, n = 6..20", lower_bound_sweep},
        {"lambda^2 >= n and n | lambda^2", lattice_divisibility},
        {"oracle agreement", oracle_agreement},
        {"Kitaev family", kitaev_family},
        {"optimized Kitaev family", optimized_family},
        {"equivalences", equivalences},
        {"square roots of -1", arithmetic_scan},
        {"structural properties", structure},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": "
                  << o.summary << '\n';
        for (const auto& d : o.details) std::cout << "        " << d << '\n';
        std::cout.flush();
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
