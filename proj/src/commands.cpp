#include "gbcodex/commands.hpp"

#include <fstream>
#include <ostream>

#include "gbcodex/catalog.hpp"
#include "gbcodex/gbcode.hpp"

namespace gbcodex::cli {

namespace {

std::string vec_string(Vec2 v) { return "(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ")"; }

std::string support_string(const BitVector& v) {
    std::string s = "[";
    for (std::size_t i : v.support()) {
        if (s.size() > 1) s += ", ";
        s += std::to_string(i);
    }
    return s + "]";
}

}  // namespace

int cmd_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err) {
    if (args.n < 1) {
        err << "error: --n must be positive\n";
        return kExitUsage;
    }
    GbSpec spec;
    try {
        if (args.alpha) {
            if (args.a || args.b) {
                err << "error: give either --alpha or --a/--b, not both\n";
                return kExitUsage;
            }
            spec = CanonicalW2{*args.alpha, args.n}.spec();
        } else {
            if (!args.a || !args.b) {
                err << "error: --a and --b are both required without --alpha\n";
                return kExitUsage;
            }
            spec = {parse_polynomial(*args.a), parse_polynomial(*args.b), static_cast<std::size_t>(args.n)};
        }
        spec.validate();
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    }

    const CssCode code = build(spec);
    const std::size_t k_rank = code.dimension();
    const std::size_t k_formula = dimension_formula(spec);
    out << "code: GB(" << spec.a.to_string() << ", " << spec.b.to_string() << ", " << spec.n << ")\n";
    out << "length: " << code.length() << '\n';
    out << "k (rank): " << k_rank << '\n';
    out << "k (gcd formula): " << k_formula << (k_rank == k_formula ? " [agree]" : " [MISMATCH]") << '\n';
    if (k_rank != k_formula) {
        return kExitInvariant;
    }

    std::optional<CanonicalW2> canonical;
    try {
        canonical = try_canonicalize(spec);
    } catch (const NotReducible& ex) {
        out << "canonical: " << ex.what() << '\n';
    }
    if (canonical) {
        out << "canonical: alpha = " << canonical->alpha << ", n = " << canonical->n
            << (canonical->swapped ? " (generators swapped)" : "") << '\n';
    }

    out << "[[" << code.length() << ", " << k_rank << "]]";
    if (canonical) {
        const LatticeSummary lat = summarize_lattice(canonical->alpha, canonical->n);
        out << " λ²=" << lat.lambda_sq << " minL1=" << lat.min_l1;
    }
    out << '\n';
    if (k_rank == 0) {
        out << "distance: infinite\n";
    }
    return kExitOk;
}

int cmd_distance(const DistanceArgs& args, std::ostream& out, std::ostream& err) {
    if (args.n < 2 || args.alpha < 1 || args.alpha > args.n - 1) {
        err << "error: need n >= 2 and 1 <= alpha <= n-1\n";
        return kExitUsage;
    }
    DistanceReport r;
    try {
        r = determine(args.alpha, args.n, args.budget);
    } catch (const std::logic_error& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitInvariant;
    } catch (const std::runtime_error& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitInvariant;
    }
    out << "code: [[" << 2 * r.n << ", " << r.k << "]] GB(1+x, 1+x^" << r.alpha << ", " << r.n << ")\n";
    out << "lambda^2: " << r.lattice_bound.lambda_sq << '\n';
    out << "lower (lattice): " << r.lattice_bound.value
        << (r.lattice_bound.hypothesis_met ? "" : " [hypothesis n >= 6, 1 < alpha < n-1 unmet]") << '\n';
    if (r.parity_lower) {
        out << "lower (parity): " << *r.parity_lower << '\n';
    }
    out << "lower: " << r.lower_bound << '\n';
    out << "upper: " << r.upper_bound << " (staircase t = " << vec_string(r.certificate.displacement) << ")\n";
    if (r.exact) {
        out << "exact: " << *r.exact << '\n';
    } else {
        out << "interval: [" << r.lower_bound << ", " << r.upper_bound << "]\n";
    }
    out << "method: " << to_string(r.method);
    if (r.method == Method::SandwichClosed) {
        out << " (closed by " << to_string(r.closed_by) << " bound)";
    }
    out << '\n';
    if (r.oracle_dx) {
        out << "oracle: d_X = " << *r.oracle_dx << ", d_Z = " << *r.oracle_dz << '\n';
    } else {
        out << "oracle: not run (d_Z = d_X assumed from the GB symmetry)\n";
    }
    out << "certificate: " << support_string(r.certificate.vector) << '\n';
    return kExitOk;
}

int cmd_bound(const BoundArgs& args, std::ostream& out, std::ostream& err) {
    ReducedBound b;
    try {
        b = reduced_lower_bound(args.u, args.v, args.n);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    }
    out << "alpha: " << b.alpha << '\n';
    out << "lambda^2: " << b.bound.lambda_sq << '\n';
    out << "lower bound: " << b.bound.value << '\n';
    if (!b.bound.hypothesis_met) {
        out << "warning: n > max(6, u, v) with 1 < alpha < n-1 does not hold; the bound is not proven here\n";
    }
    return kExitOk;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    if (args.format != "json" && args.format != "csv") {
        err << "error: --format must be json or csv\n";
        return kExitUsage;
    }
    std::vector<CatalogEntry> entries;
    try {
        entries = sweep_catalog(args.max_length, args.budget, args.seed);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitInvariant;
    }
    std::string text;
    if (args.format == "csv") {
        text = to_csv(entries);
    } else {
        CatalogHeader h;
        h.max_length = args.max_length;
        h.seed = args.seed;
        h.oracle_cap = static_cast<std::int64_t>(args.budget.oracle_cap);
        h.parity = args.budget.use_parity;
        h.certificate_slack = args.budget.certificate_slack;
        h.records = static_cast<std::int64_t>(entries.size());
        text = to_ndjson(h, entries);
    }
    if (args.output.empty()) {
        out << text;
        return kExitOk;
    }
    try {
        write_text_file(args.output, text);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitInvariant;
    }
    out << "wrote " << entries.size() << " entries to " << args.output << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot read '" << path << "'\n";
        return kExitUsage;
    }
    const VerifyResult result = verify_catalog(in);
    for (const auto& w : result.warnings) {
        err << "warning: " << w << '\n';
    }
    for (const auto& issue : result.issues) {
        out << path << ":" << issue.line << ": " << issue.message << '\n';
    }
    out << (result.ok() ? "OK" : "FAILED") << ": " << result.records << " records, " << result.issues.size()
        << " issues\n";
    return result.ok() ? kExitOk : kExitInvariant;
}

}  // namespace gbcodex::cli
