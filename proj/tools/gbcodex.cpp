#include <iostream>

#include "CLI11.hpp"
#include "gbcodex/commands.hpp"

namespace {

void add_budget_options(CLI::App* cmd, gbcodex::DistanceBudget& budget, bool& no_parity, bool& no_oracle) {
    cmd->add_option("--oracle-cap", budget.oracle_cap, "Largest kernel dimension the exhaustive oracle enumerates")
        ->capture_default_str();
    cmd->add_option("--slack", budget.certificate_slack, "Extra L1 radius scanned for staircase certificates")
        ->capture_default_str();
    cmd->add_option("--threads", budget.threads, "Oracle workers (0: GBCODEX_THREADS or all cores)");
    cmd->add_flag("--no-parity", no_parity, "Disable the parity-refined lower bound");
    cmd->add_flag("--no-oracle", no_oracle, "Never run the exhaustive oracle");
}

}  // namespace

int main(int argc, char** argv) {
    namespace cli = gbcodex::cli;
    CLI::App app{"Generalized bicycle (2,2) code construction and distance certification"};
    app.require_subcommand(1);

    cli::ConstructArgs construct;
    std::string a, b;
    std::int64_t alpha = 0;
    auto* c_construct = app.add_subcommand("construct", "Build GB(A, B, n) and print its parameters");
    auto* opt_a = c_construct->add_option("--a", a, "First generator, e.g. 1+x");
    auto* opt_b = c_construct->add_option("--b", b, "Second generator, e.g. 1+x^5");
    auto* opt_alpha = c_construct->add_option("--alpha", alpha, "Canonical form GB(1+x, 1+x^alpha, n)");
    c_construct->add_option("--n", construct.n, "Circulant size")->required();

    cli::DistanceArgs distance;
    bool d_no_parity = false, d_no_oracle = false;
    auto* c_distance = app.add_subcommand("distance", "Certify the distance of GB(1+x, 1+x^alpha, n)");
    c_distance->add_option("--alpha", distance.alpha)->required();
    c_distance->add_option("--n", distance.n)->required();
    add_budget_options(c_distance, distance.budget, d_no_parity, d_no_oracle);

    cli::BoundArgs bound;
    auto* c_bound = app.add_subcommand("bound", "Lattice lower bound for GB(1+x^u, 1+x^v, n)");
    c_bound->add_option("--u", bound.u)->required();
    c_bound->add_option("--v", bound.v)->required();
    c_bound->add_option("--n", bound.n)->required();

    cli::SweepArgs sweep;
    bool s_no_parity = false, s_no_oracle = false;
    auto* c_sweep = app.add_subcommand("sweep", "Catalog the best code for every admissible n");
    c_sweep->add_option("--max-length", sweep.max_length, "Largest code length 2n")->capture_default_str();
    c_sweep->add_option("--output,-o", sweep.output, "Output file (default: stdout)");
    c_sweep->add_option("--format", sweep.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    c_sweep->add_option("--seed", sweep.seed, "Seed for the non-residue search")->capture_default_str();
    add_budget_options(c_sweep, sweep.budget, s_no_parity, s_no_oracle);

    std::string verify_path;
    auto* c_verify = app.add_subcommand("verify", "Recheck every invariant of a catalog file");
    c_verify->add_option("catalog", verify_path, "NDJSON catalog")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kExitOk : cli::kExitUsage;
    }

    if (c_construct->parsed()) {
        if (*opt_a) construct.a = a;
        if (*opt_b) construct.b = b;
        if (*opt_alpha) construct.alpha = alpha;
        return cli::cmd_construct(construct, std::cout, std::cerr);
    }
    if (c_distance->parsed()) {
        distance.budget.use_parity = !d_no_parity;
        distance.budget.run_oracle = !d_no_oracle;
        return cli::cmd_distance(distance, std::cout, std::cerr);
    }
    if (c_bound->parsed()) {
        return cli::cmd_bound(bound, std::cout, std::cerr);
    }
    if (c_sweep->parsed()) {
        sweep.budget.use_parity = !s_no_parity;
        sweep.budget.run_oracle = !s_no_oracle;
        return cli::cmd_sweep(sweep, std::cout, std::cerr);
    }
    return cli::cmd_verify(verify_path, std::cout, std::cerr);
}
