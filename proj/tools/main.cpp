#include "abelnc/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

std::vector<std::string> identity_tokens() {
    std::vector<std::string> tokens;
    for (const auto identity : identities::catalog())
        tokens.emplace_back(identities::identity_token(identity));
    return tokens;
}

void add_oracle_flags(CLI::App& sub, oracle::OracleConfig& cfg) {
    sub.add_option("--dim", cfg.dim, "Matrix dimension for the oracle")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub.add_option("--modulus", cfg.modulus, "Prime modulus for the oracle")
        ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()))
        ->capture_default_str();
    sub.add_option("--trials", cfg.trials, "Number of random evaluations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for noncommutative Abel and Hurwitz identities"};
    app.require_subcommand(1);

    cli::GlobalOptions global;
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", global.seed, "Base seed for the randomized oracle")
        ->envname("ABELNC_SEED")
        ->capture_default_str();
    app.add_option("--warn-threshold", global.warn_threshold,
                   "Warn on stderr when n exceeds this")
        ->capture_default_str();
    app.add_flag("--no-timing", global.no_timing,
                 "Report elapsed_ms as 0 so equal inputs give byte-identical output");

    const std::vector<std::string> identities_list = identity_tokens();

    cli::VerifyCommand verify_cmd;
    std::string verify_identity;
    std::string verify_mode = "symbolic";
    int verify_m = 0;
    auto* verify = app.add_subcommand(
        "verify", "Build both sides of a catalog identity and compare them exactly");
    verify->fallthrough(); // global flags may follow the subcommand
    verify->add_option("--identity", verify_identity, "Catalog identity")
        ->required()
        ->check(CLI::IsMember(identities_list));
    verify->add_option("--n", verify_cmd.kase.n, "Number of noncommuting variables x_1..x_n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    auto* verify_m_opt =
        verify->add_option("--m", verify_m, "Power for polar2, 0 <= m < n")
            ->check(CLI::NonNegativeNumber);
    verify->add_option("--mode", verify_mode, "symbolic, oracle, or both")
        ->check(CLI::IsMember({"symbolic", "oracle", "both"}))
        ->capture_default_str();
    add_oracle_flags(*verify, verify_cmd.oracle_cfg);

    cli::ExpandCommand expand_cmd;
    auto* expand =
        app.add_subcommand("expand", "Expand an expression into canonical form");
    expand->fallthrough();
    expand
        ->add_option("--ring", expand_cmd.ring_decl,
                     "Ring declaration, e.g. \"central:c; free:X,x1\"")
        ->required();
    expand->add_option("--expr", expand_cmd.expr, "Expression to expand")->required();

    cli::FuzzCommand fuzz_cmd;
    std::string fuzz_mode = "oracle";
    auto* fuzz = app.add_subcommand(
        "fuzz", "Compare two expressions, probabilistically or exactly");
    fuzz->fallthrough();
    fuzz->add_option("--ring", fuzz_cmd.ring_decl, "Ring declaration")->required();
    fuzz->add_option("--lhs", fuzz_cmd.lhs, "Left-hand expression")->required();
    fuzz->add_option("--rhs", fuzz_cmd.rhs, "Right-hand expression")->required();
    fuzz->add_option("--mode", fuzz_mode, "oracle, symbolic, or both")
        ->check(CLI::IsMember({"symbolic", "oracle", "both"}))
        ->capture_default_str();
    add_oracle_flags(*fuzz, fuzz_cmd.oracle_cfg);

    cli::BenchCommand bench_cmd;
    std::string bench_identity = "thm1";
    auto* bench = app.add_subcommand(
        "bench", "Time the serial and OpenMP builders side by side");
    bench->fallthrough();
    bench->add_option("--identity", bench_identity, "Catalog identity")
        ->check(CLI::IsMember(identities_list))
        ->capture_default_str();
    bench->add_option("--n-min", bench_cmd.n_min, "Smallest n")->capture_default_str();
    bench->add_option("--n-max", bench_cmd.n_max, "Largest n")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    global.format = *cli::format_from_token(format);

    cli::Command command;
    command.global = global;
    if (verify->parsed()) {
        verify_cmd.kase.identity = *identities::identity_from_token(verify_identity);
        if (verify_m_opt->count() > 0)
            verify_cmd.kase.m = verify_m;
        verify_cmd.mode = *cli::mode_from_token(verify_mode);
        command.action = verify_cmd;
    } else if (expand->parsed()) {
        command.action = expand_cmd;
    } else if (fuzz->parsed()) {
        fuzz_cmd.mode = *cli::mode_from_token(fuzz_mode);
        command.action = fuzz_cmd;
    } else {
        bench_cmd.identity = *identities::identity_from_token(bench_identity);
        command.action = bench_cmd;
    }

    return cli::run(command, std::cout, std::cerr);
}
