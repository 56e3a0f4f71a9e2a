// cuspdim: cusp data, q-expansions, multiplier checks and the dimension-one
// classification for weight 3/2 cusp forms with multiplier eps^3 on Gamma0(n).

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace cuspdim::cli;

    CLI::App app{"cusp and multiplier tooling for Gamma0(n)"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    std::string format = "text";
    app.add_option("--format", format, "json, tsv or text")
        ->envname("CUSPDIM_FORMAT")
        ->check(CLI::IsMember({"json", "tsv", "text"}));
    app.add_option("--precision", cfg.precision, "q-expansion terms, at least 16")
        ->envname("CUSPDIM_PRECISION")
        ->check(CLI::Range(std::size_t{16}, std::size_t{1} << 20));
    app.add_option("--tolerance", cfg.tolerance, "numeric tolerance for transformation checks")
        ->envname("CUSPDIM_TOLERANCE")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "RNG seed for verification suites")->envname("CUSPDIM_SEED");
    app.add_option("--oracle-cutoff", cfg.oracle_cutoff, "largest level the coset oracle will enumerate")
        ->envname("CUSPDIM_ORACLE_CUTOFF")
        ->check(CLI::PositiveNumber);

    std::string range;
    auto* classify = app.add_subcommand("classify", "classify a level n or a range a..b");
    classify->add_option("range", range, "n or a..b")->required();

    std::string level;
    bool oracle = false;
    auto* cusps = app.add_subcommand("cusps", "cusp classes of Gamma0(n) with widths");
    cusps->add_option("n", level, "level")->required();
    cusps->add_flag("--oracle", oracle, "cross-check against coset enumeration")->envname("CUSPDIM_ORACLE");

    std::vector<std::string> series;
    auto* qexp = app.add_subcommand("qexp", "exact q-expansion: eta [P] | eta3 [P] | theta l r [P] | etaq N d:r,... [P]");
    qexp->add_option("series", series, "series spec")->required();

    std::string suite;
    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(verify_suites()));
    verify->add_option("--samples", vopt.samples, "random samples for eta-law, eta3-law, cocycle");
    verify->add_option("--max-entry", vopt.max_entry, "entry bound for random matrices")->check(CLI::PositiveNumber);
    verify->add_option("--max-level", vopt.max_level, "last level for rr-identity")->check(CLI::PositiveNumber);
    verify->add_option("--rho-max-n", vopt.rho_max_n, "last level for rho")->check(CLI::PositiveNumber);
    verify->add_option("--rho-pairs", vopt.rho_pairs, "random pairs per (n, h) for rho");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        cfg.format = parse_format(format);
        if (*classify) return cmd_classify(range, cfg, std::cout);
        if (*cusps) return cmd_cusps(level, oracle, cfg, std::cout);
        if (*qexp) return cmd_qexp(series, cfg, std::cout);
        if (*verify) return cmd_verify(suite, cfg, vopt, std::cout);
    } catch (const UsageError& e) {
        std::cerr << "cuspdim: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "cuspdim: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "cuspdim: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "cuspdim: " << e.what() << '\n';
        return kMathFailure;
    }
    return kUsage;
}
