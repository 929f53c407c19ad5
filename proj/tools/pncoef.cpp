#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pncoef/cli.hpp"

using namespace pncoef;

int main(int argc, char** argv) {
    CLI::App app{"exact coefficients of x1(x1+x2)...(x1+...+xn): triangle, identity\n"
                 "verification, maximal-coefficient search and the greedy growth procedure"};
    app.require_subcommand(1);

    cli::Options opts;
    app.add_option("--threads", opts.threads, "worker threads (0 = all cores)")
        ->capture_default_str();
    app.add_option("--oracle-bound", opts.oracle_bound,
                   "largest n for full-row expansion work")
        ->envname("PNCOEF_ORACLE_BOUND")
        ->capture_default_str();
    app.add_option("--brute-bound", opts.budget.bruteforce,
                   "largest n for exhaustive search")
        ->envname("PNCOEF_BRUTE_BOUND")
        ->capture_default_str();

    std::string format = "text";
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("-f,--format", format, "text, csv, json or bfile")
            ->check(CLI::IsMember({"text", "csv", "json", "bfile"}))
            ->capture_default_str();
    };

    int n = 0;
    auto* triangle = app.add_subcommand("triangle", "coefficient rows 1..n in display order");
    triangle->add_option("n", n, "number of rows")->required();
    add_format(triangle);

    auto* verify = app.add_subcommand("verify", "identity, oracle and round-trip suite");
    verify->add_option("n_max", n, "largest row to verify")->required();

    auto* max = app.add_subcommand("max", "maximal coefficient and its monomials");
    max->add_option("n", n, "row (or upper bound with --upto)")->required();
    std::string method = "stairs";
    max->add_option("-m,--method", method, "bruteforce, sorted or stairs")
        ->check(CLI::IsMember({"bruteforce", "sorted", "stairs"}))
        ->capture_default_str();
    bool upto = false;
    max->add_flag("--upto", upto, "rows 1..n with the quotient column");
    bool all_argmax = false;
    max->add_flag("--all-argmax", all_argmax, "list every maximizer, not just the first");
    add_format(max);

    auto* greedy = app.add_subcommand("greedy", "growth procedure up to length l");
    greedy->add_option("l", n, "final length")->required();
    bool coefficients_only = false;
    greedy->add_flag("--coefficients-only", coefficients_only,
                     "emit only the coefficient sequence");
    int trace_length = 0;
    greedy->add_option("--trace-step", trace_length,
                       "print every candidate with its coefficient at this step");
    add_format(greedy);

    auto* bijection = app.add_subcommand("bijection",
                                         "exponent vector / ballot / tree / pick table");
    bijection->add_option("n", n, "size")->required();
    add_format(bijection);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitUsage;
    }

    try {
        const cli::Format fmt = cli::parse_format(format);
        if (triangle->parsed())
            return cli::cmd_triangle(n, fmt, opts, std::cout, std::cerr);
        if (verify->parsed()) return cli::cmd_verify(n, opts, std::cout, std::cerr);
        if (max->parsed())
            return cli::cmd_max(n, upto, parse_method(method), all_argmax, fmt, opts, std::cout,
                                std::cerr);
        if (greedy->parsed())
            return cli::cmd_greedy(n, fmt, coefficients_only, trace_length, opts, std::cout,
                                   std::cerr);
        if (bijection->parsed())
            return cli::cmd_bijection(n, fmt, opts, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return cli::kExitUsage;
}
