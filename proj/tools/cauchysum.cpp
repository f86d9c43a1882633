#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cauchysum/cli.hpp"

int main(int argc, char** argv) {
    using namespace cauchysum;

    cli::RunConfig cfg;
    std::string ring;
    std::string format;

    CLI::App app{"Exact Cauchy and min-matrix identities, each checked against a generic oracle"};
    app.add_option("command", cfg.command, "Subcommand")
        ->required()
        ->check(CLI::IsMember(cli::commands()));
    app.add_option("input", cfg.input, "Spec file (JSON), or - for stdin");
    app.add_option("--spec", cfg.inline_spec, "Inline spec JSON");
    app.add_option("--ring", ring, "rational | prime:P (overrides the spec's ring)");
    app.add_option("--seed", cfg.seed, "RNG seed");
    app.add_option("--trials", cfg.trials, "Trials per identity")->check(CLI::PositiveNumber);
    app.add_option("--n", cfg.max_n, "Maximum matrix size")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--kind", cfg.kind, "gen: cauchy | min")->check(CLI::IsMember({"cauchy", "min"}));
    app.add_option("--sizes", cfg.sizes, "canary: Hilbert sizes")->delimiter(',');
    app.add_flag("--minus-convention", cfg.minus_convention, "Negate ys on ingestion (entries 1/(x_i - y_j))");
    app.add_flag("--allow-degenerate", cfg.allow_degenerate, "gen: allow singular specs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitInputError;
    }
    if (!ring.empty()) cfg.ring = ring;
    if (!format.empty()) cfg.format = cli::parse_format(format);

    return cli::run(cfg, std::cout, std::cerr);
}
