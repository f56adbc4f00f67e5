// classify [--json] [--steps] [--digits N] [--vars x,y] [--truncation N] "<poly>"
// classify harness [--seed N] [--count N] [--types LIST]
#include "arnoldnf/report.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace arnoldnf;

int main(int argc, char** argv) {
    CLI::App app{"Arnold normal forms of corank <= 2, modality <= 2 singularities"};
    app.require_subcommand(0, 1);

    RunConfig cfg;
    long truncation = 0;
    app.add_option("poly", cfg.input, "polynomial, e.g. \"x^3+y^7+x*y^5\"");
    app.add_flag("--json", cfg.json, "JSON output");
    app.add_flag("--steps", cfg.trace, "print the transformation log");
    app.add_option("--digits", cfg.digits, "digits of decimal approximations")->check(CLI::PositiveNumber);
    app.add_option("--vars", cfg.vars, "comma separated variable names")->delimiter(',')->allow_extra_args(false);
    app.add_option("--truncation", truncation, "standard degree bound (default mu+2)")->check(CLI::Range(3L, 100000L));

    HarnessConfig hc;
    std::vector<std::string> types;
    auto* harness = app.add_subcommand("harness", "round-trip harness over the catalog");
    harness->add_option("--seed", hc.seed, "random seed");
    harness->add_option("--count", hc.count, "germs per row and transformation")->check(CLI::PositiveNumber);
    harness->add_option("--types", types, "semicolon separated type names, e.g. \"E_12;W#_{1,3}\"")->delimiter(';')->allow_extra_args(false);
    harness->add_option("--threads", hc.threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (harness->parsed()) {
        try {
            for (const auto& name : types) hc.types.push_back(parse_type(name));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
        std::cout << run_harness(hc, &std::cerr).dump(2) << "\n";
        return 0;
    }

    if (cfg.input.empty()) {
        std::cerr << app.help();
        return 1;
    }
    if (truncation) cfg.truncation = truncation;
    return run(cfg, std::cout, std::cerr);
}
