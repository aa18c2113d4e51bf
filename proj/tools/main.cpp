#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "apery/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"invariants of simplicial affine semigroups"};
    app.require_subcommand(1);

    apery::CliConfig cfg;
    std::string gens, input, format = "json", property;

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--gens", gens, "generators, inline format \"c1,c2;c1,c2;...\"");
        cmd->add_option("--input", input, "file with generators (\"-\" for stdin)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full report for one semigroup");
    add_source(analyze);
    analyze->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    analyze->add_option("--hilbert-cap", cfg.hilbert_cap,
                        "cap for the Hilbert-Samuel estimate");

    CLI::App* check = app.add_subcommand("check", "test one property, exit code 0/1");
    check->add_option("property", property, "property to test")
        ->required()
        ->check(CLI::IsMember({"monomial-reduction", "cm", "gorenstein", "gr-cm",
                               "gr-gorenstein", "homogeneous", "minimal-multiplicity"}));
    add_source(check);

    CLI::App* batch = app.add_subcommand("batch", "one report per input record (JSON lines)");
    batch->add_option("--input", input, "file with one record per line (\"-\" for stdin)");
    batch->add_option("--hilbert-cap", cfg.hilbert_cap,
                      "cap for the Hilbert-Samuel estimate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    if (analyze->parsed()) cfg.command = apery::CliConfig::Command::analyze;
    if (check->parsed()) cfg.command = apery::CliConfig::Command::check;
    if (batch->parsed()) cfg.command = apery::CliConfig::Command::batch;
    if (!gens.empty()) cfg.gens_inline = gens;
    if (!input.empty()) cfg.input_path = input;
    if (batch->parsed() && !cfg.input_path) cfg.input_path = "-";
    cfg.output_format = format == "text" ? apery::CliConfig::Format::text
                                         : apery::CliConfig::Format::json;
    if (!property.empty()) cfg.check_property = property;

    return apery::run(cfg, std::cin, std::cout, std::cerr);
}
