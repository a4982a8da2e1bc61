#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "semispace/report.hpp"

namespace {

using semispace::report::Format;
using semispace::report::RunConfig;

int write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return semispace::report::kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open '" << path << "' for writing\n";
        return semispace::report::kExitUsage;
    }
    out << text;
    return semispace::report::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semispace: semantic information measures over possible-worlds universes"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "csv";
    std::string ray_scheme = "ratio";
    std::string out_path;
    std::string assess_formula;

    auto add_common = [&](CLI::App* sub, const char* default_format) {
        sub->add_option("--atoms", cfg.atoms, "number of atoms (checked against --actual)");
        sub->add_option("--actual", cfg.actual, "the actual state, a conjunction of literals")
            ->required();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json", "svg"}))
            ->default_val(default_format);
        sub->add_option("--ray-scheme", ray_scheme, "angle labeling of rays")
            ->check(CLI::IsMember({"ratio", "paper"}));
        sub->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    CLI::App* table = app.add_subcommand("table", "enumerate the complete message table");
    add_common(table, "csv");

    CLI::App* assess = app.add_subcommand("assess", "TWSI/TSSI/MTSI assessment of one formula");
    add_common(assess, "json");
    assess->add_option("formula", assess_formula, "formula to assess")->required();

    CLI::App* space = app.add_subcommand("space", "all placements in the measure space");
    add_common(space, "csv");

    CLI::App* verify = app.add_subcommand("verify", "run the criterion checkers");
    add_common(verify, "csv");

    CLI::App* bcp = app.add_subcommand("bcp-demo", "content ranking and the paradox");
    add_common(bcp, "csv");

    CLI::App* guards = app.add_subcommand("guards-demo", "the two-guards example");
    guards->add_option("--out", out_path, "write output to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : semispace::report::kExitUsage;
    }

    if (format == "json")
        cfg.format = Format::Json;
    else if (format == "svg")
        cfg.format = Format::Svg;
    else
        cfg.format = Format::Csv;
    cfg.ray_scheme =
        ray_scheme == "paper" ? semispace::RayScheme::Paper : semispace::RayScheme::Ratio;

    try {
        if (table->parsed())
            return write_output(semispace::report::cmd_table(cfg), out_path);
        if (assess->parsed())
            return write_output(semispace::report::cmd_assess(cfg, assess_formula), out_path);
        if (space->parsed())
            return write_output(semispace::report::cmd_space(cfg), out_path);
        if (verify->parsed()) {
            std::string text;
            int code = semispace::report::cmd_verify(cfg, text);
            int write_code = write_output(text, out_path);
            return write_code != 0 ? write_code : code;
        }
        if (bcp->parsed())
            return write_output(semispace::report::cmd_bcp_demo(cfg), out_path);
        if (guards->parsed())
            return write_output(semispace::report::cmd_guards_demo(), out_path);
    } catch (const semispace::report::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return semispace::report::kExitUsage;
    } catch (const semispace::UniverseTooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return semispace::report::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return semispace::report::kExitUsage;
    }
    return semispace::report::kExitUsage;
}
