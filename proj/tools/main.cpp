#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

using meridian::cli::Command;
using meridian::cli::RunConfig;

namespace {

void add_common(CLI::App* sub, RunConfig& cfg, std::string& format) {
    sub->add_option("--model", cfg.model, "attractive | repulsive | charged")
        ->check(CLI::IsMember({"attractive", "repulsive", "charged"}));
    sub->add_option("--charge", cfg.charges, "body charge, give three times with --model charged");
    sub->add_option("--mass", cfg.masses, "body mass, give three times (default 1 1 1)");
    sub->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("-o,--output", cfg.output, "write to file instead of stdout");
    sub->add_flag("--degrees", cfg.degrees, "angle inputs are in degrees");
    sub->add_flag("--metadata", cfg.metadata, "include run metadata (timing) in JSON");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"meridian: relative equilibria of three bodies on a rotating sphere meridian"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "json";

    auto* crit = app.add_subcommand("critical-angle", "largest arc bound a_c for scalene rotators");
    add_common(crit, cfg, format);

    auto* scal = app.add_subcommand("solve-scalene", "both scalene shapes with largest arc a");
    scal->add_option("--a", cfg.a, "largest arc (rad)");
    scal->add_option("--cos-a", cfg.cos_a, "cosine of the largest arc");
    add_common(scal, cfg, format);

    auto* iso = app.add_subcommand("solve-isosceles", "isosceles rotator with equal arcs theta");
    iso->add_option("--theta", cfg.theta, "equal arc (rad)")->required();
    add_common(iso, cfg, format);

    auto* en = app.add_subcommand("enumerate", "all relative equilibria with theta2 - theta1 = a");
    en->add_option("--a", cfg.a, "arc between bodies 1 and 2 (rad)")->required();
    add_common(en, cfg, format);

    auto* tr = app.add_subcommand("trace-contour", "zero set of the shape condition in the (x, a) plane");
    tr->add_option("--resolution", cfg.resolution, "grid cells per axis");
    tr->add_option("--tol", cfg.tol, "normalized acceptance tolerance for traced points");
    tr->add_option("--coords", cfg.coords, "xa | ya")->check(CLI::IsMember({"xa", "ya"}));
    add_common(tr, cfg, format);

    auto* fam = app.add_subcommand("family-table", "scalene family sampled uniformly in cos a");
    fam->add_option("--n", cfg.n, "number of rows");
    fam->add_option("--cos-start", cfg.cos_start, "first cos a value");
    add_common(fam, cfg, format);

    auto* ver = app.add_subcommand("verify", "equation-of-motion residuals for a configuration");
    ver->add_option("--theta1", cfg.theta1)->required();
    ver->add_option("--theta2", cfg.theta2)->required();
    ver->add_option("--theta3", cfg.theta3)->required();
    ver->add_option("--omega-sq", cfg.omega_sq)->required();
    ver->add_option("--tol", cfg.tol);
    add_common(ver, cfg, format);

    auto* reg = app.add_subcommand("regression", "closed-form worked example at cos a = -1/8");
    add_common(reg, cfg, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        // CLI11 uses its own codes for bad arguments; map them onto PRECONDITION.
        std::cerr << "PRECONDITION: " << e.what() << '\n';
        return meridian::cli::ExitPrecondition;
    }

    for (auto* sub : app.get_subcommands()) {
        cfg.command = *meridian::cli::parse_command(sub->get_name());
    }
    cfg.format = format == "csv" ? meridian::cli::Format::Csv : meridian::cli::Format::Json;

    const auto result = meridian::cli::run(cfg);
    if (result.exit_code != 0) {
        std::cerr << result.error_line << '\n';
        return result.exit_code;
    }
    if (cfg.output.empty()) {
        std::fwrite(result.output.data(), 1, result.output.size(), stdout);
        if (std::fflush(stdout) != 0) {
            std::cerr << "IO: failed writing stdout\n";
            return meridian::cli::ExitIo;
        }
    }
    return 0;
}
