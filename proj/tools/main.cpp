#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "tqgate/errors.hpp"

int main(int argc, char** argv) {
    using tqgate::cli::CommandOptions;

    CLI::App app{"Two-qubit gate models for T centers in silicon"};
    app.require_subcommand(1);

    CommandOptions opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--preset", opt.preset, "built-in preset name (scenario1, scenario2)");
        cmd->add_option("--config", opt.config_path, "JSON config file");
        cmd->add_option("--set", opt.sets, "override key=value (repeatable)")
            ->take_all();
        cmd->add_option("--output,-o", opt.output_path, "output file (default stdout)");
        cmd->add_option("--format", opt.format, "csv or json")->default_str("csv");
        cmd->add_flag("--raw-angular", opt.raw_angular,
                      "treat all frequencies as rad/s (no 2 pi conversion)");
    };
    auto add_axis = [&](CLI::App* cmd) {
        cmd->add_option("--vs", opt.vs, "parameter path for the sweep axis");
        cmd->add_option("--from", opt.from, "axis start (config units)");
        cmd->add_option("--to", opt.to, "axis end (config units)");
        cmd->add_option("--points", opt.points, "number of grid points");
        cmd->add_flag("--log", opt.log_scale, "logarithmic axis spacing");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate one scheme at the configured point");
    eval->add_option("--scheme", opt.schemes, "scheme name")->take_all();
    add_common(eval);

    CLI::App* sweep = app.add_subcommand("sweep", "1-D/2-D parameter sweep of one scheme");
    sweep->add_option("--scheme", opt.schemes, "scheme name")->take_all();
    add_common(sweep);
    add_axis(sweep);
    sweep->add_option("--vs2", opt.vs2, "second axis parameter");
    sweep->add_option("--from2", opt.from2, "second axis start");
    sweep->add_option("--to2", opt.to2, "second axis end");
    sweep->add_option("--points2", opt.points2, "second axis points");
    sweep->add_flag("--log2", opt.log2_scale, "second axis log spacing");

    CLI::App* optimize = app.add_subcommand("optimize", "numeric sigma_p optimum of the sb gate");
    optimize->add_option("--scheme", opt.schemes, "scheme name (sb)")->take_all();
    add_common(optimize);

    CLI::App* compare = app.add_subcommand("compare", "aligned multi-scheme table on one axis");
    compare->add_option("--schemes", opt.schemes, "comma-separated scheme names")
        ->delimiter(',')
        ->take_all();
    add_common(compare);
    add_axis(compare);

    CLI::App* oracle = app.add_subcommand("oracle-check",
                                          "numerical oracle vs closed forms report");
    oracle->add_option("--scheme", opt.schemes, "ib, ibf or sb")->take_all();
    add_common(oracle);
    oracle->add_option("--grid", opt.grid, "coarse or fine")->default_str("coarse");

    CLI11_PARSE(app, argc, argv);
    opt.verb = app.get_subcommands().front()->get_name();

    try {
        return tqgate::cli::run_command(opt, std::cout, std::cerr);
    } catch (const tqgate::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
