#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "equiclone/report.hpp"

namespace {

int emit(const equiclone::CommandResult& result, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << result.text;
        return result.exit_code;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return 2;
    }
    f << result.text;
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Phase-covariant cloning simulator and verification tables"};
    app.require_subcommand(1);

    equiclone::RunConfig cfg;
    std::string format = "csv";
    std::string out_path;

    const std::map<std::string, equiclone::OutputFormat> formats{
        {"csv", equiclone::OutputFormat::Csv}, {"json", equiclone::OutputFormat::Json}};

    auto add_output_options = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format (csv or json)")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out_path, "Write the table to a file instead of stdout");
    };

    CLI::App* fid = app.add_subcommand(
        "fidelity-table", "Closed-form vs simulated N->M fidelities with asymptotic limits");
    fid->add_option("--nmax", cfg.nmax, "Largest input-copy count N")->required();
    fid->add_option("--mmax", cfg.mmax, "Largest output-copy count M (<= 50)")->required();
    fid->add_option("--grid", cfg.grid, "Phase-grid points per simulated row");
    add_output_options(fid);

    CLI::App* sep = app.add_subcommand(
        "separability", "Partial-transpose spectra of the copy pair across the lambda family");
    sep->add_option("--min", cfg.lambda_min, "Sweep start (inside (-1,1))");
    sep->add_option("--max", cfg.lambda_max, "Sweep end (inside (-1,1))");
    sep->add_option("--steps", cfg.steps, "Number of sweep points");
    add_output_options(sep);

    CLI::App* net = app.add_subcommand(
        "network-verify", "Gate network vs direct isometry for UQCM, PC-XZ and PC-XY");
    net->add_option("--grid", cfg.grid, "Input-angle grid points");
    add_output_options(net);

    int opt_mmax = 50;
    CLI::App* opt = app.add_subcommand(
        "optimality", "Optimal 1->M fidelity three ways: closed form, A-matrix, eta Gram");
    opt->add_option("--mmax", opt_mmax, "Largest M (<= 50)");
    add_output_options(opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.tol = equiclone::reporting_tolerance();
        cfg.format = formats.at(format);
        equiclone::CommandResult result;
        if (fid->parsed()) {
            cfg.command = "fidelity-table";
            result = equiclone::run_fidelity_table(cfg);
        } else if (sep->parsed()) {
            cfg.command = "separability";
            result = equiclone::run_separability(cfg);
        } else if (net->parsed()) {
            cfg.command = "network-verify";
            result = equiclone::run_network_verify(cfg);
        } else {
            cfg.command = "optimality";
            cfg.mmax = opt_mmax;
            result = equiclone::run_optimality(cfg);
        }
        return emit(result, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
