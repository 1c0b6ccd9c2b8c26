#pragma once

#include <string>

namespace equiclone {

enum class OutputFormat { Csv, Json };

/// Everything a table command needs; identical configs render byte-identical
/// output (fixed float formatting, fixed row order, no timestamps).
struct RunConfig {
    std::string command;
    int nmax = 4;
    int mmax = 10;
    double lambda_min = -0.9;
    double lambda_max = 0.9;
    int steps = 10000;
    int grid = 128;
    OutputFormat format = OutputFormat::Csv;
    double tol = 1e-9;  // reporting tolerance; EQUICLONE_TOL overrides
};

/// 10 significant digits; lowercase-e scientific once |x| >= 1e6 or < 1e-4.
std::string fmt_float(double x);

/// Reporting tolerance: EQUICLONE_TOL when set (must parse to a positive
/// double), 1e-9 otherwise.
double reporting_tolerance();

struct CommandResult {
    std::string text;
    int exit_code = 0;  // 0 ok, 1 tolerance failure
};

CommandResult run_fidelity_table(const RunConfig& cfg);
CommandResult run_separability(const RunConfig& cfg);
CommandResult run_network_verify(const RunConfig& cfg);
CommandResult run_optimality(const RunConfig& cfg);

}  // namespace equiclone
